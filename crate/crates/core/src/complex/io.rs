//! Plain-text complex files.
//!
//! One facet per line as space-separated positive integers; `.` alone is the
//! empty face; `#` starts a comment line; an optional `n=<k>` header fixes the
//! universe to `1..=k`, which otherwise is `1..=max label`.

use std::fmt::Write;

use super::{bits, ground_universe, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut declared: Option<usize> = None;
    let mut facets: Vec<Vec<u32>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(value) = line.strip_prefix("n=") {
            let n = value
                .trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("line {}: bad header {line:?}: {e}", lineno + 1)))?;
            declared = Some(n);
            continue;
        }
        if line == "." {
            facets.push(Vec::new());
            continue;
        }
        let facet = line
            .split_whitespace()
            .map(|tok| match tok.parse::<u32>() {
                Ok(v) if v >= 1 => Ok(v),
                _ => Err(Error::Parse(format!("line {}: {tok:?} is not a positive integer", lineno + 1))),
            })
            .collect::<Result<Vec<u32>>>()?;
        facets.push(facet);
    }
    let max = facets.iter().flatten().copied().max().unwrap_or(0) as usize;
    let n = match declared {
        Some(n) if n < max => return Err(Error::VertexOutOfUniverse(format!("{max} (header declares n={n})"))),
        Some(n) => n,
        None => max,
    };
    let labeled: Vec<Vec<Vertex>> = facets.iter().map(|f| f.iter().map(|&v| Vertex::Plain(v)).collect()).collect();
    SimplicialComplex::from_facets(ground_universe(n), &labeled)
}

/// Writes a complex in the file format, numbering vertices by universe position.
pub fn write_complex(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    writeln!(out, "n={}", k.universe().len()).unwrap();
    let mut lines: Vec<Vec<usize>> = k.facets().iter().map(|&f| bits(f).map(|i| i + 1).collect()).collect();
    lines.sort();
    for l in lines {
        if l.is_empty() {
            out.push_str(".\n");
        } else {
            let words: Vec<String> = l.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", words.join(" ")).unwrap();
        }
    }
    out
}
