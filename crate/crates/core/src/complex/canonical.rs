//! Canonical labeling of complexes by individualization and color refinement.
//!
//! Vertices are colored by iterated structural signatures; while some color
//! class has several vertices, each of them is individualized in turn and the
//! coloring refined again. Every discrete coloring found this way is a candidate
//! labeling, and the canonical form is the lexicographically least sorted facet
//! encoding among the candidates. The candidate set only depends on the complex
//! up to relabeling, so equal forms mean isomorphic complexes and vice versa.

use serde::Serialize;

use super::{bits, SimplicialComplex};
use crate::error::{Error, Result};

/// Default number of candidate labelings examined before giving up.
pub const DEFAULT_LEAF_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm {
    pub vertices: usize,
    /// Facet masks over the canonical labels `0..vertices`, sorted ascending.
    pub facets: Vec<u64>,
}

pub fn canonicalize(k: &SimplicialComplex) -> Result<CanonicalForm> {
    canonicalize_with_budget(k, DEFAULT_LEAF_BUDGET)
}

pub fn canonicalize_with_budget(k: &SimplicialComplex, leaf_budget: usize) -> Result<CanonicalForm> {
    let k = k.compact();
    let m = k.universe().len();
    let facets: Vec<u64> = k.facets().to_vec();
    let incidence: Vec<Vec<u64>> = (0..m).map(|v| facets.iter().copied().filter(|f| f >> v & 1 == 1).collect()).collect();
    let mut search = Search { facets: &facets, incidence: &incidence, best: None, leaves: 0, leaf_budget };
    let colors = search.refine(vec![0; m]);
    search.descend(colors)?;
    let facets = search.best.unwrap_or_default();
    Ok(CanonicalForm { vertices: m, facets })
}

/// Isomorphism of complexes, ignoring vertices that lie in no face.
pub fn is_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<bool> {
    if a.is_void() || b.is_void() {
        return Ok(a.is_void() && b.is_void());
    }
    if a.f_vector(0)? != b.f_vector(0)? {
        return Ok(false);
    }
    Ok(canonicalize(a)? == canonicalize(b)?)
}

struct Search<'a> {
    facets: &'a [u64],
    incidence: &'a [Vec<u64>],
    best: Option<Vec<u64>>,
    leaves: usize,
    leaf_budget: usize,
}

impl Search<'_> {
    /// Refines `colors` until stable; colors are renumbered to `0..classes`
    /// in an order that only depends on the signatures.
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let mut classes = count_classes(&colors);
        loop {
            let signatures: Vec<(u32, Vec<Vec<u32>>)> = (0..colors.len())
                .map(|v| {
                    let mut around: Vec<Vec<u32>> = self.incidence[v]
                        .iter()
                        .map(|&f| {
                            let mut c: Vec<u32> = bits(f & !(1 << v)).map(|u| colors[u]).collect();
                            c.sort_unstable();
                            c
                        })
                        .collect();
                    around.sort_unstable();
                    (colors[v], around)
                })
                .collect();
            let mut distinct: Vec<&(u32, Vec<Vec<u32>>)> = signatures.iter().collect();
            distinct.sort_unstable();
            distinct.dedup();
            colors = signatures
                .iter()
                .map(|s| distinct.binary_search(&s).expect("signature present") as u32)
                .collect();
            let refined = distinct.len();
            if refined == classes {
                return colors;
            }
            classes = refined;
        }
    }

    fn descend(&mut self, colors: Vec<u32>) -> Result<()> {
        let m = colors.len();
        // first color class with more than one vertex
        let mut counts = vec![0usize; m];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let Some(target) = (0..m).find(|&c| counts[c] > 1) else {
            return self.leaf(&colors);
        };
        for v in (0..m).filter(|&v| colors[v] as usize == target) {
            let split: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| if u == v { 2 * c } else { 2 * c + 1 })
                .collect();
            let refined = self.refine(split);
            self.descend(refined)?;
        }
        Ok(())
    }

    fn leaf(&mut self, colors: &[u32]) -> Result<()> {
        self.leaves += 1;
        if self.leaves > self.leaf_budget {
            return Err(Error::TooLarge(format!("more than {} candidate labelings", self.leaf_budget)));
        }
        let mut encoded: Vec<u64> = self
            .facets
            .iter()
            .map(|&f| bits(f).fold(0u64, |acc, v| acc | 1 << colors[v]))
            .collect();
        encoded.sort_unstable();
        if self.best.as_ref().is_none_or(|b| encoded < *b) {
            self.best = Some(encoded);
        }
        Ok(())
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}
