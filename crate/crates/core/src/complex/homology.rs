use std::collections::HashMap;

use super::{bits, Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Rank over GF(2) of a set of bit-packed rows.
fn gf2_rank(rows: Vec<Vec<u64>>) -> usize {
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for mut row in rows {
        loop {
            let lead = row.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, &w)| i * 64 + w.trailing_zeros() as usize);
            let Some(lead) = lead else { break };
            match pivots.get(&lead) {
                Some(pivot) => row.iter_mut().zip(pivot).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Rank of the boundary map from faces with `k` vertices to faces with `k - 1`.
fn boundary_rank(upper: &[Face], lower: &[Face]) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let column: HashMap<Face, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let words = lower.len().div_ceil(64);
    let rows = upper
        .iter()
        .map(|&face| {
            let mut row = vec![0u64; words];
            for v in bits(face) {
                let c = column[&(face & !(1 << v))];
                row[c / 64] |= 1 << (c % 64);
            }
            row
        })
        .collect();
    gf2_rank(rows)
}

/// Reduced Betti numbers `b̃_0, ..., b̃_dim` over GF(2).
///
/// The complex `{∅}` has dimension -1 and yields an empty vector (its only
/// nonzero reduced Betti number sits in degree -1).
pub fn homology_gf2(k: &SimplicialComplex) -> Result<Vec<usize>> {
    let dim = k.dim().ok_or(Error::VoidComplex)?;
    let top = (dim + 1) as usize;
    let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); top + 2];
    for face in k.faces() {
        by_size[face.count_ones() as usize].push(face);
    }
    // ranks[s] = rank of ∂ from size-s faces to size-(s-1) faces
    let ranks: Vec<usize> =
        (0..top + 2).map(|s| if s == 0 { 0 } else { boundary_rank(&by_size[s], &by_size[s - 1]) }).collect();
    Ok((1..=top).map(|s| by_size[s].len() - ranks[s] - ranks[s + 1]).collect())
}
