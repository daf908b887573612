use std::collections::HashSet;

use super::{bits, Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Outcome of checking a facet order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingCheck {
    pub valid: bool,
    /// Restriction face (unique minimal new face) of each step that was checked.
    pub restrictions: Vec<Face>,
    /// First step (0-based) where the order stops being a shelling.
    pub failed_step: Option<usize>,
}

impl ShellingCheck {
    /// `h_i` = number of steps whose restriction face has `i` vertices.
    pub fn h_vector(&self, len: usize) -> Vec<i64> {
        let mut h = vec![0i64; len];
        for r in &self.restrictions {
            let i = r.count_ones() as usize;
            if i < len {
                h[i] += 1;
            }
        }
        h
    }
}

/// Vertices `v` of `facet` such that `facet \ {v}` lies in an earlier facet, or
/// `None` if `facet` meets the earlier ones in something that is not pure of
/// codimension one.
fn restriction_face(facet: Face, earlier: &[Face]) -> Option<Face> {
    if earlier.is_empty() {
        return Some(0);
    }
    let r = bits(facet)
        .filter(|&v| {
            let ridge = facet & !(1 << v);
            earlier.iter().any(|&g| ridge & !g == 0)
        })
        .fold(0u64, |acc, v| acc | 1 << v);
    earlier.iter().all(|&g| facet & !g & r != 0).then_some(r)
}

/// Checks whether `order` is a shelling of the pure complex `k`.
pub fn is_shelling(k: &SimplicialComplex, order: &[Face]) -> Result<ShellingCheck> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    let given: HashSet<Face> = order.iter().copied().collect();
    let facets: HashSet<Face> = k.facets().iter().copied().collect();
    if given.len() != order.len() || given != facets {
        return Err(Error::NotAPermutation(format!("{} facets given, complex has {}", order.len(), facets.len())));
    }
    let mut restrictions = Vec::with_capacity(order.len());
    for (j, &facet) in order.iter().enumerate() {
        match restriction_face(facet, &order[..j]) {
            Some(r) => restrictions.push(r),
            None => return Ok(ShellingCheck { valid: false, restrictions, failed_step: Some(j) }),
        }
    }
    Ok(ShellingCheck { valid: true, restrictions, failed_step: None })
}

/// Depth-first search for a shelling order, trying facets in ascending order.
///
/// Returns `Ok(None)` when the search space is exhausted and `TooLarge` once
/// more than `budget` partial orders have been extended.
pub fn find_shelling(k: &SimplicialComplex, budget: usize) -> Result<Option<Vec<Face>>> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    let facets = k.facets();
    if facets.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let mut used = vec![false; facets.len()];
    let mut order = Vec::with_capacity(facets.len());
    let mut spent = 0usize;
    let found = extend(facets, &mut used, &mut order, &mut spent, budget)?;
    Ok(found.then_some(order))
}

fn extend(facets: &[Face], used: &mut [bool], order: &mut Vec<Face>, spent: &mut usize, budget: usize) -> Result<bool> {
    if order.len() == facets.len() {
        return Ok(true);
    }
    *spent += 1;
    if *spent > budget {
        return Err(Error::TooLarge(format!("no shelling found within {budget} search steps")));
    }
    for i in 0..facets.len() {
        if used[i] || restriction_face(facets[i], order).is_none() {
            continue;
        }
        used[i] = true;
        order.push(facets[i]);
        if extend(facets, used, order, spent, budget)? {
            return Ok(true);
        }
        order.pop();
        used[i] = false;
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ground_universe;

    fn hexagon() -> SimplicialComplex {
        SimplicialComplex::from_masks(ground_universe(6), (0..6).map(|i| 1u64 << i | 1u64 << ((i + 1) % 6))).unwrap()
    }

    #[test]
    fn cyclic_order_shells_the_hexagon() {
        let order: Vec<Face> = (0..6).map(|i| 1u64 << i | 1u64 << ((i + 1) % 6)).collect();
        let check = is_shelling(&hexagon(), &order).unwrap();
        assert!(check.valid);
        assert_eq!(check.h_vector(3), vec![1, 4, 1]);
    }

    #[test]
    fn disjoint_second_facet_fails() {
        let order: Vec<Face> = [0, 3, 1, 2, 4, 5].iter().map(|&i| 1u64 << i | 1u64 << ((i + 1) % 6)).collect();
        let check = is_shelling(&hexagon(), &order).unwrap();
        assert!(!check.valid);
        assert_eq!(check.failed_step, Some(1));
    }

    #[test]
    fn single_facet_and_errors() {
        let simplex = SimplicialComplex::simplex(ground_universe(3)).unwrap();
        assert!(is_shelling(&simplex, &[0b111]).unwrap().valid);
        assert!(matches!(is_shelling(&simplex, &[0b011]), Err(Error::NotAPermutation(_))));
        let impure = SimplicialComplex::on_ground_set(3, [0b011, 0b100]).unwrap();
        assert_eq!(is_shelling(&impure, &[0b011, 0b100]), Err(Error::NotPure));
    }

    #[test]
    fn search_finds_shellings_and_rejects_disconnected() {
        let order = find_shelling(&hexagon(), 1000).unwrap().unwrap();
        assert!(is_shelling(&hexagon(), &order).unwrap().valid);
        // two disjoint edges are not shellable
        let two_edges = SimplicialComplex::on_ground_set(4, [0b0011, 0b1100]).unwrap();
        assert_eq!(find_shelling(&two_edges, 1000).unwrap(), None);
        // two points are
        let points = SimplicialComplex::on_ground_set(2, [0b01, 0b10]).unwrap();
        assert!(find_shelling(&points, 10).unwrap().is_some());
    }
}
