//! Central symmetry and near neighborliness of Bier spheres.

use super::{bier_complex, format_set, Delta};
use crate::complex::{bits, full_mask, submasks, Face};
use crate::error::{Error, Result};

/// Largest ground set on which self-duality is checked over all subsets.
const SCAN_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryStatus {
    /// `A ∈ Δ ⇔ [1,n] ∖ A ∉ Δ` for every `A`.
    pub complement_condition: bool,
    /// First subset violating the complement condition.
    pub complement_witness: Option<Face>,
    /// `v⁻ ↔ v⁺` is defined on every vertex, maps faces to faces and no `{v⁻, v⁺}` is an edge.
    /// Elements with neither copy as a vertex are ignored.
    pub pairing_ok: bool,
    pub centrally_symmetric: bool,
    pub k: Option<usize>,
    /// Every `B` with `|B| <= k` lies in `Δ`.
    pub small_sets_present: Option<bool>,
    pub k_nearly_neighborly: Option<bool>,
    /// Every antipode-free vertex set of size at most `k` is a face.
    pub antipode_free_faces: Option<bool>,
    /// Antipode-free sets of size exactly `k` that were checked.
    pub antipode_free_of_size_k: usize,
}

pub fn symmetry_checks(delta: &Delta, k: Option<usize>) -> Result<SymmetryStatus> {
    let n = delta.n();
    if n > SCAN_LIMIT {
        return Err(Error::TooLarge(format!("symmetry scan over n = {n}")));
    }
    if let Some(k) = k {
        let top = n.saturating_sub(1) / 2;
        if k < 2 || k > top {
            return Err(Error::IndexOutOfRange(k, format!("2..={top}")));
        }
    }
    let full = full_mask(n);
    let complement_witness = (0..=full).find(|&a| delta.contains(a) == delta.contains(full & !a));
    let complement_condition = complement_witness.is_none();

    let sphere = bier_complex(delta);
    let complex = sphere.complex();
    // elements with both copies present; an element may have neither
    let present = (1..=n)
        .filter(|&v| sphere.vertex(v, true).is_some() && sphere.vertex(v, false).is_some())
        .fold(0u64, |acc, v| acc | 1 << (v - 1));
    let matched = (1..=n).all(|v| sphere.vertex(v, true).is_some() == sphere.vertex(v, false).is_some());
    let pairing_ok = matched
        && complex.facets().iter().all(|&f| sphere.antipode(f).is_some_and(|g| complex.contains_face(g)))
        && bits(present).all(|v| {
            let edge = 1u64 << sphere.vertex(v + 1, true).unwrap() | 1u64 << sphere.vertex(v + 1, false).unwrap();
            !complex.contains_face(edge)
        });
    let centrally_symmetric = complement_condition && pairing_ok;

    let mut status = SymmetryStatus {
        complement_condition,
        complement_witness,
        pairing_ok,
        centrally_symmetric,
        k,
        small_sets_present: None,
        k_nearly_neighborly: None,
        antipode_free_faces: None,
        antipode_free_of_size_k: 0,
    };
    if let Some(k) = k {
        let small = (0..=full).filter(|a| a.count_ones() as usize <= k).all(|a| delta.contains(a));
        status.small_sets_present = Some(small);
        status.k_nearly_neighborly = Some(complement_condition && small);
        if matched {
            // antipode-free sets: S⁻ ∪ T⁺ with S, T disjoint
            let mut all_faces = true;
            let mut of_size_k = 0;
            for support in submasks(present).filter(|s| s.count_ones() as usize <= k) {
                for s in submasks(support) {
                    let t = support & !s;
                    let face = sphere.interval_face(&super::Interval { b: s, c: full & !t })?;
                    if support.count_ones() as usize == k {
                        of_size_k += 1;
                    }
                    if !complex.contains_face(face) {
                        all_faces = false;
                    }
                }
            }
            status.antipode_free_faces = Some(all_faces);
            status.antipode_free_of_size_k = of_size_k;
        } else {
            status.antipode_free_faces = Some(false);
        }
    }
    Ok(status)
}

/// Sets of size `n/2` containing element 1; each is one member of a complementary pair.
fn middle_representatives(n: usize) -> Vec<Face> {
    (0..=full_mask(n)).filter(|&a| a & 1 == 1 && 2 * a.count_ones() as usize == n).collect()
}

/// `Δ` satisfying the complement condition: all sets smaller than `n/2`, plus
/// `choice` (exactly one set from each complementary pair of `n/2`-sets) for even `n`.
pub fn cs_construct(n: usize, choice: &[Face]) -> Result<Delta> {
    if n == 0 || n > SCAN_LIMIT {
        return Err(Error::BadParameter(format!("n = {n} outside 1..={SCAN_LIMIT}")));
    }
    if n % 2 == 1 {
        if !choice.is_empty() {
            return Err(Error::InvalidChoice(format!("n = {n} is odd and takes no middle sets")));
        }
        return Delta::skeleton(n, n / 2);
    }
    let full = full_mask(n);
    let mut chosen = std::collections::HashSet::new();
    for &a in choice {
        if a & !full != 0 || 2 * a.count_ones() as usize != n {
            return Err(Error::InvalidChoice(format!("{} is not a subset of size {}", format_set(a), n / 2)));
        }
        chosen.insert(a);
    }
    for rep in middle_representatives(n) {
        let comp = full & !rep;
        match (chosen.contains(&rep), chosen.contains(&comp)) {
            (true, true) => {
                return Err(Error::InvalidChoice(format!("both {} and {}", format_set(rep), format_set(comp))))
            }
            (false, false) => {
                return Err(Error::InvalidChoice(format!("neither {} nor {}", format_set(rep), format_set(comp))))
            }
            _ => {}
        }
    }
    let generators = (0..=full).filter(|a| 2 * (a.count_ones() as usize) < n).chain(chosen);
    Delta::generated(n, generators.collect::<Vec<_>>())
}

/// Every valid middle-level choice for [`cs_construct`]; a single empty choice for odd `n`.
pub fn cs_selections(n: usize) -> Result<Vec<Vec<Face>>> {
    if n % 2 == 1 {
        return Ok(vec![Vec::new()]);
    }
    let reps = middle_representatives(n);
    if reps.len() > 16 {
        return Err(Error::TooLarge(format!("2^{} middle-level selections", reps.len())));
    }
    let full = full_mask(n);
    Ok((0..1u64 << reps.len())
        .map(|bits| {
            reps.iter()
                .enumerate()
                .map(|(i, &r)| if bits >> i & 1 == 1 { full & !r } else { r })
                .collect()
        })
        .collect())
}
