//! h- and g-vectors of Bier spheres, the subcomplex `Δ'` and K-sequence realization.

use std::collections::HashSet;

use super::{bier_complex, bier_facets, Delta};
use crate::complex::{bits, full_mask, kk_compressed_complex, kk_is_ksequence, Face, FhgVectors};
use crate::error::{Error, Result};

/// `h_i = #{(A; x) : |A ∩ (x, n]| + |[1, x) ∖ A| = i}`, for `i = 0..n`.
pub fn h_via_restriction(delta: &Delta) -> Vec<i64> {
    let n = delta.n();
    let mut h = vec![0i64; n.max(1)];
    for f in bier_facets(delta) {
        let above = f.a & !full_mask(f.x);
        let missing_below = full_mask(f.x - 1) & !f.a;
        h[(above.count_ones() + missing_below.count_ones()) as usize] += 1;
    }
    h
}

/// The same statistic with the ground set read backwards:
/// `|A ∩ [1, x)| + |(x, n] ∖ A|`.
pub fn h_via_reversed_restriction(delta: &Delta) -> Vec<i64> {
    let n = delta.n();
    let mut h = vec![0i64; n.max(1)];
    for f in bier_facets(delta) {
        let below = f.a & full_mask(f.x - 1);
        let missing_above = full_mask(n) & !full_mask(f.x) & !f.a;
        h[(below.count_ones() + missing_above.count_ones()) as usize] += 1;
    }
    h
}

/// `g_i = f_i(Δ) - f_{n-i}(Δ)` for `0 <= i <= (n-1)/2`.
pub fn g_bier(delta: &Delta) -> Vec<i64> {
    let n = delta.n();
    let f = delta.f_vector();
    (0..=(n.max(1) - 1) / 2).map(|i| f[i] - f[n - i]).collect()
}

/// f, h and g of the constructed complex, read as an `(n-2)`-sphere.
pub fn sphere_vectors(delta: &Delta) -> Result<FhgVectors> {
    FhgVectors::of(bier_complex(delta).complex(), delta.n())
}

/// The largest face of size at least `n/2` (ties: smallest mask).
fn heavy_face(faces: &HashSet<Face>, n: usize) -> Option<Face> {
    faces
        .iter()
        .copied()
        .filter(|&c| c != 0 && 2 * c.count_ones() as usize >= n)
        .max_by_key(|&c| (c.count_ones(), std::cmp::Reverse(c)))
}

/// Involution pairing the elements outside `c`, in increasing order, with the
/// smallest elements of `c`; as an image table on bit positions.
fn pairing(c: Face, n: usize) -> Vec<usize> {
    let mut pi: Vec<usize> = (0..n).collect();
    let outside = bits(full_mask(n) & !c);
    for (d, e) in outside.zip(bits(c)) {
        pi[d] = e;
        pi[e] = d;
    }
    pi
}

/// A subcomplex `Δ' ⊆ Δ` with `f_i(Δ') = f_i(Δ) - f_{n-i}(Δ)` for `i <= n/2` and no larger faces.
pub fn delta_prime(delta: &Delta) -> Delta {
    let n = delta.n();
    let full = full_mask(n);
    let mut current: HashSet<Face> = delta.faces().iter().copied().collect();
    while let Some(c) = heavy_face(&current, n) {
        let pi = pairing(c, n);
        let phi = |b: Face| full & !bits(b).fold(0u64, |acc, v| acc | 1 << pi[v]);
        let k: Vec<Face> = current.iter().copied().filter(|&b| current.contains(&phi(b))).collect();
        debug_assert!(k.contains(&c));
        for b in k {
            current.remove(&b);
        }
    }
    Delta::from_closed(n, current.into_iter().collect())
}

/// A compressed `Δ` whose Bier sphere has g-vector `seq` (padded with zeros).
pub fn realize_ksequence(seq: &[i64], n: usize) -> Result<Delta> {
    if n == 0 {
        return Err(Error::BadParameter("n must be at least 1".into()));
    }
    if seq.is_empty() {
        return Err(Error::NotAKSequence("empty sequence".into()));
    }
    let k = seq.len() - 1;
    let max = (n - 1) / 2;
    if k > max {
        return Err(Error::IndexTooLarge(k, max));
    }
    if !kk_is_ksequence(seq) {
        return Err(Error::NotAKSequence(format!("{seq:?}")));
    }
    let complex = kk_compressed_complex(seq, n)?;
    Delta::from_complex(&complex, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::subsets_of_size;

    fn set(items: &[usize]) -> Face {
        items.iter().fold(0, |acc, &v| acc | 1 << (v - 1))
    }

    #[test]
    fn h_examples() {
        let d = Delta::generated(4, [set(&[1]), set(&[2]), set(&[3])]).unwrap();
        assert_eq!(h_via_restriction(&d), vec![1, 4, 4, 1]);
        assert_eq!(h_via_reversed_restriction(&d), vec![1, 4, 4, 1]);
        assert_eq!(h_via_restriction(&Delta::skeleton(3, 1).unwrap()), vec![1, 4, 1]);
        assert_eq!(h_via_restriction(&Delta::empty(3).unwrap()), vec![1, 1, 1]);
        assert_eq!(h_via_restriction(&Delta::empty(1).unwrap()), vec![1]);
    }

    #[test]
    fn g_examples() {
        let d = Delta::generated(4, [set(&[1]), set(&[2]), set(&[3])]).unwrap();
        assert_eq!(g_bier(&d), vec![1, 3]);
        let d = Delta::generated(4, [set(&[1, 2, 3]), set(&[4])]).unwrap();
        assert_eq!(d.f_vector(), vec![1, 4, 3, 1, 0]);
        assert_eq!(g_bier(&d), vec![1, 3]);
        assert_eq!(g_bier(&Delta::skeleton(5, 2).unwrap()), vec![1, 5, 10]);
        assert_eq!(g_bier(&Delta::empty(1).unwrap()), vec![1]);
    }

    #[test]
    fn sphere_vectors_of_three_singletons() {
        let d = Delta::generated(4, [set(&[1]), set(&[2]), set(&[3])]).unwrap();
        let v = sphere_vectors(&d).unwrap();
        assert_eq!(v.f, vec![1, 7, 15, 10]);
        assert_eq!(v.h, vec![1, 4, 4, 1]);
        assert_eq!(v.g, vec![1, 3]);
    }

    #[test]
    fn delta_prime_examples() {
        let d = Delta::generated(3, [set(&[1, 2]), set(&[3])]).unwrap();
        let p = delta_prime(&d);
        assert_eq!(p.faces(), &[0, set(&[2]), set(&[3])]);
        assert_eq!(p.f_vector(), vec![1, 2, 0, 0]);
        let small = Delta::skeleton(5, 2).unwrap();
        assert_eq!(delta_prime(&small), small);
        let big = Delta::generated(4, subsets_of_size(4, 3)).unwrap();
        assert_eq!(delta_prime(&big).faces(), &[0]);
    }

    #[test]
    fn realize_examples() {
        let d = realize_ksequence(&[1, 3], 4).unwrap();
        assert_eq!(d.faces(), &[0, set(&[1]), set(&[2]), set(&[3])]);
        assert_eq!(g_bier(&d), vec![1, 3]);
        let d = realize_ksequence(&[1, 7, 3], 7).unwrap();
        assert_eq!(d.f_vector()[..4], [1, 7, 3, 0]);
        assert_eq!(g_bier(&d), vec![1, 7, 3, 0]);
        assert!(matches!(realize_ksequence(&[1, 2, 4], 9), Err(Error::NotAKSequence(_))));
        assert!(matches!(realize_ksequence(&[1, 4, 3], 4), Err(Error::IndexTooLarge(2, 1))));
    }
}
