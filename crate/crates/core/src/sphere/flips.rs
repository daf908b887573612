//! Adding a face to `Δ` as a bistellar flip of its Bier sphere, and the
//! flip certificates of the lower-bound corollary.

use super::{bier_complex, format_set, g_bier, Delta};
use crate::complex::{bistellar_flip, bits, canonicalize, full_mask, binomial, Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// Outcome of adding the face `G` to `Δ`.
#[derive(Debug, Clone)]
pub struct FaceFlip {
    pub added: Face,
    pub result: Delta,
    /// `A = {b⁺ : b ∉ G}`.
    pub removed: Vec<Vertex>,
    /// `B = {a⁻ : a ∈ G}`.
    pub inserted: Vec<Vertex>,
    pub index: usize,
    pub flipped: SimplicialComplex,
    /// The flip output equals `Bier(B_n, Δ ∪ {G})` vertex for vertex.
    pub matches_labeled: bool,
    pub matches_canonical: bool,
    pub g_before: Vec<i64>,
    pub g_after: Vec<i64>,
    /// `g_before` shifted by [`g_shift`].
    pub g_expected: Vec<i64>,
}

/// Expected g-vector after a bistellar `i`-flip on a `d`-sphere.
///
/// For `i <= (d-1)/2`, `g_{i+1}` grows by one; for even `d` and `i = d/2`
/// nothing changes; for `i > d/2` the flip undoes a `(d-i)`-flip and `g_{d-i+1}`
/// drops by one.
pub fn g_shift(g: &[i64], d: usize, i: usize) -> Vec<i64> {
    let mut out = g.to_vec();
    let bump = |out: &mut Vec<i64>, j: usize, by: i64| {
        if out.len() <= j {
            out.resize(j + 1, 0);
        }
        out[j] += by;
    };
    if 2 * i < d {
        bump(&mut out, i + 1, 1);
    } else if 2 * i > d {
        bump(&mut out, d - i + 1, -1);
    }
    out
}

/// Flips `gamma`, assumed to be the Bier sphere of some `Δ` over `[1, n]`, at
/// `A = {b⁺ : b ∉ G}`.
fn flip_for_face(gamma: &SimplicialComplex, n: usize, g: Face) -> Result<crate::complex::Flip> {
    let a: Vec<Vertex> = bits(full_mask(n) & !g).map(|b| Vertex::Plus(b as u32 + 1)).collect();
    let face = gamma.mask_of(&a)?;
    let fresh = (g.count_ones() == 1).then(|| Vertex::Minus(g.trailing_zeros() + 1));
    bistellar_flip(gamma, face, fresh)
}

pub fn add_face_flip(delta: &Delta, g: Face) -> Result<FaceFlip> {
    let n = delta.n();
    if !delta.is_addable(g) {
        let why = if g & !full_mask(n) != 0 || g == full_mask(n) {
            "not a proper subset of the ground set"
        } else if delta.contains(g) {
            "already a face"
        } else {
            "some proper subset is missing"
        };
        return Err(Error::NotAddable(format_set(g), why.into()));
    }
    let before = bier_complex(delta);
    let flip = flip_for_face(before.complex(), n, g)?;
    let result = delta.with_face(g)?;
    let after = bier_complex(&result);
    let matches_labeled = flip.complex.same_faces(after.complex());
    let matches_canonical = canonicalize(&flip.complex)? == canonicalize(after.complex())?;
    let g_before = g_bier(delta);
    let g_after = g_bier(&result);
    let g_expected = g_shift(&g_before, n.saturating_sub(2), flip.index);
    Ok(FaceFlip {
        added: g,
        result,
        removed: flip.removed,
        inserted: flip.inserted,
        index: flip.index,
        flipped: flip.complex,
        matches_labeled,
        matches_canonical,
        g_before,
        g_after,
        g_expected,
    })
}

/// One step of a flip certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipStep {
    pub face: Face,
    pub index: usize,
    /// The flipped complex has the canonical form of the Bier sphere of the
    /// complex built so far.
    pub verified: bool,
}

#[derive(Debug, Clone)]
pub struct LbcStatus {
    pub k: usize,
    pub g_k: i64,
    pub g_k_zero: bool,
    /// `f_k(Δ) = 0` or `f_{n-k}(Δ) = C(n, n-k)`.
    pub level_extreme: bool,
    /// Present when `level_extreme` holds.
    pub certificate: Option<Certificate>,
}

/// Faces added one at a time to `{∅}`, each a bistellar flip of the current sphere.
#[derive(Debug, Clone)]
pub struct Certificate {
    /// The faces build the Alexander dual `Δ*`, whose sphere is `Bier(B_n, Δ)` with `v⁻ ↔ v⁺`.
    pub via_dual: bool,
    pub steps: Vec<FlipStep>,
    /// The start complex is the boundary of the `(n-1)`-simplex.
    pub starts_at_simplex_boundary: bool,
    /// The last complex has the canonical form of `Bier(B_n, Δ)`.
    pub reaches_target: bool,
}

impl Certificate {
    pub fn max_index(&self) -> Option<usize> {
        self.steps.iter().map(|s| s.index).max()
    }

    pub fn valid(&self, k: usize) -> bool {
        self.starts_at_simplex_boundary
            && self.reaches_target
            && self.steps.iter().all(|s| s.verified && s.index + 2 <= k)
    }
}

pub fn lbc_status(delta: &Delta, k: usize) -> Result<LbcStatus> {
    let n = delta.n();
    let top = n.saturating_sub(1) / 2;
    if k < 2 || k > top {
        return Err(Error::IndexOutOfRange(k, format!("2..={top}")));
    }
    let g_k = g_bier(delta)[k];
    let f = delta.f_vector();
    let empty_level = f[k] == 0;
    let full_level = f[n - k] as u64 == binomial(n as u64, (n - k) as u64);
    let certificate = if empty_level {
        Some(certificate(delta, delta.clone(), false)?)
    } else if full_level {
        Some(certificate(delta, delta.dual()?, true)?)
    } else {
        None
    };
    Ok(LbcStatus { k, g_k, g_k_zero: g_k == 0, level_extreme: empty_level || full_level, certificate })
}

fn certificate(delta: &Delta, source: Delta, via_dual: bool) -> Result<Certificate> {
    let n = delta.n();
    let mut current = Delta::empty(n)?;
    let mut gamma = bier_complex(&current).complex().clone();
    let plus: Vec<Vertex> = (1..=n as u32).map(Vertex::Plus).collect();
    let starts_at_simplex_boundary = gamma.same_faces(&SimplicialComplex::simplex_boundary(plus)?);
    let mut steps = Vec::new();
    for &g in source.faces().iter().filter(|&&g| g != 0) {
        let flip = flip_for_face(&gamma, n, g)?;
        current = current.with_face(g)?;
        let verified = same_up_to_relabeling(&flip.complex, bier_complex(&current).complex())?;
        steps.push(FlipStep { face: g, index: flip.index, verified });
        gamma = flip.complex;
    }
    if via_dual {
        gamma = gamma.relabel(|v| match *v {
            Vertex::Minus(x) => Vertex::Plus(x),
            Vertex::Plus(x) => Vertex::Minus(x),
            other => other,
        })?;
    }
    let reaches_target = current == source && same_up_to_relabeling(&gamma, bier_complex(delta).complex())?;
    Ok(Certificate { via_dual, steps, starts_at_simplex_boundary, reaches_target })
}

/// Equal canonical forms; identical labeled complexes are accepted without canonicalizing.
fn same_up_to_relabeling(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<bool> {
    Ok(a.same_faces(b) || canonicalize(a)? == canonicalize(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[usize]) -> Face {
        items.iter().fold(0, |acc, &v| acc | 1 << (v - 1))
    }

    #[test]
    fn hexagon_to_pentagon() {
        let d = Delta::skeleton(3, 1).unwrap();
        let flip = add_face_flip(&d, set(&[1, 2])).unwrap();
        assert_eq!(flip.removed, vec![Vertex::Plus(3)]);
        assert_eq!(flip.inserted, vec![Vertex::Minus(1), Vertex::Minus(2)]);
        assert_eq!(flip.index, 1);
        assert!(flip.matches_labeled && flip.matches_canonical);
        assert_eq!(flip.flipped.f_vector(2).unwrap(), vec![1, 5, 5]);
        let expected: std::collections::BTreeSet<std::collections::BTreeSet<Vertex>> = [
            [Vertex::Minus(1), Vertex::Plus(2)],
            [Vertex::Minus(2), Vertex::Plus(1)],
            [Vertex::Minus(3), Vertex::Plus(2)],
            [Vertex::Minus(3), Vertex::Plus(1)],
            [Vertex::Minus(1), Vertex::Minus(2)],
        ]
        .iter()
        .map(|f| f.iter().copied().collect())
        .collect();
        assert_eq!(flip.flipped.facet_label_sets(), expected);
    }

    #[test]
    fn vertex_split_of_the_tetrahedron_boundary() {
        let d = Delta::empty(4).unwrap();
        let flip = add_face_flip(&d, set(&[1])).unwrap();
        assert_eq!(flip.index, 0);
        assert_eq!(flip.inserted, vec![Vertex::Minus(1)]);
        assert!(flip.matches_labeled);
        assert_eq!(flip.g_after, vec![1, 1]);
        assert_eq!(flip.g_expected, flip.g_after);
    }

    #[test]
    fn not_addable() {
        let d = Delta::generated(3, [set(&[1])]).unwrap();
        assert!(matches!(add_face_flip(&d, set(&[1, 2])), Err(Error::NotAddable(..))));
        assert!(matches!(add_face_flip(&d, set(&[1])), Err(Error::NotAddable(..))));
        assert!(matches!(add_face_flip(&d, set(&[1, 2, 3])), Err(Error::NotAddable(..))));
    }

    #[test]
    fn g_shift_rules() {
        // d = 3: a 0-flip raises g_1, a 1-flip raises g_2, a 2-flip undoes a 1-flip
        assert_eq!(g_shift(&[1, 0, 0], 3, 0), vec![1, 1, 0]);
        assert_eq!(g_shift(&[1, 0, 0], 3, 1), vec![1, 0, 1]);
        assert_eq!(g_shift(&[1, 2, 1], 3, 2), vec![1, 2, 0]);
        // d = 2: the middle 1-flip leaves g alone
        assert_eq!(g_shift(&[1, 3], 2, 1), vec![1, 3]);
        assert_eq!(g_shift(&[1, 3], 2, 2), vec![1, 2]);
    }

    #[test]
    fn lbc_examples() {
        let s = lbc_status(&Delta::skeleton(5, 1).unwrap(), 2).unwrap();
        assert!(s.g_k_zero && s.level_extreme);
        let cert = s.certificate.unwrap();
        assert_eq!(cert.steps.len(), 5);
        assert!(cert.steps.iter().all(|st| st.index == 0));
        assert!(cert.valid(2));

        let d = Delta::skeleton(5, 1).unwrap().with_face(set(&[1, 2])).unwrap();
        let s = lbc_status(&d, 2).unwrap();
        assert_eq!(s.g_k, 1);
        assert!(!s.level_extreme && s.certificate.is_none());

        let s = lbc_status(&Delta::skeleton(7, 4).unwrap(), 3).unwrap();
        assert!(s.g_k_zero && s.level_extreme);
        let cert = s.certificate.unwrap();
        assert!(cert.via_dual && cert.valid(3));
        assert!(cert.max_index().unwrap() <= 1);

        assert!(matches!(lbc_status(&Delta::empty(5).unwrap(), 3), Err(Error::IndexOutOfRange(..))));
        assert!(matches!(lbc_status(&Delta::empty(5).unwrap(), 1), Err(Error::IndexOutOfRange(..))));
    }
}
