//! Restriction operator, facet location, χ-vectors and the χ-lex shelling.

use std::cmp::Ordering;

use super::{bier_facets, Delta, FacetAX, Interval};
use crate::complex::{full_mask, Face};
use crate::error::{Error, Result};

/// `{1..k}` as a mask, 1-based and inclusive.
fn up_to(k: usize) -> Face {
    full_mask(k)
}

/// `R(A; x) = (A ∩ (x, n], A ∪ [x, n])`.
pub fn restriction(f: &FacetAX) -> Interval {
    let full = full_mask(f.n);
    let above = full & !up_to(f.x);
    let from_x = full & !up_to(f.x - 1);
    Interval { b: f.a & above, c: f.a | from_x }
}

fn check_interval(delta: &Delta, b: Face, c: Face) -> Result<()> {
    let bad = if !delta.contains(b) {
        Some("B is not a face of Δ")
    } else if delta.contains(c) || c & !full_mask(delta.n()) != 0 {
        Some("C is a face of Δ")
    } else if b & !c != 0 {
        Some("B is not contained in C")
    } else {
        None
    };
    match bad {
        Some(why) => Err(Error::NotAnInterval(super::format_set(b), format!("{} ({why})", super::format_set(c)))),
        None => Ok(()),
    }
}

/// The facet `(A; x)` with `R(A; x) <= (B, C) <= (A; x)`, by the minimum formula
/// `x = min{y ∈ C ∖ B : B ∪ (C ∩ [1, y]) ∉ Δ}`, `A = B ∪ (C ∩ [1, x))`.
pub fn locate(delta: &Delta, b: Face, c: Face) -> Result<FacetAX> {
    check_interval(delta, b, c)?;
    let n = delta.n();
    let x = (1..=n)
        .filter(|&y| (c & !b) >> (y - 1) & 1 == 1)
        .find(|&y| !delta.contains(b | (c & up_to(y))))
        .expect("C itself is not in Δ");
    Ok(FacetAX::new(b | (c & up_to(x - 1)), x, n))
}

/// Same facet by the maximum formula `x = max{y ∈ C ∖ B : B ∪ (C ∖ [y, n]) ∈ Δ}`.
pub fn locate_by_max(delta: &Delta, b: Face, c: Face) -> Result<FacetAX> {
    check_interval(delta, b, c)?;
    let n = delta.n();
    let x = (1..=n)
        .rev()
        .filter(|&y| (c & !b) >> (y - 1) & 1 == 1)
        .find(|&y| delta.contains(b | (c & up_to(y - 1))))
        .expect("B itself is in Δ");
    Ok(FacetAX::new(b | (c & up_to(x - 1)), x, n))
}

/// Entries in `{-1, 0, 1}`; position `i` holds the value for element `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChiVector(pub Vec<i8>);

impl PartialOrd for ChiVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ChiVector {
    /// Lexicographic from position 1 with `-1 < 0 < 1`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

/// `-1` on `(A ∪ {x})_{≤x}`, `+1` on `(A ∪ {x})_{>x}`, `0` elsewhere.
pub fn chi(f: &FacetAX) -> ChiVector {
    let top = f.top();
    ChiVector(
        (1..=f.n)
            .map(|i| match (top >> (i - 1) & 1 == 1, i <= f.x) {
                (false, _) => 0,
                (true, true) => -1,
                (true, false) => 1,
            })
            .collect(),
    )
}

/// `R(F) <= F'`: `(A ∪ {x})_{>x} ⊆ A'` and `(A' ∪ {x'})_{<x} ⊆ A`.
pub fn restriction_below(f: &FacetAX, g: &FacetAX) -> bool {
    let full = full_mask(f.n);
    let above = full & !up_to(f.x);
    let below = up_to(f.x - 1);
    (f.top() & above) & !g.a == 0 && (g.top() & below) & !f.a == 0
}

/// `F ≺ F'`: `F ≠ F'`, `R(F) <= F'`, `(A ∪ {x})_{≤x} ⊄ A'` and `(A' ∪ {x'})_{≥x} ⊄ A`.
///
/// The three conditions alone also hold for `F = F'`.
pub fn prec(f: &FacetAX, g: &FacetAX) -> bool {
    if f == g {
        return false;
    }
    let full = full_mask(f.n);
    let at_most = up_to(f.x);
    let at_least = full & !up_to(f.x - 1);
    restriction_below(f, g) && (f.top() & at_most) & !g.a != 0 && (g.top() & at_least) & !f.a != 0
}

/// Facets sorted by χ ascending.
pub fn shelling_order(delta: &Delta) -> Vec<FacetAX> {
    let mut keyed: Vec<(ChiVector, FacetAX)> = bier_facets(delta).into_iter().map(|f| (chi(&f), f)).collect();
    keyed.sort();
    keyed.into_iter().map(|(_, f)| f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fax(a: &[usize], x: usize, n: usize) -> FacetAX {
        FacetAX::new(a.iter().fold(0, |acc, &v| acc | 1 << (v - 1)), x, n)
    }

    fn set(items: &[usize]) -> Face {
        items.iter().fold(0, |acc, &v| acc | 1 << (v - 1))
    }

    #[test]
    fn restriction_examples() {
        let r = restriction(&fax(&[1, 3], 2, 5));
        assert_eq!(r, Interval { b: set(&[3]), c: set(&[1, 2, 3, 4, 5]) });
        assert_eq!(r.rank(5), 1);
        let r = restriction(&fax(&[1], 2, 3));
        assert_eq!(r, Interval { b: 0, c: set(&[1, 2, 3]) });
        assert_eq!(r.rank(3), 0);
        let r = restriction(&fax(&[3, 4], 1, 4));
        assert_eq!(r, Interval { b: set(&[3, 4]), c: set(&[1, 2, 3, 4]) });
        assert_eq!(r.rank(4), 2);
    }

    #[test]
    fn locate_examples() {
        let d = Delta::generated(4, [set(&[1, 2]), set(&[3]), set(&[4])]).unwrap();
        assert_eq!(locate(&d, 0, set(&[1, 2, 3])).unwrap(), fax(&[1, 2], 3, 4));
        let s = Delta::skeleton(3, 1).unwrap();
        assert_eq!(locate(&s, 0, set(&[2, 3])).unwrap(), fax(&[2], 3, 3));
        for f in bier_facets(&s) {
            assert_eq!(locate(&s, f.a, f.top()).unwrap(), f);
            assert_eq!(locate_by_max(&s, f.a, f.top()).unwrap(), f);
        }
        assert!(matches!(locate(&s, set(&[1, 2]), set(&[1, 2, 3])), Err(Error::NotAnInterval(..))));
        assert!(matches!(locate(&s, set(&[1]), set(&[2, 3])), Err(Error::NotAnInterval(..))));
        assert!(matches!(locate(&s, 0, set(&[2])), Err(Error::NotAnInterval(..))));
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi(&fax(&[1, 4], 2, 4)).0, vec![-1, -1, 0, 1]);
        assert_eq!(chi(&fax(&[1], 2, 3)).0, vec![-1, -1, 0]);
        assert_eq!(chi(&fax(&[2], 1, 3)).0, vec![-1, 1, 0]);
    }

    #[test]
    fn cycle_under_condition_five_alone() {
        let cycle = [fax(&[1, 4], 2, 4), fax(&[1, 4], 3, 4), fax(&[4], 1, 4)];
        for i in 0..3 {
            let (f, g) = (&cycle[i], &cycle[(i + 1) % 3]);
            assert!(restriction_below(f, g), "{f} -> {g}");
        }
        assert!((0..3).any(|i| !prec(&cycle[i], &cycle[(i + 1) % 3])));
    }

    #[test]
    fn prec_examples() {
        assert!(prec(&fax(&[1], 2, 3), &fax(&[1], 3, 3)));
        let s = Delta::skeleton(3, 1).unwrap();
        assert!(bier_facets(&s).iter().all(|f| !prec(f, f) && restriction_below(f, f)));
    }

    #[test]
    fn singleton_order() {
        let order: Vec<String> = shelling_order(&Delta::skeleton(3, 1).unwrap()).iter().map(|f| f.to_string()).collect();
        assert_eq!(order, vec!["1 | 2", "1 | 3", "3 | 1", "2 | 1", "2 | 3", "3 | 2"]);
        let order: Vec<String> = shelling_order(&Delta::empty(3).unwrap()).iter().map(|f| f.to_string()).collect();
        assert_eq!(order, vec!["- | 1", "- | 2", "- | 3"]);
    }
}
