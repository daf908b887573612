//! The construction `Bier(P, I)`: intervals `[x, y]` with `x ∈ I`, `y ∉ I`,
//! ordered by reversed inclusion, with a new top element adjoined.

use std::collections::HashMap;
use std::fmt;

use crate::complex::{stellar_subdivide, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::poset::{is_order_isomorphism, Ideal, Poset};
use crate::report::BierReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BierElement {
    Interval(usize, usize),
    Top,
}

/// A Bier poset together with the element each of its indices stands for.
#[derive(Debug, Clone)]
pub struct BierPoset {
    poset: Poset,
    elements: Vec<BierElement>,
    index: HashMap<BierElement, usize>,
}

/// Role of a proper Bier element as a vertex of the subdivided order complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainVertex {
    Old(usize),
    Subdivision(usize, usize),
}

impl ChainVertex {
    pub fn vertex(self) -> Vertex {
        match self {
            ChainVertex::Old(x) => Vertex::Plain(x as u32),
            ChainVertex::Subdivision(x, y) => Vertex::Pair(x as u32, y as u32),
        }
    }
}

impl fmt::Display for BierElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BierElement::Interval(x, y) => write!(f, "[{x},{y}]"),
            BierElement::Top => write!(f, "top"),
        }
    }
}

impl BierPoset {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn elements(&self) -> &[BierElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> BierElement {
        self.elements[i]
    }

    pub fn index_of(&self, e: BierElement) -> Option<usize> {
        self.index.get(&e).copied()
    }
}

pub fn bier_poset(p: &Poset, ideal: &Ideal) -> Result<BierPoset> {
    ideal.check_proper(p)?;
    let mut elements = Vec::new();
    for x in ideal.members() {
        for y in 0..p.len() {
            if !ideal.contains(y) && p.leq(x, y) {
                elements.push(BierElement::Interval(x, y));
            }
        }
    }
    elements.push(BierElement::Top);
    let labels = elements
        .iter()
        .map(|e| match *e {
            BierElement::Interval(x, y) => format!("[{},{}]", p.label(x), p.label(y)),
            BierElement::Top => "top".to_string(),
        })
        .collect();
    let poset = Poset::from_relation(labels, |i, j| match (elements[i], elements[j]) {
        (_, BierElement::Top) => true,
        (BierElement::Top, _) => false,
        (BierElement::Interval(x1, y1), BierElement::Interval(x2, y2)) => p.leq(x1, x2) && p.leq(y2, y1),
    })?;
    let index = elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    Ok(BierPoset { poset, elements, index })
}

fn check_element(p: &Poset, ideal: &Ideal, e: BierElement) -> Result<()> {
    match e {
        BierElement::Top => Ok(()),
        BierElement::Interval(x, y) => {
            if x < p.len() && y < p.len() && ideal.contains(x) && !ideal.contains(y) && p.leq(x, y) {
                Ok(())
            } else {
                Err(Error::NotAnInterval(format!("{x}"), format!("{y}")))
            }
        }
    }
}

/// `rank_P(x) + n - rank_P(y)` for `[x, y]`, `n` for the top.
pub fn bier_rank(p: &Poset, ideal: &Ideal, e: BierElement) -> Result<usize> {
    let rank = p.rank_function()?.rank;
    check_element(p, ideal, e)?;
    Ok(match e {
        BierElement::Interval(x, y) => rank[x] + p.length() - rank[y],
        BierElement::Top => p.length(),
    })
}

/// `[x, y] ∧ [x', y'] = [x ∧ x', y ∨ y']`.
pub fn bier_meet(p: &Poset, ideal: &Ideal, a: BierElement, b: BierElement) -> Result<BierElement> {
    check_element(p, ideal, a)?;
    check_element(p, ideal, b)?;
    match (a, b) {
        (e, BierElement::Top) | (BierElement::Top, e) => Ok(e),
        (BierElement::Interval(x1, y1), BierElement::Interval(x2, y2)) => {
            let x = p.meet(x1, x2).ok_or_else(|| Error::NotALattice(p.label(x1).into(), p.label(x2).into()))?;
            let y = p.join(y1, y2).ok_or_else(|| Error::NotALattice(p.label(y1).into(), p.label(y2).into()))?;
            Ok(BierElement::Interval(x, y))
        }
    }
}

/// `[x, 1̂] ↦ x`, `[0̂, y] ↦ y`, and any other proper interval to the new vertex `(x, y)`.
pub fn identify_vertex(p: &Poset, e: BierElement) -> Result<ChainVertex> {
    match e {
        BierElement::Top => Err(Error::BoundaryElement("top".into())),
        BierElement::Interval(x, y) if x == p.bottom() && y == p.top() => {
            Err(Error::BoundaryElement(format!("[{},{}]", p.label(x), p.label(y))))
        }
        BierElement::Interval(x, y) if y == p.top() => Ok(ChainVertex::Old(x)),
        BierElement::Interval(x, y) if x == p.bottom() => Ok(ChainVertex::Old(y)),
        BierElement::Interval(x, y) => Ok(ChainVertex::Subdivision(x, y)),
    }
}

/// Order complex of `Bier(P, I)` with vertices renamed by [`identify_vertex`].
pub fn identified_order_complex(p: &Poset, bier: &BierPoset) -> Result<SimplicialComplex> {
    let raw = bier.poset().order_complex()?;
    raw.relabel(|v| match v {
        Vertex::Plain(i) => identify_vertex(p, bier.element(*i as usize)).expect("proper element").vertex(),
        other => *other,
    })
}

/// Edges `{x, y}` subdivided in round `k`, in lexicographic order.
fn batch(p: &Poset, ideal: &Ideal, lengths: &[Vec<Option<usize>>], k: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for x in ideal.members() {
        if x == p.bottom() {
            continue;
        }
        for (y, len) in lengths[x].iter().enumerate() {
            if !ideal.contains(y) && y != p.top() && p.lt(x, y) && *len == Some(k) {
                edges.push((x, y));
            }
        }
    }
    edges
}

fn subdivide_all(gamma: &SimplicialComplex, edges: &[(usize, usize)]) -> Result<SimplicialComplex> {
    let mut current = gamma.clone();
    for &(x, y) in edges {
        let face = current.mask_of(&[Vertex::Plain(x as u32), Vertex::Plain(y as u32)])?;
        current = stellar_subdivide(&current, face, Vertex::Pair(x as u32, y as u32))?;
    }
    Ok(current)
}

/// Subdivides the order complex of `P` edge by edge in order of increasing
/// length and compares the result with the order complex of `Bier(P, I)`.
pub fn verify_subdivision_theorem(p: &Poset, ideal: &Ideal) -> Result<BierReport> {
    ideal.check_proper(p)?;
    let mut report = BierReport::new("subdivide-verify");
    let lengths: Vec<Vec<Option<usize>>> = (0..p.len()).map(|x| p.longest_from(x)).collect();
    let mut gamma = p.order_complex()?;
    report.info("initial complex", format!("{} vertices, {} facets", gamma.universe().len(), gamma.facets().len()));
    let mut disjoint = true;
    let mut disjoint_witness = String::new();
    let mut order_free = true;
    let mut order_witness = String::new();
    let mut subdivided = 0;
    for k in 1..p.length().saturating_sub(1) {
        let edges = batch(p, ideal, &lengths, k);
        if edges.is_empty() {
            continue;
        }
        let masks: Vec<u64> = edges
            .iter()
            .map(|&(x, y)| gamma.mask_of(&[Vertex::Plain(x as u32), Vertex::Plain(y as u32)]))
            .collect::<Result<_>>()?;
        for (i, &e) in masks.iter().enumerate() {
            for &f in &masks[i + 1..] {
                if disjoint && gamma.contains_face(e | f) {
                    disjoint = false;
                    disjoint_witness = gamma.format_face(e | f);
                }
            }
        }
        let forward = subdivide_all(&gamma, &edges)?;
        let reversed: Vec<(usize, usize)> = edges.iter().rev().copied().collect();
        let backward = subdivide_all(&gamma, &reversed)?;
        if order_free && !forward.same_faces(&backward) {
            order_free = false;
            order_witness = format!("round {k}");
        }
        subdivided += edges.len();
        gamma = forward;
    }
    report.info("edges subdivided", subdivided.to_string());
    report.check("batches pairwise non-adjacent", disjoint, disjoint_witness);
    report.check("batch order irrelevant", order_free, order_witness);
    let bier = bier_poset(p, ideal)?;
    let target = identified_order_complex(p, &bier)?;
    let equal = gamma.same_faces(&target);
    let witness = if equal {
        String::new()
    } else {
        face_difference(&gamma, &target)
    };
    report.check("subdivision equals bier order complex", equal, witness);
    Ok(report)
}

fn face_difference(a: &SimplicialComplex, b: &SimplicialComplex) -> String {
    let left = a.facet_label_sets();
    let right = b.facet_label_sets();
    let show = |f: &std::collections::BTreeSet<Vertex>| {
        let items: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        format!("{{{}}}", items.join(","))
    };
    if let Some(f) = left.difference(&right).next() {
        format!("facet {} only in the subdivision", show(f))
    } else if let Some(f) = right.difference(&left).next() {
        format!("facet {} only in the bier order complex", show(f))
    } else {
        "universes differ".into()
    }
}

/// Checks the structural facts about `Bier(P, I)`: equal length, gradedness
/// and rank formula, interval decompositions, Eulerian inheritance.
pub fn bier_poset_checks(p: &Poset, ideal: &Ideal) -> Result<BierReport> {
    let bier = bier_poset(p, ideal)?;
    let q = bier.poset();
    let mut report = BierReport::new("bier-poset");
    report.info("elements", q.len().to_string());
    report.check("same length", q.length() == p.length(), format!("{} vs {}", q.length(), p.length()));
    let graded_p = p.rank_and_graded().0;
    let graded_q = q.rank_and_graded().0;
    report.check("graded iff P graded", graded_p == graded_q, format!("P {graded_p}, Bier {graded_q}"));
    if graded_q {
        let rank = q.rank_function()?.rank;
        let bad = (0..q.len()).find(|&i| bier_rank(p, ideal, bier.element(i)).ok() != Some(rank[i]));
        report.check("rank formula", bad.is_none(), bad.map(|i| bier.element(i).to_string()).unwrap_or_default());
    }
    let lower = lower_interval_failure(p, &bier);
    report.check("lower intervals split as products", lower.is_none(), lower.unwrap_or_default());
    let upper = upper_interval_failure(p, ideal, &bier)?;
    report.check("upper intervals are bier posets", upper.is_none(), upper.unwrap_or_default());
    if graded_p && p.is_eulerian()? {
        report.check("eulerian", q.is_eulerian()?, "");
        let f = q.rank_counts()?;
        let n = q.length();
        let sum: i64 = f.iter().enumerate().map(|(i, &fi)| if (n - i) % 2 == 0 { fi } else { -fi }).sum();
        report.check("alternating rank sum vanishes", sum == 0, format!("sum {sum}"));
    }
    Ok(report)
}

/// `[[x', y'], [x, y]] ≅ [x', x] × [y, y']^op`, via `[a, b] ↦ (a, b)`.
fn lower_interval_failure(p: &Poset, bier: &BierPoset) -> Option<String> {
    let q = bier.poset();
    for lo in 0..q.len() {
        for hi in 0..q.len() {
            let (BierElement::Interval(x1, y1), BierElement::Interval(x2, y2)) = (bier.element(lo), bier.element(hi)) else {
                continue;
            };
            if !q.leq(lo, hi) {
                continue;
            }
            let members = q.interval(lo, hi);
            let left = p.interval(x1, x2);
            let right = p.interval(y2, y1);
            let image: Option<Vec<(usize, usize)>> = members
                .iter()
                .map(|&m| match bier.element(m) {
                    BierElement::Interval(a, b) => Some((
                        left.binary_search(&a).ok()?,
                        right.binary_search(&b).ok()?,
                    )),
                    BierElement::Top => None,
                })
                .collect();
            let ok = match image {
                Some(pairs) if pairs.len() == left.len() * right.len() => {
                    let mut seen = pairs.clone();
                    seen.sort_unstable();
                    seen.dedup();
                    seen.len() == pairs.len()
                        && (0..pairs.len()).all(|i| {
                            (0..pairs.len()).all(|j| {
                                let (a1, b1) = pairs[i];
                                let (a2, b2) = pairs[j];
                                let product = p.leq(left[a1], left[a2]) && p.leq(right[b2], right[b1]);
                                product == q.leq(members[i], members[j])
                            })
                        })
                }
                _ => false,
            };
            if !ok {
                return Some(format!("[{}, {}]", bier.element(lo), bier.element(hi)));
            }
        }
    }
    None
}

/// `[[x, y], 1̂] ≅ Bier([x, y], I ∩ [x, y])`.
fn upper_interval_failure(p: &Poset, ideal: &Ideal, bier: &BierPoset) -> Result<Option<String>> {
    let q = bier.poset();
    let top = bier.index_of(BierElement::Top).expect("top present");
    for lo in 0..q.len() {
        let BierElement::Interval(x, y) = bier.element(lo) else {
            continue;
        };
        let (sub, host) = p.interval_poset(x, y)?;
        let members: Vec<usize> = (0..sub.len()).filter(|&i| ideal.contains(host[i])).collect();
        let sub_ideal = Ideal::proper(&sub, &members)?;
        let sub_bier = bier_poset(&sub, &sub_ideal)?;
        let upper = q.interval(lo, top);
        let (upper_poset, _) = q.interval_poset(lo, top)?;
        let map: Option<Vec<usize>> = upper
            .iter()
            .map(|&m| {
                let e = match bier.element(m) {
                    BierElement::Interval(a, b) => {
                        BierElement::Interval(host.binary_search(&a).ok()?, host.binary_search(&b).ok()?)
                    }
                    BierElement::Top => BierElement::Top,
                };
                sub_bier.index_of(e)
            })
            .collect();
        let ok = map.is_some_and(|m| is_order_isomorphism(&upper_poset, sub_bier.poset(), &m));
        if !ok {
            return Ok(Some(bier.element(lo).to_string()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b3_ideal() -> (Poset, Ideal) {
        let p = Poset::boolean(3).unwrap();
        let i = Ideal::proper(&p, &[0, 1]).unwrap();
        (p, i)
    }

    #[test]
    fn octagon_from_b3() {
        let (p, i) = b3_ideal();
        let bier = bier_poset(&p, &i).unwrap();
        let q = bier.poset();
        assert_eq!(q.len(), 10);
        assert_eq!(q.length(), 3);
        assert_eq!(bier.element(q.bottom()), BierElement::Interval(0, 7));
        assert_eq!(q.rank_counts().unwrap(), vec![1, 4, 4, 1]);
        let cycle = q.order_complex().unwrap();
        assert_eq!(cycle.f_vector(2).unwrap(), vec![1, 8, 8]);
    }

    #[test]
    fn small_cases() {
        let b2 = Poset::boolean(2).unwrap();
        let bier = bier_poset(&b2, &Ideal::proper(&b2, &[0, 1]).unwrap()).unwrap();
        assert_eq!(bier.poset().len(), 4);
        assert!(bier.index_of(BierElement::Interval(0, 2)).is_some());
        assert!(bier.index_of(BierElement::Interval(1, 3)).is_some());
        let chain = Poset::chain(2).unwrap();
        let bier = bier_poset(&chain, &Ideal::proper(&chain, &[0]).unwrap()).unwrap();
        assert_eq!((bier.poset().len(), bier.poset().length()), (3, 2));
        let everything: Vec<usize> = (0..4).collect();
        assert!(Ideal::proper(&b2, &everything).is_err());
    }

    #[test]
    fn ranks_and_meets() {
        let b4 = Poset::boolean(4).unwrap();
        let i4 = Ideal::generated_by(&b4, &[1, 2, 4, 8]).unwrap();
        assert_eq!(bier_rank(&b4, &i4, BierElement::Interval(0, 15)).unwrap(), 0);
        assert_eq!(bier_rank(&b4, &i4, BierElement::Interval(1, 3)).unwrap(), 3);
        assert_eq!(bier_rank(&b4, &i4, BierElement::Top).unwrap(), 4);
        assert_eq!(
            bier_meet(&b4, &i4, BierElement::Interval(1, 0b0111), BierElement::Interval(1, 0b1011)).unwrap(),
            BierElement::Interval(1, 15)
        );
        let b3 = Poset::boolean(3).unwrap();
        let i3 = Ideal::generated_by(&b3, &[1, 2]).unwrap();
        assert_eq!(bier_rank(&b3, &i3, BierElement::Interval(1, 7)).unwrap(), 1);
        assert_eq!(
            bier_meet(&b3, &i3, BierElement::Interval(1, 3), BierElement::Interval(2, 6)).unwrap(),
            BierElement::Interval(0, 7)
        );
        let e = BierElement::Interval(1, 3);
        assert_eq!(bier_meet(&b3, &i3, e, BierElement::Top).unwrap(), e);
        assert!(matches!(bier_rank(&b3, &i3, BierElement::Interval(3, 7)), Err(Error::NotAnInterval(..))));
    }

    #[test]
    fn meets_agree_with_constructed_poset() {
        let b3 = Poset::boolean(3).unwrap();
        for ideal in Ideal::all_proper(&b3) {
            let bier = bier_poset(&b3, &ideal).unwrap();
            let q = bier.poset();
            for a in 0..q.len() {
                for b in 0..q.len() {
                    let formula = bier_meet(&b3, &ideal, bier.element(a), bier.element(b)).unwrap();
                    assert_eq!(bier.index_of(formula), q.meet(a, b));
                }
            }
        }
    }

    #[test]
    fn vertex_identification() {
        let (p, _) = b3_ideal();
        assert_eq!(identify_vertex(&p, BierElement::Interval(1, 7)).unwrap(), ChainVertex::Old(1));
        assert_eq!(identify_vertex(&p, BierElement::Interval(0, 2)).unwrap(), ChainVertex::Old(2));
        assert_eq!(identify_vertex(&p, BierElement::Interval(1, 3)).unwrap(), ChainVertex::Subdivision(1, 3));
        assert!(matches!(identify_vertex(&p, BierElement::Top), Err(Error::BoundaryElement(_))));
        assert!(matches!(identify_vertex(&p, BierElement::Interval(0, 7)), Err(Error::BoundaryElement(_))));
    }

    #[test]
    fn hexagon_becomes_octagon() {
        let (p, i) = b3_ideal();
        let report = verify_subdivision_theorem(&p, &i).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.get("edges subdivided").unwrap().detail, "2");
    }

    #[test]
    fn structural_checks_on_small_posets() {
        for p in [Poset::boolean(3).unwrap(), Poset::polygon(4).unwrap(), Poset::chain(3).unwrap()] {
            for ideal in Ideal::all_proper(&p) {
                let report = bier_poset_checks(&p, &ideal).unwrap();
                assert!(report.passed(), "{}", report.render_text());
            }
        }
    }

    #[test]
    fn non_graded_input_gives_non_graded_bier() {
        let labels = ["0", "a", "b", "c", "1"].iter().map(|s| s.to_string()).collect();
        let p = Poset::from_covers(labels, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        for ideal in Ideal::all_proper(&p) {
            let report = bier_poset_checks(&p, &ideal).unwrap();
            assert!(report.passed(), "{}", report.render_text());
            assert!(!bier_poset(&p, &ideal).unwrap().poset().rank_and_graded().0);
        }
    }
}
