//! Bier spheres `Bier(B_n, Δ)` of proper ideals `Δ ⊂ B_n`.
//!
//! A facet is written `(A; x)`: the interval `[A, A ∪ {x}]` with `A ∈ Δ` and
//! `A ∪ {x} ∉ Δ`. A general interval `(B, C)` becomes the face
//! `{b⁻ : b ∈ B} ∪ {c⁺ : c ∉ C}`.

mod delta;
mod flips;
mod gvec;
mod shelling;
mod symmetry;

use std::fmt;

use crate::complex::{bits, full_mask, Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

pub use delta::{format_set, subsets_of_size, Delta, MAX_FACES, MAX_GROUND};
pub use flips::{add_face_flip, g_shift, lbc_status, FaceFlip, FlipStep, LbcStatus};
pub use gvec::{delta_prime, g_bier, h_via_restriction, h_via_reversed_restriction, realize_ksequence, sphere_vectors};
pub use shelling::{chi, restriction_below, locate, locate_by_max, prec, restriction, shelling_order, ChiVector};
pub use symmetry::{cs_construct, cs_selections, symmetry_checks, SymmetryStatus};

/// The facet `(A; x)` of a Bier sphere over `[1, n]`; `x` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacetAX {
    pub a: Face,
    pub x: usize,
    pub n: usize,
}

/// An element `(B, C)` of `Bier(B_n, Δ)`: `B ∈ Δ`, `C ∉ Δ`, `B ⊂ C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub b: Face,
    pub c: Face,
}

impl FacetAX {
    pub fn new(a: Face, x: usize, n: usize) -> FacetAX {
        FacetAX { a, x, n }
    }

    pub fn x_bit(&self) -> Face {
        1 << (self.x - 1)
    }

    /// `A ∪ {x}`.
    pub fn top(&self) -> Face {
        self.a | self.x_bit()
    }

    pub fn interval(&self) -> Interval {
        Interval { b: self.a, c: self.top() }
    }
}

impl fmt::Display for FacetAX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a == 0 {
            write!(f, "- | {}", self.x)
        } else {
            let items: Vec<String> = bits(self.a).map(|v| (v + 1).to_string()).collect();
            write!(f, "{} | {}", items.join(" "), self.x)
        }
    }
}

impl Interval {
    /// `|B| + n - |C|`.
    pub fn rank(&self, n: usize) -> usize {
        self.b.count_ones() as usize + n - self.c.count_ones() as usize
    }

    /// Reversed inclusion: `(B, C) <= (B', C')` iff `B ⊆ B'` and `C' ⊆ C`.
    pub fn leq(&self, other: &Interval) -> bool {
        self.b & !other.b == 0 && other.c & !self.c == 0
    }
}

/// Every facet `(A; x)` of `Bier(B_n, Δ)`, ordered by `A` (size, then mask) and then `x`.
pub fn bier_facets(delta: &Delta) -> Vec<FacetAX> {
    let n = delta.n();
    let mut out = Vec::new();
    for &a in delta.faces() {
        for x in 1..=n {
            let bit = 1 << (x - 1);
            if a & bit == 0 && !delta.contains(a | bit) {
                out.push(FacetAX::new(a, x, n));
            }
        }
    }
    out
}

/// A Bier sphere with its source ideal, facet list and labeled complex.
///
/// The universe holds `v⁻` for every `v` with `{v} ∈ Δ`, then `w⁺` for every `w`
/// with `[1, n] ∖ {w} ∉ Δ`, each in increasing order.
#[derive(Debug, Clone)]
pub struct BierSphere {
    delta: Delta,
    facets: Vec<FacetAX>,
    complex: SimplicialComplex,
    minus: Vec<Option<usize>>,
    plus: Vec<Option<usize>>,
}

pub fn bier_complex(delta: &Delta) -> BierSphere {
    let n = delta.n();
    let full = full_mask(n);
    let mut universe = Vec::with_capacity(2 * n);
    let mut minus = vec![None; n];
    let mut plus = vec![None; n];
    for (v, slot) in minus.iter_mut().enumerate() {
        if delta.contains(1 << v) {
            *slot = Some(universe.len());
            universe.push(Vertex::Minus(v as u32 + 1));
        }
    }
    for (w, slot) in plus.iter_mut().enumerate() {
        if !delta.contains(full & !(1 << w)) {
            *slot = Some(universe.len());
            universe.push(Vertex::Plus(w as u32 + 1));
        }
    }
    let facets = bier_facets(delta);
    let mut sphere = BierSphere {
        delta: delta.clone(),
        facets,
        complex: SimplicialComplex::from_masks_unchecked(Vec::new(), Vec::new()),
        minus,
        plus,
    };
    let masks: Vec<Face> = sphere
        .facets
        .iter()
        .map(|f| sphere.interval_face(&f.interval()).expect("facet vertices are present"))
        .collect();
    sphere.complex = SimplicialComplex::from_masks_unchecked(universe, masks);
    sphere
}

impl BierSphere {
    pub fn delta(&self) -> &Delta {
        &self.delta
    }

    pub fn n(&self) -> usize {
        self.delta.n()
    }

    pub fn facets(&self) -> &[FacetAX] {
        &self.facets
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Face `B⁻ ∪ ([1,n] ∖ C)⁺` of the interval `(B, C)`, as a mask over the universe.
    pub fn interval_face(&self, iv: &Interval) -> Result<Face> {
        let n = self.n();
        let mut mask = 0;
        for v in bits(iv.b) {
            mask |= 1 << self.minus[v].ok_or_else(|| Error::VertexOutOfUniverse(format!("{}-", v + 1)))?;
        }
        for w in bits(full_mask(n) & !iv.c) {
            mask |= 1 << self.plus[w].ok_or_else(|| Error::VertexOutOfUniverse(format!("{}+", w + 1)))?;
        }
        Ok(mask)
    }

    pub fn facet_face(&self, f: &FacetAX) -> Face {
        self.interval_face(&f.interval()).expect("facet of this sphere")
    }

    /// Inverse of [`BierSphere::interval_face`].
    pub fn face_interval(&self, face: Face) -> Interval {
        let n = self.n();
        let mut b = 0;
        let mut outside = 0;
        for i in bits(face) {
            match self.complex.universe()[i] {
                Vertex::Minus(v) => b |= 1 << (v - 1),
                Vertex::Plus(w) => outside |= 1 << (w - 1),
                _ => unreachable!("bier universe holds signed vertices"),
            }
        }
        Interval { b, c: full_mask(n) & !outside }
    }

    /// Universe position of `v⁻` (`minus = true`) or `v⁺`, for 1-based `v`.
    pub fn vertex(&self, v: usize, minus: bool) -> Option<usize> {
        if minus {
            self.minus[v - 1]
        } else {
            self.plus[v - 1]
        }
    }

    /// All elements `(B, C)` of the Bier poset other than the bottom `(∅, [1,n])` and the top.
    pub fn proper_intervals(&self) -> Vec<Interval> {
        let full = full_mask(self.n());
        let mut out = Vec::new();
        for &b in self.delta.faces() {
            let rest = full & !b;
            for extra in crate::complex::submasks(rest) {
                let c = b | extra;
                if c != b && !self.delta.contains(c) && !(b == 0 && c == full) {
                    out.push(Interval { b, c });
                }
            }
        }
        out
    }

    /// `v⁻ ↔ v⁺` applied to a face mask; `None` if some image vertex is absent.
    pub fn antipode(&self, face: Face) -> Option<Face> {
        let mut out = 0;
        for i in bits(face) {
            let j = match self.complex.universe()[i] {
                Vertex::Minus(v) => self.plus[v as usize - 1]?,
                Vertex::Plus(v) => self.minus[v as usize - 1]?,
                _ => return None,
            };
            out |= 1 << j;
        }
        Some(out)
    }

    /// Text form: facet list as comments followed by the complex, with `v⁻ ↦ v`
    /// and `v⁺ ↦ n + v` as plain labels.
    pub fn to_file(&self) -> String {
        let n = self.n();
        let mut out = String::new();
        out.push_str(&format!("# bier sphere over [1,{n}]: {} facets; label v is v-, label n+v is v+\n", self.facets.len()));
        for f in &self.facets {
            out.push_str(&format!("# {f}\n"));
        }
        out.push_str(&format!("n={}\n", 2 * n));
        let mut lines: Vec<Vec<usize>> = self
            .complex
            .facets()
            .iter()
            .map(|&face| {
                let mut labels: Vec<usize> = bits(face)
                    .map(|i| match self.complex.universe()[i] {
                        Vertex::Minus(v) => v as usize,
                        Vertex::Plus(v) => n + v as usize,
                        _ => unreachable!("bier universe holds signed vertices"),
                    })
                    .collect();
                labels.sort_unstable();
                labels
            })
            .collect();
        lines.sort();
        for l in lines {
            if l.is_empty() {
                out.push_str(".\n");
            } else {
                let words: Vec<String> = l.iter().map(|v| v.to_string()).collect();
                out.push_str(&words.join(" "));
                out.push('\n');
            }
        }
        out
    }
}
