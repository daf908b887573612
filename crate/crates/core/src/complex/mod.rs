//! Abstract simplicial complexes over a labeled universe of at most 64 vertices.
//!
//! Faces are bit masks over the universe: bit `i` stands for `universe[i]`.
//! A complex is stored by its facets; every other face is implied.

mod canonical;
mod duality;
mod homology;
pub mod io;
mod kk;
mod shelling;
mod sphere;
mod subdivision;
mod vectors;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canonical::{canonicalize, canonicalize_with_budget, is_isomorphic, CanonicalForm};
pub use duality::{alexander_dual, deleted_join};
pub use homology::homology_gf2;
pub use kk::{binomial, binomial_cascade, kk_compressed_complex, kk_is_ksequence, kk_upper_bound};
pub use shelling::{find_shelling, is_shelling, ShellingCheck};
pub use sphere::sphere_checks;
pub use subdivision::{bistellar_flip, flip_index, stellar_subdivide, Flip};
pub use vectors::{f_from_h, g_from_h, h_from_f, FhgVectors};

/// Largest universe a complex can carry.
pub const MAX_VERTICES: usize = 64;

/// A face, as a bit mask over the universe of its complex.
pub type Face = u64;

/// Vertex labels.
///
/// `Plain` labels come from complex files and order complexes, `Minus`/`Plus`
/// are the two copies of a ground-set element in a Bier sphere or deleted
/// join, and `Pair` is the apex introduced by subdividing the edge `{x, y}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Vertex {
    Plain(u32),
    Minus(u32),
    Plus(u32),
    Pair(u32, u32),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Plain(v) => write!(f, "{v}"),
            Vertex::Minus(v) => write!(f, "{v}-"),
            Vertex::Plus(v) => write!(f, "{v}+"),
            Vertex::Pair(x, y) => write!(f, "({x},{y})"),
        }
    }
}

/// Iterates the set bits of a mask, lowest first.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Iterates every submask of `mask`, including `0` and `mask` itself.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 { None } else { Some((current - 1) & mask) };
        Some(current)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    universe: Vec<Vertex>,
    /// Sorted ascending; an antichain under inclusion.
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds a complex from labeled facets, pruning non-maximal ones.
    pub fn from_facets(universe: Vec<Vertex>, facets: &[Vec<Vertex>]) -> Result<Self> {
        check_universe(&universe)?;
        let mut masks = Vec::with_capacity(facets.len());
        for facet in facets {
            let mut mask = 0u64;
            for v in facet {
                let i = universe
                    .iter()
                    .position(|u| u == v)
                    .ok_or_else(|| Error::VertexOutOfUniverse(v.to_string()))?;
                mask |= 1 << i;
            }
            masks.push(mask);
        }
        Ok(Self::from_masks_unchecked(universe, masks))
    }

    /// Builds a complex from facet masks over `universe`.
    pub fn from_masks(universe: Vec<Vertex>, masks: impl IntoIterator<Item = Face>) -> Result<Self> {
        check_universe(&universe)?;
        let limit = if universe.len() == 64 { u64::MAX } else { (1u64 << universe.len()) - 1 };
        let masks: Vec<Face> = masks.into_iter().collect();
        if let Some(bad) = masks.iter().find(|&&m| m & !limit != 0) {
            return Err(Error::VertexOutOfUniverse(format!("bit {}", 63 - (bad & !limit).leading_zeros())));
        }
        Ok(Self::from_masks_unchecked(universe, masks))
    }

    pub(crate) fn from_masks_unchecked(universe: Vec<Vertex>, masks: Vec<Face>) -> Self {
        SimplicialComplex { universe, facets: maximal_elements(masks) }
    }

    /// The complex on the plain labels `1..=n`.
    pub fn on_ground_set(n: usize, masks: impl IntoIterator<Item = Face>) -> Result<Self> {
        Self::from_masks(ground_universe(n), masks)
    }

    /// The full simplex on `universe`.
    pub fn simplex(universe: Vec<Vertex>) -> Result<Self> {
        let n = universe.len();
        Self::from_masks(universe, [full_mask(n)])
    }

    /// The boundary of the simplex on `universe`.
    pub fn simplex_boundary(universe: Vec<Vertex>) -> Result<Self> {
        let full = full_mask(universe.len());
        let facets: Vec<Face> = bits(full).map(|i| full & !(1 << i)).collect();
        Self::from_masks(universe, facets)
    }

    pub fn universe(&self) -> &[Vertex] {
        &self.universe
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// No faces at all, not even the empty one.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension (`-1` for `{∅}`); `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.count_ones() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(first) => self.facets.iter().all(|f| f.count_ones() == first.count_ones()),
        }
    }

    pub fn contains_face(&self, face: Face) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// Mask of vertices lying in some face.
    pub fn used_vertices(&self) -> Face {
        self.facets.iter().fold(0, |acc, &f| acc | f)
    }

    /// Every face, sorted by cardinality and then by mask.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = HashSet::new();
        for &facet in &self.facets {
            for sub in submasks(facet) {
                seen.insert(sub);
            }
        }
        let mut faces: Vec<Face> = seen.into_iter().collect();
        faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
        faces
    }

    /// `f_i` = number of faces with `i` vertices, padded with zeros to index `n`.
    pub fn f_vector(&self, n: usize) -> Result<Vec<i64>> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let top = self.dim().map_or(0, |d| (d + 1) as usize);
        let mut f = vec![0i64; n.max(top) + 1];
        for face in self.faces() {
            f[face.count_ones() as usize] += 1;
        }
        Ok(f)
    }

    /// Reduced Euler characteristic, `Σ (-1)^(i+1) f_i` with `f_0 = 1` for the empty face.
    pub fn reduced_euler_characteristic(&self) -> Result<i64> {
        let f = self.f_vector(0)?;
        Ok(f.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { -c } else { c }).sum())
    }

    pub fn vertex_index(&self, v: &Vertex) -> Option<usize> {
        self.universe.iter().position(|u| u == v)
    }

    /// Mask of a labeled vertex set.
    pub fn mask_of(&self, vertices: &[Vertex]) -> Result<Face> {
        vertices.iter().try_fold(0u64, |acc, v| {
            self.vertex_index(v)
                .map(|i| acc | 1 << i)
                .ok_or_else(|| Error::VertexOutOfUniverse(v.to_string()))
        })
    }

    /// Labels of a face in universe order.
    pub fn labels_of(&self, face: Face) -> Vec<Vertex> {
        bits(face).map(|i| self.universe[i]).collect()
    }

    /// Facets as label sets, independent of the universe order.
    pub fn facet_label_sets(&self) -> BTreeSet<BTreeSet<Vertex>> {
        self.facets.iter().map(|&f| self.labels_of(f).into_iter().collect()).collect()
    }

    /// Equality of the labeled face families (universe order ignored).
    pub fn same_faces(&self, other: &SimplicialComplex) -> bool {
        self.facet_label_sets() == other.facet_label_sets()
    }

    /// `link(face) = { G : G ∩ face = ∅, G ∪ face ∈ K }`, given by its facets.
    pub fn link(&self, face: Face) -> Vec<Face> {
        let containing: Vec<Face> = self
            .facets
            .iter()
            .filter(|&&f| face & !f == 0)
            .map(|&f| f & !face)
            .collect();
        maximal_elements(containing)
    }

    /// Drops universe vertices that lie in no face, keeping the order of the rest.
    pub fn compact(&self) -> SimplicialComplex {
        let used = self.used_vertices();
        let kept: Vec<usize> = bits(used).collect();
        let universe = kept.iter().map(|&i| self.universe[i]).collect();
        let facets = self
            .facets
            .iter()
            .map(|&f| kept.iter().enumerate().filter(|(_, &i)| f >> i & 1 == 1).fold(0u64, |acc, (j, _)| acc | 1 << j))
            .collect();
        SimplicialComplex::from_masks_unchecked(universe, facets)
    }

    /// Renames every vertex; the map must be injective.
    pub fn relabel(&self, rename: impl Fn(&Vertex) -> Vertex) -> Result<SimplicialComplex> {
        let universe: Vec<Vertex> = self.universe.iter().map(rename).collect();
        check_universe(&universe)?;
        Ok(SimplicialComplex { universe, facets: self.facets.clone() })
    }

    /// Facets as sorted label lists, for display.
    pub fn facet_labels(&self) -> Vec<Vec<Vertex>> {
        let mut out: Vec<Vec<Vertex>> = self
            .facets
            .iter()
            .map(|&f| {
                let mut l = self.labels_of(f);
                l.sort();
                l
            })
            .collect();
        out.sort();
        out
    }

    pub fn format_face(&self, face: Face) -> String {
        let labels = self.labels_of(face);
        if labels.is_empty() {
            "{}".to_string()
        } else {
            format!("{{{}}}", labels.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
        }
    }
}

/// `1..=n` as plain labels.
pub fn ground_universe(n: usize) -> Vec<Vertex> {
    (1..=n as u32).map(Vertex::Plain).collect()
}

pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_universe(universe: &[Vertex]) -> Result<()> {
    if universe.len() > MAX_VERTICES {
        return Err(Error::TooLarge(format!("{} vertices (at most {MAX_VERTICES})", universe.len())));
    }
    let mut seen = HashSet::new();
    for v in universe {
        if !seen.insert(v) {
            return Err(Error::LabelCollision(v.to_string()));
        }
    }
    Ok(())
}

/// Inclusion-maximal members of a family, sorted ascending.
pub(crate) fn maximal_elements(mut masks: Vec<Face>) -> Vec<Face> {
    masks.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    masks.dedup();
    let mut kept: Vec<Face> = Vec::new();
    for m in masks {
        if !kept.iter().any(|&k| m & !k == 0) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(v: &[u32]) -> Vec<Vertex> {
        v.iter().map(|&x| Vertex::Plain(x)).collect()
    }

    #[test]
    fn facets_are_pruned_and_closed() {
        let k = SimplicialComplex::from_facets(ground_universe(3), &[plain(&[1, 2]), plain(&[3])]).unwrap();
        assert_eq!(k.facets().len(), 2);
        // ∅, {1}, {2}, {3}, {1,2}
        assert_eq!(k.faces().len(), 5);

        let k = SimplicialComplex::from_facets(ground_universe(3), &[plain(&[1]), plain(&[1, 2])]).unwrap();
        assert_eq!(k.facets(), &[0b011]);
    }

    #[test]
    fn void_and_empty_face_complexes() {
        let void = SimplicialComplex::from_facets(ground_universe(3), &[]).unwrap();
        assert!(void.is_void());
        assert_eq!(void.f_vector(3), Err(Error::VoidComplex));

        let empty = SimplicialComplex::from_facets(ground_universe(3), &[vec![]]).unwrap();
        assert_eq!(empty.dim(), Some(-1));
        assert_eq!(empty.f_vector(2).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn vertex_outside_universe_is_rejected() {
        let err = SimplicialComplex::from_facets(ground_universe(2), &[plain(&[1, 5])]).unwrap_err();
        assert_eq!(err, Error::VertexOutOfUniverse("5".into()));
    }

    #[test]
    fn f_vectors_of_small_complexes() {
        let three_points = SimplicialComplex::on_ground_set(4, [0b0001, 0b0010, 0b0100]).unwrap();
        assert_eq!(three_points.f_vector(4).unwrap(), vec![1, 3, 0, 0, 0]);
        let triangle = SimplicialComplex::simplex_boundary(ground_universe(3)).unwrap();
        assert_eq!(triangle.f_vector(3).unwrap(), vec![1, 3, 3, 0]);
        let simplex = SimplicialComplex::simplex(ground_universe(3)).unwrap();
        assert_eq!(simplex.f_vector(3).unwrap(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn link_and_compact() {
        let triangle = SimplicialComplex::simplex_boundary(ground_universe(3)).unwrap();
        assert_eq!(triangle.link(0b001), vec![0b010, 0b100]);
        assert_eq!(triangle.link(0b011), vec![0]);
        let sparse = SimplicialComplex::on_ground_set(5, [0b10100]).unwrap().compact();
        assert_eq!(sparse.universe(), &[Vertex::Plain(3), Vertex::Plain(5)]);
        assert_eq!(sparse.facets(), &[0b11]);
    }

    #[test]
    fn submask_enumeration_is_complete() {
        let subs: BTreeSet<u64> = submasks(0b1011).collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.contains(&0) && subs.contains(&0b1011));
    }
}
