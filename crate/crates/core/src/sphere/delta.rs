//! Proper ideals `Δ` of the boolean lattice `B_n`, stored face by face.

use std::collections::HashSet;

use crate::complex::{bits, full_mask, Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// Largest ground set a Bier sphere can be built on (`2n` vertices must fit a mask).
pub const MAX_GROUND: usize = 32;
/// Up to this `n` membership is a dense bitmap over all `2^n` subsets.
const DENSE_LIMIT: usize = 20;
/// Cap on the number of faces a `Delta` may hold.
pub const MAX_FACES: usize = 1 << 22;

#[derive(Debug, Clone)]
enum Lookup {
    Dense(Vec<u64>),
    Sparse(HashSet<Face>),
}

/// A proper ideal of `B_n`: contains `∅`, misses `[1, n]`. Element `v` is bit `v - 1`.
#[derive(Debug, Clone)]
pub struct Delta {
    n: usize,
    /// Sorted by size, then mask.
    faces: Vec<Face>,
    lookup: Lookup,
}

impl PartialEq for Delta {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.faces == other.faces
    }
}

impl Eq for Delta {}

impl Delta {
    /// Downward closure of `generators`.
    pub fn generated(n: usize, generators: impl IntoIterator<Item = Face>) -> Result<Delta> {
        if n > MAX_GROUND {
            return Err(Error::TooLarge(format!("n = {n} exceeds {MAX_GROUND}")));
        }
        let full = full_mask(n);
        let mut seen: HashSet<Face> = HashSet::new();
        let mut stack: Vec<Face> = Vec::new();
        for g in generators {
            if g & !full != 0 {
                return Err(Error::VertexOutOfUniverse(format!("element {} with n = {n}", 64 - (g & !full).leading_zeros())));
            }
            if g == full {
                return Err(Error::ImproperComplex(format!("Δ contains the full set [1,{n}]")));
            }
            if seen.insert(g) {
                stack.push(g);
            }
        }
        if seen.is_empty() {
            return Err(Error::ImproperComplex("Δ is void".into()));
        }
        while let Some(f) = stack.pop() {
            for v in bits(f) {
                let sub = f & !(1 << v);
                if seen.insert(sub) {
                    if seen.len() > MAX_FACES {
                        return Err(Error::TooLarge(format!("more than {MAX_FACES} faces")));
                    }
                    stack.push(sub);
                }
            }
        }
        Ok(Self::from_closed(n, seen.into_iter().collect()))
    }

    /// Builds from a family already known to be downward closed and proper.
    pub(crate) fn from_closed(n: usize, mut faces: Vec<Face>) -> Delta {
        faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
        let lookup = if n <= DENSE_LIMIT {
            let mut words = vec![0u64; (1usize << n).div_ceil(64)];
            for &f in &faces {
                words[f as usize / 64] |= 1 << (f % 64);
            }
            Lookup::Dense(words)
        } else {
            Lookup::Sparse(faces.iter().copied().collect())
        };
        Delta { n, faces, lookup }
    }

    /// The ideal whose members are the set bits of `family`, subsets of `[1, n]` indexed by mask (`n <= 6`).
    pub fn from_family(n: usize, family: u64) -> Result<Delta> {
        if n > 6 {
            return Err(Error::TooLarge(format!("family bitmap needs n <= 6, got {n}")));
        }
        let faces: Vec<Face> = bits(family).map(|f| f as Face).collect();
        let delta = Self::generated(n, faces)?;
        if delta.faces.len() != family.count_ones() as usize {
            return Err(Error::ImproperComplex("family is not downward closed".into()));
        }
        Ok(delta)
    }

    /// `Δ` from a complex whose vertices are the plain labels `1..=n`.
    pub fn from_complex(k: &SimplicialComplex, n: usize) -> Result<Delta> {
        let mut positions = Vec::with_capacity(k.universe().len());
        for v in k.universe() {
            match v {
                Vertex::Plain(x) if *x >= 1 && (*x as usize) <= n => positions.push(*x as usize - 1),
                Vertex::Plain(x) if *x as usize > n && !k.contains_face(k.mask_of(&[*v])?) => positions.push(usize::MAX),
                other => return Err(Error::VertexOutOfUniverse(format!("{other} with n = {n}"))),
            }
        }
        if k.is_void() {
            return Err(Error::ImproperComplex("Δ is void".into()));
        }
        let facets = k.facets().iter().map(|&f| bits(f).fold(0u64, |acc, i| acc | 1 << positions[i]));
        Self::generated(n, facets.collect::<Vec<_>>())
    }

    /// The complex `{∅}`.
    pub fn empty(n: usize) -> Result<Delta> {
        Self::generated(n, [0])
    }

    /// All subsets of size at most `k`.
    pub fn skeleton(n: usize, k: usize) -> Result<Delta> {
        if k >= n {
            return Err(Error::ImproperComplex(format!("every subset of [1,{n}] up to size {k} includes the full set")));
        }
        Self::generated(n, subsets_of_size(n, k))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Faces sorted by size, then mask.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn contains(&self, face: Face) -> bool {
        if face & !full_mask(self.n) != 0 {
            return false;
        }
        match &self.lookup {
            Lookup::Dense(words) => words[face as usize / 64] >> (face % 64) & 1 == 1,
            Lookup::Sparse(set) => set.contains(&face),
        }
    }

    /// Maximal faces, ascending.
    pub fn facets(&self) -> Vec<Face> {
        let mut out: Vec<Face> = self
            .faces
            .iter()
            .copied()
            .filter(|&f| (0..self.n).all(|v| f >> v & 1 == 1 || !self.contains(f | 1 << v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// `f_i` = number of faces with `i` elements, for `i = 0..=n`.
    pub fn f_vector(&self) -> Vec<i64> {
        let mut f = vec![0i64; self.n + 1];
        for &face in &self.faces {
            f[face.count_ones() as usize] += 1;
        }
        f
    }

    /// Bitmap over all subsets, for `n <= 6`.
    pub fn family(&self) -> Option<u64> {
        (self.n <= 6).then(|| self.faces.iter().fold(0u64, |acc, &f| acc | 1 << f))
    }

    pub fn to_complex(&self) -> SimplicialComplex {
        SimplicialComplex::on_ground_set(self.n, self.facets()).expect("n <= 32")
    }

    /// `Δ ∪ {g}`, where every proper subset of `g` must already be a face and `g` must not be.
    pub fn with_face(&self, g: Face) -> Result<Delta> {
        if !self.is_addable(g) {
            return Err(Error::NotAddable(format_set(g), format!("n = {}", self.n)));
        }
        let mut faces = self.faces.clone();
        faces.push(g);
        Ok(Self::from_closed(self.n, faces))
    }

    pub fn is_addable(&self, g: Face) -> bool {
        g & !full_mask(self.n) == 0
            && g != full_mask(self.n)
            && !self.contains(g)
            && bits(g).all(|v| self.contains(g & !(1 << v)))
    }

    /// Faces that could be added one at a time, ascending by size then mask.
    pub fn addable_faces(&self) -> Vec<Face> {
        let mut out: Vec<Face> = Vec::new();
        for &f in &self.faces {
            for v in 0..self.n {
                let g = f | 1 << v;
                if g != f && self.is_addable(g) {
                    out.push(g);
                }
            }
        }
        out.sort_unstable_by_key(|&f| (f.count_ones(), f));
        out.dedup();
        out
    }

    /// The Alexander dual `Δ* = {[1,n] ∖ A : A ∉ Δ}`.
    pub fn dual(&self) -> Result<Delta> {
        if self.n > DENSE_LIMIT {
            return Err(Error::TooLarge(format!("Alexander dual over n = {}", self.n)));
        }
        let full = full_mask(self.n);
        let faces: Vec<Face> = (0..=full).filter(|&a| !self.contains(full & !a)).collect();
        Ok(Self::from_closed(self.n, faces))
    }

    /// Image under the permutation `perm` of `0..n` (bit `v` goes to bit `perm[v]`).
    pub fn permuted(&self, perm: &[usize]) -> Delta {
        let faces = self.faces.iter().map(|&f| bits(f).fold(0u64, |acc, v| acc | 1 << perm[v])).collect();
        Self::from_closed(self.n, faces)
    }
}

/// All subsets of `[1, n]` with at most `k` elements.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = Face> {
    (0..=full_mask(n)).filter(move |f| f.count_ones() as usize <= k)
}

/// `{1,3}` style rendering of a subset mask.
pub fn format_set(face: Face) -> String {
    crate::poset::subset_label(face)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_counts() {
        let d = Delta::generated(4, [0b0011, 0b0100]).unwrap();
        assert_eq!(d.f_vector(), vec![1, 3, 1, 0, 0]);
        assert_eq!(d.facets(), vec![0b0011, 0b0100]);
        assert!(d.contains(0) && d.contains(0b0001) && !d.contains(0b1000));
        assert!(matches!(Delta::generated(3, [0b111]), Err(Error::ImproperComplex(_))));
        assert!(matches!(Delta::generated(3, Vec::<Face>::new()), Err(Error::ImproperComplex(_))));
        assert!(matches!(Delta::generated(2, [0b100]), Err(Error::VertexOutOfUniverse(_))));
        assert!(matches!(Delta::generated(33, [0]), Err(Error::TooLarge(_))));
    }

    #[test]
    fn sparse_lookup_for_large_n() {
        let d = Delta::generated(30, [1 << 29 | 1]).unwrap();
        assert_eq!(d.faces().len(), 4);
        assert!(d.contains(1 << 29) && !d.contains(1 << 28));
    }

    #[test]
    fn families_and_complexes() {
        // {∅, {1}, {2}} as subsets 0, 1, 2
        let d = Delta::from_family(2, 0b0111).unwrap();
        assert_eq!(d.f_vector(), vec![1, 2, 0]);
        assert_eq!(d.family(), Some(0b0111));
        assert!(Delta::from_family(2, 0b0101 | 0b1000).is_err());
        let k = crate::complex::io::parse_complex("1\n3\n").unwrap();
        let d = Delta::from_complex(&k, 4).unwrap();
        assert_eq!(d.f_vector(), vec![1, 2, 0, 0, 0]);
        assert_eq!(Delta::from_complex(&d.to_complex(), 4).unwrap(), d);
        assert!(Delta::from_complex(&k, 2).is_err());
    }

    #[test]
    fn addable_faces_and_duals() {
        let d = Delta::generated(3, [0b001, 0b010]).unwrap();
        assert_eq!(d.addable_faces(), vec![0b100, 0b011]);
        assert!(d.with_face(0b110).is_err());
        assert_eq!(d.with_face(0b011).unwrap().f_vector(), vec![1, 2, 1, 0]);
        // singletons of [3] are dual to themselves
        let singletons = Delta::skeleton(3, 1).unwrap();
        assert_eq!(singletons.dual().unwrap(), singletons);
        assert_eq!(Delta::empty(3).unwrap().dual().unwrap(), Delta::skeleton(3, 2).unwrap());
    }
}
