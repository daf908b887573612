use super::{bits, maximal_elements, Face, SimplicialComplex, Vertex, MAX_VERTICES};
use crate::error::{Error, Result};

fn with_fresh_vertex(k: &SimplicialComplex, apex: Vertex) -> Result<(Vec<Vertex>, u64)> {
    if k.vertex_index(&apex).is_some() {
        return Err(Error::LabelCollision(apex.to_string()));
    }
    if k.universe().len() >= MAX_VERTICES {
        return Err(Error::TooLarge(format!("adding {apex} exceeds {MAX_VERTICES} vertices")));
    }
    let mut universe = k.universe().to_vec();
    universe.push(apex);
    Ok((universe, 1u64 << k.universe().len()))
}

/// Stellar subdivision of `k` at the nonempty face `face` with the new apex `apex`.
///
/// Faces containing `face` are removed; `G ∪ {apex}` is added for every `G` not
/// containing `face` with `G ∪ face ∈ k`.
pub fn stellar_subdivide(k: &SimplicialComplex, face: Face, apex: Vertex) -> Result<SimplicialComplex> {
    if face == 0 || !k.contains_face(face) {
        return Err(Error::FaceNotPresent(k.format_face(face)));
    }
    let (universe, apex_bit) = with_fresh_vertex(k, apex)?;
    let mut facets = Vec::with_capacity(k.facets().len() * 2);
    for &h in k.facets() {
        if face & !h != 0 {
            facets.push(h);
        } else {
            facets.extend(bits(face).map(|f| (h & !(1 << f)) | apex_bit));
        }
    }
    Ok(SimplicialComplex::from_masks_unchecked(universe, maximal_elements(facets)))
}

/// Result of a bistellar flip `Φ_A(Γ) = (Γ \ (A * ∂B)) ∪ (∂A * B)`.
#[derive(Debug, Clone)]
pub struct Flip {
    pub complex: SimplicialComplex,
    pub removed: Vec<Vertex>,
    pub inserted: Vec<Vertex>,
    /// `i` of the bistellar `i`-flip: `dim B`.
    pub index: usize,
}

/// `d - dim A` for a face with `face_size` vertices in a pure `d`-complex.
pub fn flip_index(d: usize, face_size: usize) -> usize {
    d + 1 - face_size
}

/// Bistellar flip at `face`, whose link must be the boundary of a simplex `B ∉ Γ`.
///
/// When `face` is a facet the link is `{∅}` and `B` is the new vertex `fresh`.
pub fn bistellar_flip(gamma: &SimplicialComplex, face: Face, fresh: Option<Vertex>) -> Result<Flip> {
    if !gamma.is_pure() {
        return Err(Error::NotPure);
    }
    if !gamma.contains_face(face) {
        return Err(Error::FaceNotPresent(gamma.format_face(face)));
    }
    let link = gamma.link(face);
    let (universe, b) = if link == [0] {
        let apex = fresh.ok_or_else(|| {
            Error::BadParameter(format!("flip at the facet {} needs a fresh vertex label", gamma.format_face(face)))
        })?;
        with_fresh_vertex(gamma, apex)?
    } else {
        let b = link.iter().fold(0u64, |acc, &l| acc | l);
        let size = b.count_ones() as usize;
        let is_boundary = size >= 2
            && link.len() == size
            && link.iter().all(|&l| l.count_ones() as usize == size - 1);
        if !is_boundary {
            return Err(Error::LinkNotSimplexBoundary(gamma.format_face(face)));
        }
        if gamma.contains_face(b) {
            return Err(Error::BAlreadyPresent(gamma.format_face(b)));
        }
        (gamma.universe().to_vec(), b)
    };

    let mut facets: Vec<Face> = gamma.facets().iter().copied().filter(|&h| face & !h != 0).collect();
    facets.extend(bits(face).map(|a| (face & !(1 << a)) | b));
    let labels = |mask: Face| -> Vec<Vertex> { bits(mask).map(|i| universe[i]).collect() };
    let removed = labels(face);
    let inserted = labels(b);
    let index = inserted.len() - 1;
    let complex = SimplicialComplex::from_masks_unchecked(universe.clone(), maximal_elements(facets)).compact();
    Ok(Flip { complex, removed, inserted, index })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{ground_universe, homology_gf2};

    fn cycle(m: u32) -> SimplicialComplex {
        let universe = ground_universe(m as usize);
        let facets = (0..m).map(|i| (1u64 << i) | (1u64 << ((i + 1) % m)));
        SimplicialComplex::from_masks(universe, facets).unwrap()
    }

    #[test]
    fn subdividing_an_edge_of_a_cycle_lengthens_it() {
        let hexagon = cycle(6);
        let heptagon = stellar_subdivide(&hexagon, 0b11, Vertex::Pair(1, 2)).unwrap();
        assert_eq!(heptagon.f_vector(2).unwrap(), vec![1, 7, 7]);
        let triangle = cycle(3);
        let square = stellar_subdivide(&triangle, 0b11, Vertex::Pair(1, 2)).unwrap();
        assert_eq!(square.f_vector(2).unwrap(), vec![1, 4, 4]);
    }

    #[test]
    fn subdividing_a_triangle_of_the_tetrahedron_boundary() {
        let sphere = SimplicialComplex::simplex_boundary(ground_universe(4)).unwrap();
        let sub = stellar_subdivide(&sphere, 0b0111, Vertex::Plain(5)).unwrap();
        assert_eq!(sub.f_vector(3).unwrap(), vec![1, 5, 9, 6]);
        assert_eq!(sub.reduced_euler_characteristic().unwrap(), sphere.reduced_euler_characteristic().unwrap());
        assert_eq!(homology_gf2(&sub).unwrap(), vec![0, 0, 1]);
    }

    #[test]
    fn subdivision_errors() {
        let triangle = cycle(3);
        assert!(matches!(stellar_subdivide(&triangle, 0b111, Vertex::Plain(9)), Err(Error::FaceNotPresent(_))));
        assert!(matches!(stellar_subdivide(&triangle, 0, Vertex::Plain(9)), Err(Error::FaceNotPresent(_))));
        assert_eq!(stellar_subdivide(&triangle, 0b11, Vertex::Plain(1)), Err(Error::LabelCollision("1".into())));
    }

    #[test]
    fn zero_flip_on_the_triangle() {
        let triangle = cycle(3);
        let flip = bistellar_flip(&triangle, 0b011, Some(Vertex::Plain(4))).unwrap();
        assert_eq!(flip.index, 0);
        assert_eq!(flip.complex.f_vector(2).unwrap(), vec![1, 4, 4]);
        assert!(matches!(bistellar_flip(&triangle, 0b011, None), Err(Error::BadParameter(_))));
    }

    #[test]
    fn one_flip_removes_a_vertex_of_a_square() {
        // square 1-2-3-4: link of vertex 1 is {2, 4} = ∂{2,4}, and {2,4} is not an edge
        let square = cycle(4);
        let flip = bistellar_flip(&square, 0b0001, None).unwrap();
        assert_eq!(flip.index, 1);
        assert_eq!(flip.complex.f_vector(2).unwrap(), vec![1, 3, 3]);
        // in the triangle the link of a vertex is an edge's boundary, but that edge exists
        assert!(matches!(bistellar_flip(&cycle(3), 0b001, None), Err(Error::BAlreadyPresent(_))));
    }

    #[test]
    fn link_that_is_not_a_simplex_boundary() {
        // two triangles sharing the edge {1,2}, plus a dangling edge {1,5}: not pure
        let k = SimplicialComplex::from_masks(ground_universe(5), [0b00111, 0b01011, 0b10001]).unwrap();
        assert_eq!(bistellar_flip(&k, 0b1, None).unwrap_err(), Error::NotPure);
        // octahedron: the link of a vertex is a 4-cycle
        let universe = ground_universe(6);
        let pairs = [(0, 1), (2, 3), (4, 5)];
        let mut facets = Vec::new();
        for s in 0..8u32 {
            let pick = |k: usize, p: (u32, u32)| if s >> k & 1 == 0 { p.0 } else { p.1 };
            facets.push((0..3).fold(0u64, |acc, k| acc | 1 << pick(k, pairs[k])));
        }
        let octahedron = SimplicialComplex::from_masks(universe, facets).unwrap();
        assert!(matches!(bistellar_flip(&octahedron, 0b1, None), Err(Error::LinkNotSimplexBoundary(_))));
    }
}
