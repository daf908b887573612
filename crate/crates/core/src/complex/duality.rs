use super::{full_mask, maximal_elements, submasks, Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// Largest ground set for which the dual is computed by scanning all subsets.
const DUAL_SCAN_LIMIT: usize = 26;

/// `Δ* = { F : U \ F ∉ Δ }` over the universe `U` of `Δ`.
pub fn alexander_dual(delta: &SimplicialComplex) -> Result<SimplicialComplex> {
    let n = delta.universe().len();
    let full = full_mask(n);
    if delta.is_void() {
        return Err(Error::ImproperComplex("the void complex has no Alexander dual here".into()));
    }
    if delta.contains_face(full) {
        return Err(Error::ImproperComplex("Δ is the full simplex".into()));
    }
    if n > DUAL_SCAN_LIMIT {
        return Err(Error::TooLarge(format!("Alexander dual over {n} vertices")));
    }
    // Δ* is downward closed, so its facets are the maximal F whose complement is a
    // minimal non-face of Δ.
    let duals: Vec<Face> = (0..=full).filter(|&f| !delta.contains_face(full & !f)).collect();
    Ok(SimplicialComplex::from_masks_unchecked(delta.universe().to_vec(), maximal_elements(duals)))
}

fn ground_label(v: &Vertex) -> Result<u32> {
    match v {
        Vertex::Plain(x) => Ok(*x),
        other => Err(Error::VertexOutOfUniverse(format!("{other} is not a ground-set label"))),
    }
}

/// Faces `A⁻ ∪ B⁺` with `A ∈ Δ`, `B ∈ Δ'` and `A ∩ B = ∅`.
///
/// The universe is `1⁻..n⁻` followed by `1⁺..n⁺`.
pub fn deleted_join(delta: &SimplicialComplex, other: &SimplicialComplex) -> Result<SimplicialComplex> {
    let n = delta.universe().len();
    if n != other.universe().len() {
        return Err(Error::GroundSetMismatch(n, other.universe().len()));
    }
    if delta.universe() != other.universe() {
        return Err(Error::GroundSetMismatch(n, other.universe().len()));
    }
    if 2 * n > super::MAX_VERTICES {
        return Err(Error::TooLarge(format!("deleted join over {n} elements")));
    }
    let labels: Vec<u32> = delta.universe().iter().map(ground_label).collect::<Result<_>>()?;
    let universe: Vec<Vertex> =
        labels.iter().map(|&v| Vertex::Minus(v)).chain(labels.iter().map(|&v| Vertex::Plus(v))).collect();

    let mut faces = Vec::new();
    for &f in delta.facets() {
        for &g in other.facets() {
            let common = f & g;
            for to_minus in submasks(common) {
                let a = (f & !common) | to_minus;
                let b = (g & !common) | (common & !to_minus);
                faces.push(a | b << n);
            }
        }
    }
    Ok(SimplicialComplex::from_masks_unchecked(universe, maximal_elements(faces)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ground_universe;

    fn on(n: usize, masks: &[u64]) -> SimplicialComplex {
        SimplicialComplex::on_ground_set(n, masks.iter().copied()).unwrap()
    }

    #[test]
    fn duals_over_two_elements() {
        let dual = alexander_dual(&on(2, &[0b01, 0b10])).unwrap();
        assert_eq!(dual.facets(), &[0]);
        let dual = alexander_dual(&on(2, &[0b01])).unwrap();
        assert_eq!(dual.facets(), &[0b01]);
    }

    #[test]
    fn dual_is_an_involution_over_four_elements() {
        // every down-set of B_4 generated by at most two facets
        let full = 0b1111u64;
        for a in 0..full {
            for b in 0..full {
                let delta = on(4, &[a, b]);
                let twice = alexander_dual(&alexander_dual(&delta).unwrap()).unwrap();
                assert_eq!(twice, delta);
            }
        }
    }

    #[test]
    fn improper_inputs() {
        assert!(matches!(alexander_dual(&on(2, &[0b11])), Err(Error::ImproperComplex(_))));
        assert!(matches!(alexander_dual(&on(2, &[])), Err(Error::ImproperComplex(_))));
    }

    #[test]
    fn deleted_joins() {
        let d = on(2, &[0b01]);
        let j = deleted_join(&d, &d).unwrap();
        assert_eq!(j.facet_labels(), vec![vec![Vertex::Minus(1)], vec![Vertex::Plus(1)]]);

        // {∅} joined with anything is the plus copy of the other complex
        let empty = on(3, &[0]);
        let other = on(3, &[0b011, 0b100]);
        let j = deleted_join(&empty, &other).unwrap();
        assert_eq!(
            j.facet_labels(),
            vec![vec![Vertex::Plus(1), Vertex::Plus(2)], vec![Vertex::Plus(3)]]
        );

        // the singletons on [1,3] are self-dual
        let singletons = on(3, &[0b001, 0b010, 0b100]);
        let dual = alexander_dual(&singletons).unwrap();
        assert_eq!(dual, singletons);
        let hexagon = deleted_join(&singletons, &dual).unwrap();
        assert_eq!(hexagon.f_vector(3).unwrap(), vec![1, 6, 6, 0]);

        let bigger = SimplicialComplex::on_ground_set(4, [0b1]).unwrap();
        assert_eq!(deleted_join(&singletons, &bigger), Err(Error::GroundSetMismatch(3, 4)));
        assert!(deleted_join(&on(3, &[0]), &SimplicialComplex::from_masks(ground_universe(3), [0]).unwrap()).is_ok());
    }
}
