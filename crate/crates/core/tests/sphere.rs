mod common;

use std::collections::HashSet;

use bier::complex::is_shelling;
use bier::sphere::{
    add_face_flip, bier_complex, delta_prime, g_bier, h_via_restriction, h_via_reversed_restriction, locate,
    realize_ksequence, restriction, shelling_order, sphere_vectors, Delta, FacetAX,
};
use bier::Error;
use common::*;
use proptest::prelude::*;

fn faces_of(d: &Delta) -> HashSet<u64> {
    d.faces().iter().copied().collect()
}

/// Proper complexes on `[1, n]` from a few random generators.
fn delta_strategy() -> impl Strategy<Value = Delta> {
    (2usize..=7).prop_flat_map(|n| {
        let full = (1u64 << n) - 1;
        prop::collection::vec(0..full, 0..5).prop_map(move |gens| Delta::generated(n, gens.into_iter().chain([0])).unwrap())
    })
}

#[test]
fn facet_text_form() {
    assert_eq!(FacetAX::new(set(&[1, 3]), 2, 4).to_string(), "1 3 | 2");
    assert_eq!(FacetAX::new(0, 2, 4).to_string(), "- | 2");
}

#[test]
fn hexagon_from_singletons() {
    let d = Delta::skeleton(3, 1).unwrap();
    let s = bier_complex(&d);
    assert_eq!(s.facets().len(), 6);
    assert_eq!(sphere_vectors(&d).unwrap().f, vec![1, 6, 6]);
    let text = s.to_file();
    assert!(text.contains("\nn=6\n"));
}

#[test]
fn improper_inputs() {
    assert!(matches!(Delta::generated(3, [0b111]), Err(Error::ImproperComplex(_))));
    assert!(matches!(Delta::generated(3, [0b1000]), Err(Error::VertexOutOfUniverse(_))));
    assert!(matches!(realize_ksequence(&[1, 9], 4), Err(Error::NotAKSequence(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn vectors_agree_with_the_oracle(d in delta_strategy()) {
        let n = d.n();
        let facets = oracle_sphere(n, &faces_of(&d));
        let h = h_from_f(&sphere_f(&facets, n), n - 1);
        let v = sphere_vectors(&d).unwrap();
        prop_assert_eq!(&v.h, &h);
        prop_assert_eq!(&h_via_restriction(&d), &h);
        prop_assert_eq!(&h_via_reversed_restriction(&d), &h);
        prop_assert_eq!(g_bier(&d), g_from_h(&h));
        prop_assert_eq!(bier_complex(&d).complex().facets().len(), facets.len());
    }

    #[test]
    fn chi_lex_order_shells(d in delta_strategy()) {
        let n = d.n();
        let order = shelling_order(&d);
        let masks: Vec<u64> = order.iter().map(|f| signed_mask(n, f.a, f.x)).collect();
        prop_assert!(oracle_is_shelling(&masks));
        let s = bier_complex(&d);
        let faces: Vec<u64> = order.iter().map(|f| s.facet_face(f)).collect();
        prop_assert!(is_shelling(s.complex(), &faces).unwrap().valid);
        for f in &order {
            let r = restriction(f);
            prop_assert_eq!((r.b, r.c), common::restriction(n, f.a, f.x));
            prop_assert_eq!(&locate(&d, r.b, r.c).unwrap(), f);
        }
    }

    #[test]
    fn dual_is_an_involution_with_swapped_sphere(d in delta_strategy()) {
        let n = d.n();
        let dual = d.dual().unwrap();
        prop_assert_eq!(&dual.dual().unwrap(), &d);
        let ours: HashSet<u64> = oracle_sphere(n, &faces_of(&d)).into_iter().collect();
        let theirs: HashSet<u64> = oracle_sphere(n, &faces_of(&dual)).into_iter().map(|f| antipode(n, f)).collect();
        prop_assert_eq!(ours, theirs);
    }

    #[test]
    fn delta_prime_counts(d in delta_strategy()) {
        let n = d.n();
        let p = delta_prime(&d);
        let f = f_of(n, &faces_of(&d));
        let fp = f_of(n, &faces_of(&p));
        for i in 0..=n {
            let want = if 2 * i <= n { f[i] - f[n - i] } else { 0 };
            prop_assert_eq!(fp[i], want, "i = {}", i);
        }
        prop_assert!(faces_of(&p).is_subset(&faces_of(&d)));
    }

    #[test]
    fn adding_a_face_is_a_flip(d in delta_strategy(), pick in 0usize..64) {
        let addable = d.addable_faces();
        prop_assume!(!addable.is_empty());
        let g = addable[pick % addable.len()];
        let flip = add_face_flip(&d, g).unwrap();
        prop_assert!(flip.matches_labeled);
        prop_assert_eq!(flip.index, g.count_ones() as usize - 1);
        let n = d.n();
        let before = sphere_f(&oracle_sphere(n, &faces_of(&d)), n);
        let after = sphere_f(&oracle_sphere(n, &faces_of(&flip.result)), n);
        // faces containing A = (G^c)⁺ leave, faces containing B = G⁻ arrive
        let (a, b) = (n - g.count_ones() as usize, g.count_ones() as usize);
        prop_assert_eq!(after.iter().sum::<i64>() - before.iter().sum::<i64>(), (1i64 << a) - (1i64 << b));
    }
}
