use std::collections::HashMap;

use super::{bits, find_shelling, homology_gf2, SimplicialComplex};
use crate::report::{tuple, BierReport};

/// Search effort spent looking for a shelling before giving up.
const SHELLING_BUDGET: usize = 200_000;

/// Combinatorial evidence that `k` is a simplicial sphere of dimension `expected_dim`.
///
/// Records purity, the pseudomanifold property, the reduced Euler characteristic,
/// GF(2) homology and a shelling found by bounded search. Failures are report
/// entries, never errors.
pub fn sphere_checks(k: &SimplicialComplex, expected_dim: isize) -> BierReport {
    let mut report = BierReport::new(format!("sphere checks, dimension {expected_dim}"));
    let Some(dim) = k.dim() else {
        report.check("non-void", false, "complex has no faces");
        return report;
    };
    report.check("dimension", dim == expected_dim, format!("{dim}"));
    report.check("pure", k.is_pure(), if k.is_pure() { String::new() } else { "facets of different sizes".into() });

    let mut ridge_count: HashMap<u64, usize> = HashMap::new();
    if dim >= 0 {
        for &f in k.facets() {
            for v in bits(f) {
                *ridge_count.entry(f & !(1 << v)).or_default() += 1;
            }
        }
    }
    let bad_ridge = ridge_count.iter().filter(|&(_, &c)| c != 2).min_by_key(|&(&r, _)| r);
    match bad_ridge {
        None => report.check("pseudomanifold", true, ""),
        Some((&r, &c)) => report.check("pseudomanifold", false, format!("ridge {} lies in {c} facets", k.format_face(r))),
    };

    let chi = k.reduced_euler_characteristic().expect("non-void");
    let want = if expected_dim.rem_euclid(2) == 0 { 1 } else { -1 };
    report.check("euler characteristic", chi == want, format!("{chi} (sphere: {want})"));

    let betti = homology_gf2(k).expect("non-void");
    let mut sphere_betti = vec![0usize; (expected_dim + 1).max(0) as usize];
    if let Some(last) = sphere_betti.last_mut() {
        *last = 1;
    }
    let homology_ok = if expected_dim < 0 { k.facets() == [0] } else { betti == sphere_betti };
    report.check("homology gf2", homology_ok, tuple(&betti));

    if k.is_pure() {
        match find_shelling(k, SHELLING_BUDGET) {
            Ok(Some(_)) => report.check("shellable", true, "order found"),
            Ok(None) => report.check("shellable", false, "exhaustive search found no shelling"),
            Err(e) => report.check("shellable", false, e.to_string()),
        };
    }
    report
}
