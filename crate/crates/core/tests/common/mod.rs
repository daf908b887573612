//! Independent reference computations for the integration tests. Nothing here
//! calls into the crate under test except to read faces of `Δ`.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn set(items: &[usize]) -> u64 {
    items.iter().fold(0, |acc, &v| acc | 1 << (v - 1))
}

/// Proper ideals of `B_n` by brute force over all families (n <= 4).
pub fn brute_ideals(n: usize) -> Vec<HashSet<u64>> {
    let subsets = 1u64 << n;
    let full = subsets - 1;
    let mut out = Vec::new();
    for fam in 0u64..1 << subsets {
        if fam & 1 == 0 || fam >> full & 1 == 1 {
            continue;
        }
        let closed = (0..subsets).all(|s| fam >> s & 1 == 0 || (0..n).all(|v| fam >> (s & !(1 << v)) & 1 == 1));
        if closed {
            out.push((0..subsets).filter(|s| fam >> s & 1 == 1).collect());
        }
    }
    out
}

/// Dedekind numbers minus the empty family and the full lattice.
pub fn proper_ideal_count(n: usize) -> u64 {
    [1u64, 3, 6, 20, 168, 7581, 7828354][n] - 2
}

/// `f_i` = number of `i`-element faces, `i = 0..=n`.
pub fn f_of(n: usize, faces: &HashSet<u64>) -> Vec<i64> {
    let mut f = vec![0i64; n + 1];
    for &a in faces {
        f[a.count_ones() as usize] += 1;
    }
    f
}

/// `(A, x)` with `A ∈ Δ`, `x ∉ A`, `A ∪ {x} ∉ Δ`; `x` is 1-based.
pub fn oracle_facets(n: usize, faces: &HashSet<u64>) -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    for &a in faces {
        for x in 1..=n {
            let bit = 1u64 << (x - 1);
            if a & bit == 0 && !faces.contains(&(a | bit)) {
                out.push((a, x));
            }
        }
    }
    out.sort();
    out
}

/// `A⁻ ∪ ([n] ∖ (A ∪ x))⁺` with `v⁻` at bit `v-1` and `v⁺` at bit `n+v-1`.
pub fn signed_mask(n: usize, a: u64, x: usize) -> u64 {
    let full = (1u64 << n) - 1;
    a | (full & !(a | 1 << (x - 1))) << n
}

pub fn oracle_sphere(n: usize, faces: &HashSet<u64>) -> Vec<u64> {
    let mut v: Vec<u64> = oracle_facets(n, faces).into_iter().map(|(a, x)| signed_mask(n, a, x)).collect();
    v.sort();
    v
}

pub fn all_faces(facets: &[u64]) -> HashSet<u64> {
    let mut out = HashSet::new();
    for &f in facets {
        let mut s = f;
        loop {
            out.insert(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    out
}

/// f-vector by face size `0..len` of a complex given by facets.
pub fn sphere_f(facets: &[u64], len: usize) -> Vec<i64> {
    let mut f = vec![0i64; len];
    for s in all_faces(facets) {
        f[s.count_ones() as usize] += 1;
    }
    f
}

/// `h_k = Σ_i (-1)^(k-i) C(d-i, k-i) f_i` for facets of size `d`.
pub fn h_from_f(f: &[i64], d: usize) -> Vec<i64> {
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binom((d - i) as i64, (k - i) as i64) * f.get(i).copied().unwrap_or(0)
                })
                .sum()
        })
        .collect()
}

pub fn g_from_h(h: &[i64]) -> Vec<i64> {
    let d = h.len() - 1;
    (0..=d / 2).map(|i| if i == 0 { h[0] } else { h[i] - h[i - 1] }).collect()
}

/// `(B, C) = (A ∩ (x, n], A ∪ [x, n])`.
pub fn restriction(n: usize, a: u64, x: usize) -> (u64, u64) {
    let full = (1u64 << n) - 1;
    let above = full & !((1u64 << x) - 1);
    let from_x = full & !((1u64 << (x - 1)) - 1);
    (a & above, a | from_x)
}

/// `-1` on `(A ∪ x)` up to `x`, `+1` above `x`.
pub fn chi(n: usize, a: u64, x: usize) -> Vec<i8> {
    let top = a | 1 << (x - 1);
    (1..=n)
        .map(|i| {
            if top >> (i - 1) & 1 == 0 {
                0
            } else if i <= x {
                -1
            } else {
                1
            }
        })
        .collect()
}

/// Each facet meets the union of the earlier ones in a pure codimension-one
/// subcomplex of its boundary.
pub fn oracle_is_shelling(order: &[u64]) -> bool {
    for j in 1..order.len() {
        let f = order[j];
        let size = f.count_ones();
        for &g in &order[..j] {
            let meet = f & g;
            let covered = order[..j].iter().any(|&h| {
                let m = f & h;
                m.count_ones() + 1 == size && meet & !m == 0
            });
            if !covered {
                return false;
            }
        }
    }
    true
}

/// `m^<i>`: replace each `C(a, j)` in the `i`-cascade of `m` by `C(a, j+1)`.
pub fn kk_bound(mut m: i64, i: i64) -> i64 {
    let mut out = 0;
    let mut j = i;
    while m > 0 && j > 0 {
        let mut a = j;
        while binom(a + 1, j) <= m {
            a += 1;
        }
        m -= binom(a, j);
        out += binom(a, j + 1);
        j -= 1;
    }
    out
}

/// `(1, f_1, f_2, ...)` with `f_{i+1} <= f_i^<i>`, `f_i` counting `i`-sets.
pub fn is_ksequence(seq: &[i64]) -> bool {
    if seq.first() != Some(&1) || seq.iter().any(|&x| x < 0) {
        return false;
    }
    (1..seq.len().saturating_sub(1)).all(|i| seq[i + 1] <= kk_bound(seq[i], i as i64))
}

/// Pairs of facets sets swapped under `v⁻ ↔ v⁺` on `2n` bits.
pub fn antipode(n: usize, face: u64) -> u64 {
    let low = (1u64 << n) - 1;
    (face & low) << n | (face >> n) & low
}

pub fn facet_set(facets: &[u64]) -> BTreeSet<u64> {
    facets.iter().copied().collect()
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn permute_mask(mask: u64, perm: &[usize]) -> u64 {
    (0..perm.len()).filter(|&i| mask >> i & 1 == 1).fold(0, |acc, i| acc | 1 << perm[i])
}
