//! Kruskal–Katona: binomial cascades, K-sequence test, compressed complexes.

use super::{maximal_elements, Face, SimplicialComplex};
use crate::error::{Error, Result};

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// The `i`-binomial representation `m = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j)`
/// with `a_i > a_{i-1} > ... > a_j >= j >= 1`, as `(a_k, k)` pairs.
pub fn binomial_cascade(mut m: u64, i: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut k = i;
    while m > 0 && k >= 1 {
        let mut a = k;
        while binomial(a + 1, k) <= m {
            a += 1;
        }
        out.push((a, k));
        m -= binomial(a, k);
        k -= 1;
    }
    out
}

/// `m^(i)`: the most `(i+1)`-sets that `m` sets of size `i` can support.
pub fn kk_upper_bound(m: u64, i: u64) -> u64 {
    binomial_cascade(m, i).into_iter().map(|(a, k)| binomial(a, k + 1)).sum()
}

/// `seq = (1, f_1, f_2, ...)` is the f-vector of some simplicial complex.
pub fn kk_is_ksequence(seq: &[i64]) -> bool {
    if seq.first() != Some(&1) || seq.iter().any(|&x| x < 0) {
        return false;
    }
    seq.windows(2).enumerate().skip(1).all(|(i, w)| w[1] as u64 <= kk_upper_bound(w[0] as u64, i as u64))
}

/// The first `count` subsets of size `k` of `[1, n]` in colex order.
///
/// Colex order on k-sets is the numeric order of their masks.
fn colex_segment(k: usize, count: usize) -> impl Iterator<Item = Face> {
    let mut current: Option<u64> = if k == 0 { Some(0) } else { Some((1u64 << k) - 1) };
    let mut left = count;
    std::iter::from_fn(move || {
        if left == 0 {
            return None;
        }
        let out = current?;
        left -= 1;
        current = if out == 0 {
            None
        } else {
            // Gosper's hack: next larger mask with the same popcount.
            let c = out & out.wrapping_neg();
            let r = out + c;
            Some((((r ^ out) >> 2) / c) | r)
        };
        Some(out)
    })
}

/// The compressed complex whose `i`-faces are the first `f_i` colex `i`-subsets of `[1, n]`.
pub fn kk_compressed_complex(target: &[i64], n: usize) -> Result<SimplicialComplex> {
    if !kk_is_ksequence(target) {
        return Err(Error::NotAKSequence(format!("{target:?}")));
    }
    if n > super::MAX_VERTICES {
        return Err(Error::TooLarge(format!("ground set of size {n}")));
    }
    let mut faces = Vec::new();
    for (k, &count) in target.iter().enumerate() {
        let available = binomial(n as u64, k as u64);
        if count as u64 > available {
            return Err(Error::NotAKSequence(format!(
                "f_{k} = {count} exceeds the {available} subsets of size {k} of [1,{n}]"
            )));
        }
        faces.extend(colex_segment(k, count as usize));
    }
    SimplicialComplex::on_ground_set(n, maximal_elements(faces))
}
