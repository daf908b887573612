use serde::{Deserialize, Serialize};

use super::kk::binomial;
use super::SimplicialComplex;
use crate::error::{Error, Result};

/// f-, h- and g-vectors of a complex read as a pure `(n-2)`-dimensional one.
///
/// `f` runs over indices `0..n`, `h` over `0..n`, `g` over `0..=(n-1)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FhgVectors {
    pub n: usize,
    pub f: Vec<i64>,
    pub h: Vec<i64>,
    pub g: Vec<i64>,
}

impl FhgVectors {
    pub fn of(complex: &SimplicialComplex, n: usize) -> Result<Self> {
        let f = complex.f_vector(n.saturating_sub(1))?;
        let h = h_from_f(&f, n)?;
        let g = g_from_h(&h);
        Ok(FhgVectors { n, f: f[..n.max(1)].to_vec(), h, g })
    }
}

fn signed_binomial(n: usize, k: usize) -> i64 {
    binomial(n as u64, k as u64) as i64
}

/// `h_i = Σ_j (-1)^(i+j) C(n-1-j, n-1-i) f_j` for `0 <= i <= n-1`.
///
/// Entries of `f` past index `n-1` must be zero.
pub fn h_from_f(f: &[i64], n: usize) -> Result<Vec<i64>> {
    if n == 0 || f.len() < n {
        return Err(Error::LengthMismatch(format!("need at least {n} entries of f, got {}", f.len())));
    }
    if let Some(j) = (n..f.len()).find(|&j| f[j] != 0) {
        return Err(Error::LengthMismatch(format!("f_{j} = {} is nonzero beyond index {}", f[j], n - 1)));
    }
    let m = n - 1;
    Ok((0..n)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    sign * signed_binomial(m - j, m - i) * f[j]
                })
                .sum()
        })
        .collect())
}

/// Inverse of [`h_from_f`]: `f_i = Σ_j C(n-1-j, n-1-i) h_j`.
pub fn f_from_h(h: &[i64], n: usize) -> Result<Vec<i64>> {
    if n == 0 || h.len() != n {
        return Err(Error::LengthMismatch(format!("h must have {n} entries, got {}", h.len())));
    }
    let m = n - 1;
    Ok((0..n).map(|i| (0..=i).map(|j| signed_binomial(m - j, m - i) * h[j]).sum()).collect())
}

/// `g_0 = 1` (that is, `h_0`), `g_i = h_i - h_{i-1}` for `1 <= i <= (len-1)/2`.
pub fn g_from_h(h: &[i64]) -> Vec<i64> {
    if h.is_empty() {
        return Vec::new();
    }
    let top = (h.len() - 1) / 2;
    (0..=top).map(|i| if i == 0 { h[0] } else { h[i] - h[i - 1] }).collect()
}
