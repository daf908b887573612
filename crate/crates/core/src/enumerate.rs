//! Exhaustive and random generation of proper ideals of `B_n`, and counting
//! Bier spheres up to isomorphism.
//!
//! For `n <= 6` an ideal is a `u64` family: bit `s` is set when the subset with
//! mask `s` belongs to it. A down-set `D` of `B_n` splits into the down-sets
//! `D0 = {S ∈ D : n ∉ S}` and `D1 = {S ∖ {n} : n ∈ S ∈ D}` of `B_{n-1}` with
//! `D1 ⊆ D0`, which is how the stream walks them.

use std::collections::HashSet;
use std::sync::Arc;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{bits, canonicalize, full_mask, CanonicalForm, Face};
use crate::error::{Error, Result};
use crate::sphere::{bier_complex, Delta, MAX_GROUND};

/// Largest `n` walked exhaustively.
pub const MAX_EXHAUSTIVE: usize = 6;
/// Largest `n` whose isomorphism classes are counted over all ideals.
pub const MAX_ISO_EXHAUSTIVE: usize = 5;
/// Most middle-level sets the restricted count will range over (`2^20` selections).
const MAX_RESTRICTED_LEVEL: usize = 20;

/// All down-sets of `B_m` (including the empty family and all of `B_m`), as families.
pub fn downsets(m: usize) -> Vec<u64> {
    if m == 0 {
        return vec![0, 1];
    }
    let lower = downsets(m - 1);
    let shift = 1u32 << (m - 1);
    let mut out = Vec::new();
    for &d0 in &lower {
        for &d1 in &lower {
            if d1 & !d0 == 0 {
                out.push(d0 | d1 << shift);
            }
        }
    }
    out
}

/// Every proper ideal of `B_n` containing `∅`, once each, in a fixed order.
///
/// A stream may be restricted to one shard: the outer index modulo `shards`.
#[derive(Debug, Clone)]
pub struct IdealStream {
    n: usize,
    lower: Arc<Vec<u64>>,
    outer: usize,
    inner: usize,
    shard: usize,
    shards: usize,
}

pub fn all_complexes(n: usize) -> Result<IdealStream> {
    all_complexes_shard(n, 0, 1)
}

pub fn all_complexes_shard(n: usize, shard: usize, shards: usize) -> Result<IdealStream> {
    if n == 0 || n > MAX_EXHAUSTIVE {
        return Err(Error::TooLarge(format!("exhaustive enumeration needs 1 <= n <= {MAX_EXHAUSTIVE}, got {n}")));
    }
    if shards == 0 || shard >= shards {
        return Err(Error::BadParameter(format!("shard {shard} of {shards}")));
    }
    Ok(IdealStream { n, lower: Arc::new(downsets(n - 1)), outer: shard, inner: 0, shard, shards })
}

impl IdealStream {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shard(&self) -> (usize, usize) {
        (self.shard, self.shards)
    }

    /// The same stream with each family turned into a [`Delta`].
    pub fn deltas(self) -> impl Iterator<Item = Delta> {
        let n = self.n;
        self.map(move |family| family_to_delta(n, family))
    }
}

impl Iterator for IdealStream {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let full = if self.n == 6 { u64::MAX } else { (1u64 << (1 << self.n)) - 1 };
        let shift = 1u32 << (self.n - 1);
        while self.outer < self.lower.len() {
            let d0 = self.lower[self.outer];
            while self.inner < self.lower.len() {
                let d1 = self.lower[self.inner];
                self.inner += 1;
                if d1 & !d0 == 0 {
                    let family = d0 | d1 << shift;
                    if family != 0 && family != full {
                        return Some(family);
                    }
                }
            }
            self.outer += self.shards;
            self.inner = 0;
        }
        None
    }
}

/// A family known to be a proper down-set, as a [`Delta`].
pub fn family_to_delta(n: usize, family: u64) -> Delta {
    Delta::from_closed(n, bits(family).map(|s| s as Face).collect())
}

/// Runs `visit` over every proper ideal of `B_n`, split into `workers` shards
/// on scoped threads; returns the per-shard states in shard order.
pub fn par_visit<S, F>(n: usize, workers: usize, init: impl Fn() -> S + Sync, visit: F) -> Result<Vec<S>>
where
    S: Send,
    F: Fn(&mut S, u64) + Sync,
{
    let workers = workers.max(1);
    let streams: Vec<IdealStream> = (0..workers).map(|w| all_complexes_shard(n, w, workers)).collect::<Result<_>>()?;
    let init = &init;
    let visit = &visit;
    Ok(std::thread::scope(|scope| {
        let handles: Vec<_> = streams
            .into_iter()
            .map(|stream| {
                scope.spawn(move || {
                    let mut state = init();
                    for family in stream {
                        visit(&mut state, family);
                    }
                    state
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    }))
}

/// Number of proper ideals of `B_n`.
pub fn count_ideals(n: usize, workers: usize) -> Result<u64> {
    Ok(par_visit(n, workers, || 0u64, |c, _| *c += 1)?.into_iter().sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoMode {
    /// Every proper ideal (`n <= 5`).
    Exhaustive,
    /// All sets of size at most `(n-1)/2` plus any subcollection of the next level.
    Restricted,
}

/// The restricted family for `n`: the base skeleton and the sets of the level above it.
pub fn restricted_levels(n: usize) -> (Vec<Face>, Vec<Face>) {
    let low = n.saturating_sub(1) / 2;
    let full = full_mask(n);
    let base = (0..=full).filter(|s| s.count_ones() as usize <= low).collect();
    let level = (0..full).filter(|s| s.count_ones() as usize == low + 1).collect();
    (base, level)
}

/// The member of the restricted family picked by the bits of `selection`.
pub fn restricted_member(n: usize, base: &[Face], level: &[Face], selection: u64) -> Delta {
    let mut faces = base.to_vec();
    faces.extend(bits(selection).map(|i| level[i]));
    Delta::from_closed(n, faces)
}

fn canonical_key(delta: &Delta) -> Result<CanonicalForm> {
    canonicalize(bier_complex(delta).complex())
}

/// Number of distinct canonical forms of Bier spheres over the family `mode`.
pub fn count_bier_isoclasses(n: usize, mode: IsoMode, workers: usize) -> Result<usize> {
    Ok(bier_isoclasses(n, mode, workers)?.len())
}

/// Canonical forms of the Bier spheres over the family `mode`.
pub fn bier_isoclasses(n: usize, mode: IsoMode, workers: usize) -> Result<HashSet<CanonicalForm>> {
    let workers = workers.max(1);
    let shards: Vec<Result<HashSet<CanonicalForm>>> = match mode {
        IsoMode::Exhaustive => {
            if n == 0 || n > MAX_ISO_EXHAUSTIVE {
                return Err(Error::TooLarge(format!(
                    "exhaustive isomorphism count needs 1 <= n <= {MAX_ISO_EXHAUSTIVE}, got {n}; use the restricted mode"
                )));
            }
            par_visit(n, workers, || Ok(HashSet::new()), |acc: &mut Result<HashSet<CanonicalForm>>, family| {
                if let Ok(set) = acc {
                    match canonical_key(&family_to_delta(n, family)) {
                        Ok(key) => {
                            set.insert(key);
                        }
                        Err(e) => *acc = Err(e),
                    }
                }
            })?
        }
        IsoMode::Restricted => {
            if n == 0 || n > MAX_GROUND {
                return Err(Error::TooLarge(format!("restricted count needs 1 <= n <= {MAX_GROUND}, got {n}")));
            }
            let (base, level) = restricted_levels(n);
            if level.len() > MAX_RESTRICTED_LEVEL {
                return Err(Error::TooLarge(format!("2^{} middle-level selections", level.len())));
            }
            let total = 1u64 << level.len();
            let (base, level) = (&base, &level);
            std::thread::scope(|scope| {
                let handles: Vec<_> = (0..workers as u64)
                    .map(|w| {
                        scope.spawn(move || {
                            let mut set = HashSet::new();
                            let mut selection = w;
                            while selection < total {
                                set.insert(canonical_key(&restricted_member(n, base, level, selection))?);
                                selection += workers as u64;
                            }
                            Ok(set)
                        })
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
            })
        }
    };
    let mut all = HashSet::new();
    for shard in shards {
        all.extend(shard?);
    }
    Ok(all)
}

/// A seeded random proper ideal: the closure of the sets `[1,n] ∖ {j}`, each
/// thinned by keeping every element with probability `density`.
pub fn random_complex(n: usize, seed: u64, density: f64) -> Result<Delta> {
    if n == 0 || n > MAX_GROUND {
        return Err(Error::BadParameter(format!("n = {n} outside 1..={MAX_GROUND}")));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::BadParameter(format!("density {density} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = full_mask(n);
    let generators: Vec<Face> = (0..n)
        .map(|j| bits(full & !(1 << j)).filter(|_| rng.random_bool(density)).fold(0, |acc, v| acc | 1 << v))
        .collect();
    Delta::generated(n, generators)
}
