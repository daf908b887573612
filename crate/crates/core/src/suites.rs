//! Verification suites run over every proper ideal of `B_n` or over seeded
//! random ones, aggregated into a single report.

use std::collections::BTreeMap;

use crate::complex::{
    alexander_dual, canonicalize, deleted_join, full_mask, g_from_h, is_shelling, kk_is_ksequence, sphere_checks, Face,
};
use crate::enumerate::{family_to_delta, par_visit, random_complex, MAX_EXHAUSTIVE};
use crate::error::{Error, Result};
use crate::report::{tuple, BierReport, Status};
use crate::sphere::{
    add_face_flip, bier_complex, chi, delta_prime, g_bier, h_via_restriction, h_via_reversed_restriction, lbc_status,
    locate, locate_by_max, prec, realize_ksequence, restriction, shelling_order, sphere_vectors, symmetry_checks, Delta,
    FacetAX, Interval,
};

pub const SUITES: &[&str] =
    &["g-theorem", "dehn-sommerville", "shelling", "delta-prime", "kseq", "lbc", "flip", "deleted-join", "sphere", "symmetry"];

/// Where the instances come from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Source {
    Exhaustive,
    Random { count: usize, seed: u64, density: f64 },
}

/// Per-check pass count and the first failure seen.
#[derive(Debug, Default, Clone)]
pub struct Tally {
    pub instances: u64,
    checks: BTreeMap<String, (u64, u64, Option<String>)>,
    infos: BTreeMap<String, u64>,
}

impl Tally {
    fn record(&mut self, delta: &Delta, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        let slot = self.checks.entry(name.to_string()).or_default();
        if ok {
            slot.0 += 1;
        } else {
            slot.1 += 1;
            if slot.2.is_none() {
                slot.2 = Some(format!("Δ = {}: {}", describe(delta), witness()));
            }
        }
    }

    fn count(&mut self, name: &str) {
        *self.infos.entry(name.to_string()).or_default() += 1;
    }

    /// Associative merge; the earlier tally's witnesses win.
    pub fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        for (name, (p, f, w)) in other.checks {
            let slot = self.checks.entry(name).or_default();
            slot.0 += p;
            slot.1 += f;
            if slot.2.is_none() {
                slot.2 = w;
            }
        }
        for (name, c) in other.infos {
            *self.infos.entry(name).or_default() += c;
        }
        self
    }

    pub fn into_report(self, command: impl Into<String>) -> BierReport {
        let mut report = BierReport::new(command);
        report.info("instances", self.instances.to_string());
        for (name, c) in &self.infos {
            report.info(name.as_str(), c.to_string());
        }
        for (name, (p, f, w)) in self.checks {
            match w {
                Some(w) if f > 0 => report.check(name, false, format!("{f} of {} failed; first {w}", p + f)),
                _ => report.check(name, true, format!("{p} checked")),
            };
        }
        report
    }
}

fn describe(delta: &Delta) -> String {
    let facets: Vec<String> = delta.facets().iter().map(|&f| crate::sphere::format_set(f)).collect();
    format!("<{}> on n = {}", facets.join(" "), delta.n())
}

fn padded(v: &[i64], len: usize) -> Vec<i64> {
    let mut out = v.to_vec();
    out.resize(len, 0);
    out
}

/// Runs `suite` on one instance.
pub fn check_instance(suite: &str, delta: &Delta, tally: &mut Tally) -> Result<()> {
    tally.instances += 1;
    let n = delta.n();
    match suite {
        "g-theorem" => {
            let g = g_bier(delta);
            let h = h_via_restriction(delta);
            let v = sphere_vectors(delta)?;
            tally.record(delta, "g from theorem = g from restriction h", g == g_from_h(&h), || {
                format!("{} vs {}", tuple(&g), tuple(&g_from_h(&h)))
            });
            tally.record(delta, "g from theorem = g of constructed sphere", g == v.g, || {
                format!("{} vs {}", tuple(&g), tuple(&v.g))
            });
            tally.record(delta, "restriction h = h of constructed sphere", h == v.h, || {
                format!("{} vs {}", tuple(&h), tuple(&v.h))
            });
            let rev = h_via_reversed_restriction(delta);
            tally.record(delta, "reversed restriction h = h", rev == h, || format!("{} vs {}", tuple(&rev), tuple(&h)));
        }
        "dehn-sommerville" => {
            let h = sphere_vectors(delta)?.h;
            let bad = (0..h.len()).find(|&i| h[i] != h[h.len() - 1 - i]);
            tally.record(delta, "h palindromic", bad.is_none(), || format!("h = {} at i = {}", tuple(&h), bad.unwrap()));
        }
        "shelling" => shelling_checks(delta, tally)?,
        "delta-prime" => {
            let p = delta_prime(delta);
            let sub = p.faces().iter().all(|&f| delta.contains(f));
            tally.record(delta, "subcomplex", sub, || describe(&p));
            let closed = p.faces().iter().all(|&f| crate::complex::bits(f).all(|v| p.contains(f & !(1 << v))));
            tally.record(delta, "downward closed", closed, || describe(&p));
            let f = delta.f_vector();
            let fp = p.f_vector();
            let want: Vec<i64> = (0..=n).map(|i| if 2 * i <= n { f[i] - f[n - i] } else { 0 }).collect();
            tally.record(delta, "f-vector", fp == want, || format!("{} vs {}", tuple(&fp), tuple(&want)));
        }
        "kseq" => {
            let g = g_bier(delta);
            tally.record(delta, "g is a K-sequence", kk_is_ksequence(&g), || tuple(&g));
            let back = g_bier(&realize_ksequence(&g, n)?);
            tally.record(delta, "realization round-trips", back == g, || format!("{} -> {}", tuple(&g), tuple(&back)));
        }
        "lbc" => {
            for k in 2..=n.saturating_sub(1) / 2 {
                let s = lbc_status(delta, k)?;
                tally.record(delta, "g_k = 0 iff a level of Δ is empty or full", s.g_k_zero == s.level_extreme, || {
                    format!("k = {k}, g_k = {}, level_extreme = {}", s.g_k, s.level_extreme)
                });
                if let Some(cert) = &s.certificate {
                    tally.count("certificates");
                    tally.record(delta, "certificate valid", cert.valid(k), || {
                        format!("k = {k}, max index {:?}, reaches target {}", cert.max_index(), cert.reaches_target)
                    });
                }
            }
        }
        "flip" => {
            for g in delta.addable_faces() {
                let flip = add_face_flip(delta, g)?;
                let set = crate::sphere::format_set(g);
                tally.record(delta, "flip output matches", flip.matches_canonical, || format!("G = {set}"));
                let len = flip.g_after.len().max(flip.g_expected.len());
                let ok = padded(&flip.g_expected, len) == padded(&flip.g_after, len);
                tally.record(delta, "g change", ok, || {
                    format!("G = {set}: expected {}, got {}", tuple(&flip.g_expected), tuple(&flip.g_after))
                });
            }
        }
        "deleted-join" => {
            let k = delta.to_complex();
            let join = deleted_join(&k, &alexander_dual(&k)?)?;
            let same = canonicalize(&join)? == canonicalize(bier_complex(delta).complex())?;
            tally.record(delta, "bier sphere = deleted join with the dual", same, || "canonical forms differ".into());
        }
        "sphere" => {
            let sphere = bier_complex(delta);
            let report = sphere_checks(sphere.complex(), n as isize - 2);
            for e in report.entries.iter().filter(|e| e.name != "shellable") {
                tally.record(delta, &e.name, e.status != Status::Fail, || e.detail.clone());
            }
        }
        "symmetry" => {
            let k = (n.saturating_sub(1) / 2 >= 2).then_some((n - 1) / 2);
            let s = symmetry_checks(delta, k)?;
            tally.record(delta, "complement condition iff centrally symmetric", s.complement_condition == s.centrally_symmetric, || {
                format!("witness {:?}", s.complement_witness)
            });
            if s.centrally_symmetric {
                tally.count("centrally symmetric");
            }
            if s.k_nearly_neighborly == Some(true) {
                tally.count("nearly neighborly");
                tally.record(delta, "nearly neighborly implies antipode-free faces", s.antipode_free_faces == Some(true), || {
                    format!("k = {k:?}")
                });
                if n % 2 == 1 {
                    let only = delta == &Delta::skeleton(n, (n - 1) / 2)?;
                    tally.record(delta, "odd n: only the half skeleton", only, || "other nearly neighborly instance".into());
                }
            }
        }
        other => return Err(Error::BadParameter(format!("unknown suite {other:?}; one of {}", SUITES.join(", ")))),
    }
    Ok(())
}

fn shelling_checks(delta: &Delta, tally: &mut Tally) -> Result<()> {
    let n = delta.n();
    let full = full_mask(n);
    let sphere = bier_complex(delta);
    let order = shelling_order(delta);
    let restrictions: Vec<Interval> = order.iter().map(restriction).collect();

    // every interval (B, C) of the Bier poset, bottom included
    let mut partition_ok = true;
    let mut witness = String::new();
    for &b in delta.faces() {
        for c in crate::complex::submasks(full & !b).map(|extra| b | extra) {
            if delta.contains(c) {
                continue;
            }
            let iv = Interval { b, c };
            let holders: Vec<&FacetAX> =
                order.iter().zip(&restrictions).filter(|(f, r)| r.leq(&iv) && iv.leq(&f.interval())).map(|(f, _)| f).collect();
            let by_min = locate(delta, b, c)?;
            let by_max = locate_by_max(delta, b, c)?;
            if holders.len() != 1 || *holders[0] != by_min || by_min != by_max {
                partition_ok = false;
                if witness.is_empty() {
                    witness = format!(
                        "({}, {}) in {} facets, located at {by_min} / {by_max}",
                        crate::sphere::format_set(b),
                        crate::sphere::format_set(c),
                        holders.len()
                    );
                }
            }
        }
    }
    tally.record(delta, "restriction intervals partition", partition_ok, || witness);

    let faces: Vec<Face> = order.iter().map(|f| sphere.facet_face(f)).collect();
    let check = is_shelling(sphere.complex(), &faces)?;
    tally.record(delta, "chi-lex order is a shelling", check.valid, || format!("fails at step {:?}", check.failed_step));
    if check.valid {
        let mut same = true;
        for (r, iv) in check.restrictions.iter().zip(&restrictions) {
            same &= *r == sphere.interval_face(iv)?;
        }
        tally.record(delta, "restriction faces = R(F)", same, || "restriction face differs".into());
    }
    let mut h = vec![0i64; n.max(1)];
    for r in &restrictions {
        h[r.rank(n)] += 1;
    }
    let want = sphere_vectors(delta)?.h;
    tally.record(delta, "restriction ranks give h", h == want, || format!("{} vs {}", tuple(&h), tuple(&want)));

    let chis: Vec<_> = order.iter().map(chi).collect();
    let mut bad = None;
    for (i, f) in order.iter().enumerate() {
        for (j, g) in order.iter().enumerate() {
            if prec(f, g) && chis[i] >= chis[j] && bad.is_none() {
                bad = Some(format!("{f} ≺ {g}"));
            }
        }
    }
    tally.record(delta, "precedence implies chi-lex", bad.is_none(), || bad.unwrap_or_default());
    Ok(())
}

/// Runs `suite` over the chosen instances on ground set `[1, n]`.
pub fn run_suite(suite: &str, n: usize, source: Source, workers: usize) -> Result<BierReport> {
    if !SUITES.contains(&suite) {
        return Err(Error::BadParameter(format!("unknown suite {suite:?}; one of {}", SUITES.join(", "))));
    }
    let tally = match source {
        Source::Exhaustive => {
            if n == 0 || n > MAX_EXHAUSTIVE {
                return Err(Error::TooLarge(format!("exhaustive suites run for 1 <= n <= {MAX_EXHAUSTIVE}")));
            }
            let shards = par_visit(
                n,
                workers,
                || (Tally::default(), None::<Error>),
                |(tally, err), family| {
                    if err.is_none() {
                        if let Err(e) = check_instance(suite, &family_to_delta(n, family), tally) {
                            *err = Some(e);
                        }
                    }
                },
            )?;
            let mut total = Tally::default();
            for (tally, err) in shards {
                if let Some(e) = err {
                    return Err(e);
                }
                total = total.merge(tally);
            }
            total
        }
        Source::Random { count, seed, density } => {
            let mut tally = Tally::default();
            for i in 0..count as u64 {
                check_instance(suite, &random_complex(n, seed.wrapping_add(i), density)?, &mut tally)?;
            }
            tally
        }
    };
    let label = match source {
        Source::Exhaustive => format!("enumerate -n {n} --suite {suite}"),
        Source::Random { count, seed, density } => {
            format!("enumerate -n {n} --suite {suite} --random {count} --seed {seed} --density {density}")
        }
    };
    Ok(tally.into_report(label))
}
