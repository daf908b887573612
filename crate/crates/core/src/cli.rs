//! The `bier` command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage or
//! input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::bier_poset::{bier_poset, bier_poset_checks, verify_subdivision_theorem};
use crate::complex::io::{parse_complex, write_complex};
use crate::complex::{
    alexander_dual, canonicalize, deleted_join, g_from_h, is_shelling, kk_is_ksequence, sphere_checks, FhgVectors,
};
use crate::enumerate::{count_bier_isoclasses, count_ideals, IsoMode};
use crate::error::{Error, Result};
use crate::poset::{parse_ideal, parse_poset, Poset};
use crate::report::{tuple, BierReport, ReportDocument};
use crate::sphere::{
    add_face_flip, bier_complex, delta_prime, format_set, g_bier, h_via_restriction, lbc_status, realize_ksequence,
    restriction, shelling_order, sphere_vectors, symmetry_checks, Delta, MAX_GROUND,
};
use crate::suites::{run_suite, Source};

/// Face posets larger than this skip the Eulerian check in `verify`.
const EULERIAN_FACE_LIMIT: usize = 5000;

#[derive(Parser, Debug)]
#[command(name = "bier", version, about = "Construct and check Bier spheres")]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// f-, h- and g-vector of a complex read as an (n-2)-sphere.
    Fvec {
        file: PathBuf,
        /// Defaults to dimension + 2.
        #[arg(short)]
        n: Option<usize>,
    },
    /// The Bier sphere of Δ as a complex file.
    Bier {
        file: PathBuf,
        #[arg(short)]
        n: usize,
    },
    /// Bier(P, I) as a poset file.
    BierPoset { poset: PathBuf, ideal: PathBuf },
    /// Alexander dual of Δ.
    Dual {
        file: PathBuf,
        #[arg(short)]
        n: usize,
    },
    /// Deleted join of Δ with its Alexander dual.
    Djoin {
        file: PathBuf,
        #[arg(short)]
        n: usize,
    },
    /// The χ-lex shelling of the Bier sphere.
    Shell {
        file: PathBuf,
        #[arg(short)]
        n: usize,
    },
    /// g-vector of the Bier sphere.
    Gvec {
        file: PathBuf,
        #[arg(short)]
        n: usize,
    },
    /// The subcomplex Δ' with f-vector proof lines.
    DeltaPrime {
        file: PathBuf,
        #[arg(short)]
        n: usize,
    },
    /// A complex whose Bier sphere has the given g-vector.
    Realize {
        /// Comma-separated K-sequence, e.g. "1,4,3".
        sequence: String,
        /// Defaults to the smallest ground set that fits.
        #[arg(short)]
        n: Option<usize>,
    },
    /// Adds a face to Δ as a bistellar flip of its Bier sphere.
    Flip {
        file: PathBuf,
        #[arg(short)]
        n: usize,
        /// Space-separated elements of the new face.
        #[arg(long)]
        face: String,
    },
    /// Checks Bier(P, I) against iterated stellar subdivision.
    SubdivideVerify { poset: PathBuf, ideal: PathBuf },
    /// Sphere checks of the Bier sphere and Eulerianity of its face poset.
    Verify {
        file: PathBuf,
        #[arg(short)]
        n: usize,
    },
    /// Central symmetry and near neighborliness.
    Neighborly {
        file: PathBuf,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: Option<usize>,
    },
    /// Enumeration, isomorphism counts and verification suites.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        count_iso: bool,
        /// With --count-iso: complete lower skeleton plus one level only.
        #[arg(long, requires = "count_iso")]
        restricted: bool,
        #[arg(long, conflicts_with = "count_iso")]
        suite: Option<String>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Run the suite on this many seeded random complexes instead.
        #[arg(long, requires = "suite")]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
}

/// A report, optionally with a file payload.
struct Outcome {
    report: BierReport,
    payload: Option<Payload>,
}

enum Payload {
    Complex(String),
    Poset(serde_json::Value),
}

impl Outcome {
    fn report(report: BierReport) -> Outcome {
        Outcome { report, payload: None }
    }

    fn render(&self, json: bool) -> String {
        if json {
            #[derive(Serialize)]
            struct Document<'a> {
                report: ReportDocument<'a>,
                #[serde(skip_serializing_if = "Option::is_none")]
                complex: Option<&'a str>,
                #[serde(skip_serializing_if = "Option::is_none")]
                poset: Option<&'a serde_json::Value>,
            }
            let report = self.report.document();
            let (complex, poset) = match &self.payload {
                Some(Payload::Complex(text)) => (Some(text.as_str()), None),
                Some(Payload::Poset(value)) => (None, Some(value)),
                None => (None, None),
            };
            let mut out = serde_json::to_string_pretty(&Document { report, complex, poset }).expect("serializes");
            out.push('\n');
            return out;
        }
        let text = self.report.render_text();
        match &self.payload {
            None => text,
            // a poset file is JSON and cannot carry comment lines
            Some(Payload::Poset(value)) => format!("{}\n", serde_json::to_string_pretty(value).expect("serializes")),
            Some(Payload::Complex(body)) => {
                let mut out: String =
                    text.lines().map(|l| if l.starts_with('#') { format!("{l}\n") } else { format!("# {l}\n") }).collect();
                out.push_str(body);
                out
            }
        }
    }
}

/// Parses `argv` (program name first), runs the command and writes the report
/// to `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.render(cli.json).as_bytes());
            if outcome.report.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "bier: {e}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn check_n(n: usize) -> Result<usize> {
    if n == 0 || n > MAX_GROUND {
        return Err(Error::BadParameter(format!("n = {n} outside 1..={MAX_GROUND}")));
    }
    Ok(n)
}

fn load_delta(path: &Path, n: usize) -> Result<Delta> {
    let n = check_n(n)?;
    Delta::from_complex(&parse_complex(&read(path)?)?, n)
}

fn load_poset(poset: &Path, ideal: &Path) -> Result<(Poset, crate::poset::Ideal)> {
    let p = parse_poset(&read(poset)?)?;
    let i = parse_ideal(&p, &read(ideal)?)?;
    Ok((p, i))
}

fn parse_face(text: &str, n: usize) -> Result<u64> {
    let mut face = 0u64;
    for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        match tok.parse::<usize>() {
            Ok(v) if v >= 1 && v <= n => face |= 1 << (v - 1),
            _ => return Err(Error::Parse(format!("{tok:?} is not an element of [1,{n}]"))),
        }
    }
    Ok(face)
}

fn header(command: &str, file: &Path, n: usize) -> String {
    format!("{command} {} -n {n}", file.display())
}

fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Fvec { file, n } => {
            let k = parse_complex(&read(file)?)?;
            let dim = k.dim().ok_or(Error::VoidComplex)?;
            let n = match n {
                Some(n) => check_n(*n)?,
                None => check_n((dim + 2).max(1) as usize)?,
            };
            let v = FhgVectors::of(&k, n)?;
            let mut r = BierReport::new(format!("fvec {} -n {n}", file.display()));
            r.info("dimension", dim.to_string()).info("pure", k.is_pure().to_string());
            r.info("f", tuple(&v.f)).info("h", tuple(&v.h)).info("g", tuple(&v.g));
            Ok(Outcome::report(r))
        }
        Command::Bier { file, n } => {
            let delta = load_delta(file, *n)?;
            let sphere = bier_complex(&delta);
            let v = sphere_vectors(&delta)?;
            let mut r = BierReport::new(header("bier", file, *n));
            r.info("facets", sphere.facets().len().to_string()).info("f", tuple(&v.f));
            Ok(Outcome { report: r, payload: Some(Payload::Complex(sphere.to_file())) })
        }
        Command::BierPoset { poset, ideal } => {
            let (p, i) = load_poset(poset, ideal)?;
            let bier = bier_poset(&p, &i)?;
            let mut r = BierReport::new(format!("bier-poset {} {}", poset.display(), ideal.display()));
            r.info("elements", bier.poset().len().to_string()).info("length", bier.poset().length().to_string());
            let value = serde_json::to_value(bier.poset().to_file()).expect("poset file serializes");
            Ok(Outcome { report: r, payload: Some(Payload::Poset(value)) })
        }
        Command::Dual { file, n } => {
            let delta = load_delta(file, *n)?;
            let dual = delta.dual()?;
            let mut r = BierReport::new(header("dual", file, *n));
            r.info("f(Δ)", tuple(&delta.f_vector())).info("f(Δ*)", tuple(&dual.f_vector()));
            let twice = dual.dual()?;
            r.check("dual of the dual is Δ", twice == delta, "");
            Ok(Outcome { report: r, payload: Some(Payload::Complex(write_complex(&dual.to_complex()))) })
        }
        Command::Djoin { file, n } => {
            let delta = load_delta(file, *n)?;
            let k = delta.to_complex();
            let join = deleted_join(&k, &alexander_dual(&k)?)?;
            let same = canonicalize(&join)? == canonicalize(bier_complex(&delta).complex())?;
            let mut r = BierReport::new(header("djoin", file, *n));
            r.info("facets", join.facets().len().to_string());
            r.check("isomorphic to the bier sphere", same, if same { "" } else { "canonical forms differ" });
            Ok(Outcome { report: r, payload: Some(Payload::Complex(write_complex(&join))) })
        }
        Command::Shell { file, n } => {
            let delta = load_delta(file, *n)?;
            Ok(Outcome::report(shell_report(&delta, header("shell", file, *n))?))
        }
        Command::Gvec { file, n } => {
            let delta = load_delta(file, *n)?;
            let g = g_bier(&delta);
            let h = h_via_restriction(&delta);
            let v = sphere_vectors(&delta)?;
            let mut r = BierReport::new(header("gvec", file, *n));
            r.info("f(Δ)", tuple(&delta.f_vector()));
            r.info("g", tuple(&g)).info("f(Bier)", tuple(&v.f)).info("h(Bier)", tuple(&v.h));
            r.check("g via h-symmetry", g_from_h(&h) == g && v.g == g, format!("{} from h", tuple(&v.g)));
            let palindrome = (0..v.h.len()).all(|i| v.h[i] == v.h[v.h.len() - 1 - i]);
            r.check("dehn-sommerville", palindrome, tuple(&v.h));
            r.check("k-sequence", kk_is_ksequence(&g), if kk_is_ksequence(&g) { "yes" } else { "no" });
            Ok(Outcome::report(r))
        }
        Command::DeltaPrime { file, n } => {
            let delta = load_delta(file, *n)?;
            let p = delta_prime(&delta);
            let f = delta.f_vector();
            let fp = p.f_vector();
            let mut r = BierReport::new(header("delta-prime", file, *n));
            r.check("subcomplex of Δ", p.faces().iter().all(|&x| delta.contains(x)), "");
            for i in 0..=*n {
                if 2 * i <= *n {
                    let want = f[i] - f[n - i];
                    r.check(
                        format!("f_{i}"),
                        fp[i] == want,
                        format!("{} = f_{i}(Δ) - f_{}(Δ) = {} - {}", fp[i], n - i, f[i], f[n - i]),
                    );
                } else {
                    r.check(format!("f_{i}"), fp[i] == 0, format!("{} (above the middle)", fp[i]));
                }
            }
            Ok(Outcome { report: r, payload: Some(Payload::Complex(write_complex(&p.to_complex()))) })
        }
        Command::Realize { sequence, n } => {
            let seq: Vec<i64> = sequence
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<_>>()?;
            let n = match n {
                Some(n) => check_n(*n)?,
                None => {
                    let width = seq.get(1).copied().unwrap_or(1).max(1) as usize;
                    check_n(width.max(2 * seq.len().saturating_sub(1) + 1))?
                }
            };
            let delta = realize_ksequence(&seq, n)?;
            let g = g_bier(&delta);
            let mut r = BierReport::new(format!("realize {sequence} -n {n}"));
            r.info("f(Δ)", tuple(&delta.f_vector()));
            let mut padded = seq.clone();
            padded.resize(g.len().max(seq.len()), 0);
            r.check("g of the bier sphere", padded == g, tuple(&g));
            Ok(Outcome { report: r, payload: Some(Payload::Complex(write_complex(&delta.to_complex()))) })
        }
        Command::Flip { file, n, face } => {
            let delta = load_delta(file, *n)?;
            let g = parse_face(face, *n)?;
            let flip = add_face_flip(&delta, g)?;
            let mut r = BierReport::new(format!("flip {} -n {n} --face {face:?}", file.display()));
            r.info("face", format_set(g));
            let names = |vs: &[crate::complex::Vertex]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
            r.info("removed simplex A", names(&flip.removed)).info("inserted simplex B", names(&flip.inserted));
            r.info("flip index", flip.index.to_string());
            r.check("result is the bier sphere of Δ ∪ {G}", flip.matches_labeled, "vertex for vertex");
            r.check("canonical forms agree", flip.matches_canonical, "");
            let len = flip.g_after.len().max(flip.g_expected.len());
            let pad = |v: &[i64]| {
                let mut v = v.to_vec();
                v.resize(len, 0);
                v
            };
            r.info("g before", tuple(&flip.g_before));
            r.check("g after", pad(&flip.g_after) == pad(&flip.g_expected), format!("{} (expected {})", tuple(&flip.g_after), tuple(&flip.g_expected)));
            Ok(Outcome::report(r))
        }
        Command::SubdivideVerify { poset, ideal } => {
            let (p, i) = load_poset(poset, ideal)?;
            let mut r = BierReport::new(format!("subdivide-verify {} {}", poset.display(), ideal.display()));
            r.absorb("", verify_subdivision_theorem(&p, &i)?);
            r.absorb("poset", bier_poset_checks(&p, &i)?);
            Ok(Outcome::report(r))
        }
        Command::Verify { file, n } => {
            let delta = load_delta(file, *n)?;
            let sphere = bier_complex(&delta);
            let mut r = BierReport::new(header("verify", file, *n));
            r.absorb("", sphere_checks(sphere.complex(), *n as isize - 2));
            let faces = sphere.complex().faces().len();
            if faces > EULERIAN_FACE_LIMIT {
                r.info("eulerian face poset", format!("skipped: {faces} faces"));
            } else {
                let eulerian = Poset::face_poset(sphere.complex())?.is_eulerian()?;
                r.check("eulerian face poset", eulerian, format!("{faces} faces"));
            }
            for k in 2..=n.saturating_sub(1) / 2 {
                let s = lbc_status(&delta, k)?;
                r.info(format!("g_{k}"), s.g_k.to_string());
            }
            Ok(Outcome::report(r))
        }
        Command::Neighborly { file, n, k } => {
            let delta = load_delta(file, *n)?;
            let s = symmetry_checks(&delta, *k)?;
            let mut r = BierReport::new(format!("neighborly {} -n {n}{}", file.display(), k.map(|k| format!(" -k {k}")).unwrap_or_default()));
            r.info("complement condition", s.complement_condition.to_string());
            if let Some(w) = s.complement_witness {
                r.info("complement witness", format_set(w));
            }
            r.info("centrally symmetric", s.centrally_symmetric.to_string());
            r.check("centrally symmetric iff complement condition", s.centrally_symmetric == s.complement_condition, "");
            if let (Some(k), Some(nn)) = (s.k, s.k_nearly_neighborly) {
                r.info(format!("{k}-nearly neighborly"), nn.to_string());
                r.info("antipode-free sets of size k", s.antipode_free_of_size_k.to_string());
                let faces = s.antipode_free_faces == Some(true);
                r.check("antipode-free sets are faces", !nn || faces, format!("{faces}"));
            }
            Ok(Outcome::report(r))
        }
        Command::Enumerate { n, count_iso, restricted, suite, workers, random, seed, density } => {
            let n = check_n(*n)?;
            if let Some(suite) = suite {
                let source = match random {
                    Some(count) => Source::Random { count: *count, seed: *seed, density: *density },
                    None => Source::Exhaustive,
                };
                return Ok(Outcome::report(run_suite(suite, n, source, *workers)?));
            }
            if *count_iso {
                let mode = if *restricted { IsoMode::Restricted } else { IsoMode::Exhaustive };
                let count = count_bier_isoclasses(n, mode, *workers)?;
                let mut r = BierReport::new(format!("enumerate -n {n} --count-iso{}", if *restricted { " --restricted" } else { "" }));
                r.info("isomorphism classes", count.to_string());
                return Ok(Outcome::report(r));
            }
            let mut r = BierReport::new(format!("enumerate -n {n}"));
            r.info("proper ideals", count_ideals(n, *workers)?.to_string());
            Ok(Outcome::report(r))
        }
    }
}

fn shell_report(delta: &Delta, command: String) -> Result<BierReport> {
    let n = delta.n();
    let sphere = bier_complex(delta);
    let order = shelling_order(delta);
    let mut r = BierReport::new(command);
    let mut h = vec![0i64; n.max(1)];
    for (step, f) in order.iter().enumerate() {
        let iv = restriction(f);
        h[iv.rank(n)] += 1;
        let face = sphere.interval_face(&iv)?;
        r.info(format!("step {}", step + 1), format!("{f}; restriction {}", sphere.complex().format_face(face)));
    }
    let faces: Vec<u64> = order.iter().map(|f| sphere.facet_face(f)).collect();
    let check = is_shelling(sphere.complex(), &faces)?;
    let detail = match check.failed_step {
        None => "yes".to_string(),
        Some(s) => format!("no, fails at step {}", s + 1),
    };
    r.check("valid", check.valid, detail);
    let want = sphere_vectors(delta)?.h;
    r.info("h", tuple(&h));
    r.check("h matches f-vector transform", h == want, tuple(&want));
    Ok(r)
}
