//! Command-line surface. Every command prints a single JSON document to
//! stdout (pretty-printed behind --pretty) and returns 0 on success or
//! PASS, 1 on a FAIL verdict, 2 on usage or domain errors. Every number
//! in the output is an exact integer or a "p/2" string; floats never
//! appear. Sweep timing goes to stderr so that the JSON document is
//! byte-identical across reruns with the same seed; --timings opts the
//! per-slot numbers into the document.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Number, Value};

use crate::charring::{
    exterior_p, invariant_dim, pieri, restrict_to_k, tensor, Decomposition,
};
use crate::cohomology::{coh_summary, CohProfile};
use crate::compat::{
    classify_case, compatible, cond_set, Cond,
};
use crate::error::{Error, Result};
use crate::ktypes::{distinguished, ij_spectrum, LemmaId, LemmaReport};
use crate::ltheory::critical_places;
use crate::sweep::{sweep_lemma, SweepLemma, SweepReport};
use crate::weights::{k_eta, pair_kappa, GlWeight, HalfInt, PureWeight};

#[derive(Parser)]
#[command(
    name = "rankin-lab",
    version,
    about = "Exact highest-weight combinatorics for GL(n) pairs"
)]
struct Cli {
    /// Pretty-print the JSON output
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct PairArgs {
    /// Pure weight "a,b,..;c,d,.." (left half; right half)
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    /// Pure weight, same grammar
    #[arg(long, allow_hyphen_values = true)]
    nu: String,
}

impl PairArgs {
    fn parse(&self) -> Result<(PureWeight, PureWeight)> {
        Ok((self.mu.parse()?, self.nu.parse()?))
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Critical strip data of a pair
    Critical(PairArgs),
    /// Compatibility verdict and both condition sets
    Compat(PairArgs),
    /// Case label, coefficient pair and degree at an integer point
    Vj {
        #[command(flatten)]
        pair: PairArgs,
        /// Integer evaluation point
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
    },
    /// Distinguished K-types and the series spectrum
    Ktypes {
        #[command(flatten)]
        pair: PairArgs,
        /// Integer point; defaults to the central point
        #[arg(long, allow_hyphen_values = true)]
        j: Option<i64>,
    },
    /// Decompositions of finite-dimensional modules
    #[command(subcommand)]
    Decompose(DecomposeCmd),
    /// Cohomology profiles and the product total at the central point
    Coh(PairArgs),
    /// Check one multiplicity-one lemma
    Verify {
        /// Lemma id: 4.4, 4.6, 4.7, 4.8, 4.9, 4.10 or 4.11
        #[arg(long)]
        lemma: String,
        /// Rank
        #[arg(long)]
        n: usize,
        /// Pure weight (for the pair-based lemmas)
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// Pure weight (for the pair-based lemmas)
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        /// Integer point; defaults to the central point
        #[arg(long, allow_hyphen_values = true)]
        j: Option<i64>,
    },
    /// Sweep a lemma over ranks and random instances
    Sweep {
        /// Lemma id: 3.4 or one of the multiplicity-one lemmas
        #[arg(long)]
        lemma: String,
        /// Lowest rank (inclusive)
        #[arg(long)]
        n_lo: usize,
        /// Highest rank (inclusive)
        #[arg(long)]
        n_hi: usize,
        /// Random instances per rank
        #[arg(long, default_value_t = 100)]
        samples: u64,
        /// Seed; required for randomized sweeps
        #[arg(long)]
        seed: Option<u64>,
        /// Entry bound for generated weights
        #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
        bound: i64,
        /// Include per-slot wall-clock in the JSON document
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Subcommand)]
enum DecomposeCmd {
    /// Tensor product of two irreducibles
    Tensor {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Tensor with the a-th symmetric power of the standard module
    Pieri {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
    },
    /// Exterior power of the traceless module
    Exterior {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Restriction of an outer-product pair to the diagonal compact form
    Restrict {
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Dimension of the invariant subspace of an iterated tensor product
    Invariant {
        /// Weight, repeatable
        #[arg(long = "weight", allow_hyphen_values = true)]
        weights: Vec<String>,
    },
}

/// Parse argv, execute, serialize. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e)
            if e.kind() == ErrorKind::DisplayHelp
                || e.kind() == ErrorKind::DisplayVersion =>
        {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let _ = writeln!(err, "{}", first_line(&e.to_string()));
            return 2;
        }
    };
    match execute(&cli.cmd, err) {
        Ok((doc, failed)) => {
            let rendered = if cli.pretty {
                serde_json::to_string_pretty(&doc).expect("valid document")
            } else {
                serde_json::to_string(&doc).expect("valid document")
            };
            let _ = writeln!(out, "{rendered}");
            i32::from(failed)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or("invalid usage")
}

fn execute(cmd: &Cmd, err: &mut dyn Write) -> Result<(Value, bool)> {
    match cmd {
        Cmd::Critical(pair) => {
            let (mu, nu) = pair.parse()?;
            let data = critical_places(&mu, &nu)?;
            Ok((
                json!({
                    "kappa": halfint_json(data.kappa),
                    "c": halfint_json(data.c),
                    "lo": halfint_json(data.lo),
                    "hi": halfint_json(data.hi),
                    "places": data.places,
                }),
                false,
            ))
        }
        Cmd::Compat(pair) => {
            let (mu, nu) = pair.parse()?;
            Ok((
                json!({
                    "n": mu.n(),
                    "kappa": halfint_json(pair_kappa(&mu, &nu)),
                    "k_eta": k_eta(&mu, &nu)?,
                    "cond_b": cond_set(&mu, &nu, Cond::B)?,
                    "cond_c": cond_set(&mu, &nu, Cond::C)?,
                    "verdict": compatible(&mu, &nu)?.to_string(),
                }),
                false,
            ))
        }
        Cmd::Vj { pair, j } => {
            let (mu, nu) = pair.parse()?;
            let ke = k_eta(&mu, &nu)?;
            let kappa = pair_kappa(&mu, &nu);
            let case = classify_case(mu.n(), ke, kappa, *j);
            let mut doc = Map::new();
            doc.insert("n".into(), json!(mu.n()));
            doc.insert("k_eta".into(), json!(ke));
            doc.insert("kappa".into(), halfint_json(kappa));
            doc.insert("j".into(), json!(j));
            doc.insert("label".into(), json!(case.label.to_string()));
            if let Some((l, r)) = case.vj {
                doc.insert("vj".into(), json!([l.entries(), r.entries()]));
            }
            if let Some(l) = case.l_j {
                doc.insert("l".into(), json!(l));
            }
            Ok((Value::Object(doc), false))
        }
        Cmd::Ktypes { pair, j } => {
            let (mu, nu) = pair.parse()?;
            let j = match j {
                Some(j) => *j,
                None => crate::compat::central_point(&mu, &nu)?,
            };
            let kt = distinguished(&mu, &nu, j)?;
            let spec = ij_spectrum(&mu, &nu)?;
            let label = classify_case(mu.n(), k_eta(&mu, &nu)?, pair_kappa(&mu, &nu), j).label;
            Ok((
                json!({
                    "j": j,
                    "label": label.to_string(),
                    "spectrum": {"t": spec.t, "m_min": spec.m_min},
                    "tau_mu": kt.tau_mu.entries(),
                    "tau_mu_plus": kt.tau_mu_plus.entries(),
                    "tau_nu": kt.tau_nu.entries(),
                    "tau_nu_plus": kt.tau_nu_plus.entries(),
                    "tau_n": kt.tau_n.entries(),
                    "sigma_j": kt.sigma_j.entries(),
                    "sigma_j_plus": kt.sigma_j_plus.entries(),
                    "sigma_n": kt.sigma_n.entries(),
                }),
                false,
            ))
        }
        Cmd::Decompose(dec) => {
            let doc = match dec {
                DecomposeCmd::Tensor { a, b } => {
                    let a: GlWeight = a.parse()?;
                    let b: GlWeight = b.parse()?;
                    decomposition_json(&tensor(&a, &b)?)
                }
                DecomposeCmd::Pieri { lambda, a } => {
                    let lambda: GlWeight = lambda.parse()?;
                    decomposition_json(&pieri(&lambda, *a)?)
                }
                DecomposeCmd::Exterior { n, k } => {
                    if *n == 0 {
                        return Err(Error::OutOfRange("rank must be positive".into()));
                    }
                    decomposition_json(&exterior_p(*n, *k)?)
                }
                DecomposeCmd::Restrict { left, right } => {
                    let left: GlWeight = left.parse()?;
                    let right: GlWeight = right.parse()?;
                    decomposition_json(&restrict_to_k(&left, &right)?)
                }
                DecomposeCmd::Invariant { weights } => {
                    let ws: Vec<GlWeight> = weights
                        .iter()
                        .map(|s| s.parse())
                        .collect::<Result<_>>()?;
                    if ws.is_empty() {
                        return Err(Error::Parse(
                            "at least one --weight is required".into(),
                        ));
                    }
                    json!({
                        "weights": ws.iter().map(|w| w.entries()).collect::<Vec<_>>(),
                        "dim": invariant_dim(&ws)?,
                    })
                }
            };
            Ok((doc, false))
        }
        Cmd::Coh(pair) => {
            let (mu, nu) = pair.parse()?;
            let s = coh_summary(&mu, &nu)?;
            Ok((
                json!({
                    "b_n": s.b_n,
                    "c_n": s.c_n,
                    "j0": s.j0,
                    "pi_mu": profile_json(&s.pi_mu),
                    "pi_nu": profile_json(&s.pi_nu),
                    "ij": {
                        "reduced": profile_json(&s.ij.reduced),
                        "full": profile_json(&s.ij.full),
                        "l_j": s.ij.l_j,
                        "window_ok": s.ij.window_ok,
                        "pattern_ok": s.ij.pattern_ok,
                    },
                    "top_trivial": s.top_trivial,
                    "total": s.total,
                }),
                false,
            ))
        }
        Cmd::Verify { lemma, n, mu, nu, j } => {
            let id: LemmaId = lemma.parse()?;
            let pair = match (mu, nu) {
                (Some(m), Some(v)) => Some((m.parse()?, v.parse()?)),
                (None, None) => None,
                _ => {
                    return Err(Error::Parse(
                        "--mu and --nu must be given together".into(),
                    ))
                }
            };
            let report = crate::ktypes::verify_lemma(
                id,
                *n,
                pair.as_ref().map(|(m, v)| (m, v)),
                *j,
            )?;
            let failed = !report.pass;
            Ok((lemma_report_json(&report), failed))
        }
        Cmd::Sweep {
            lemma,
            n_lo,
            n_hi,
            samples,
            seed,
            bound,
            timings,
        } => {
            let lemma: SweepLemma = lemma.parse()?;
            let seed = match seed {
                Some(s) => *s,
                None if lemma.randomized() => {
                    return Err(Error::Parse(
                        "--seed is required for randomized sweeps".into(),
                    ))
                }
                None => 0,
            };
            let report = sweep_lemma(lemma, *n_lo, *n_hi, *samples, seed, *bound)?;
            for slot in &report.slots {
                let _ = writeln!(
                    err,
                    "lemma {} n={}: {} ms",
                    report.lemma, slot.n, slot.elapsed_ms
                );
            }
            let failed = report
                .slots
                .iter()
                .any(|s| s.fail > 0);
            Ok((sweep_report_json(&report, *timings), failed))
        }
    }
}

/// Integral values render as JSON integers, half-odd ones as "p/2".
fn halfint_json(h: HalfInt) -> Value {
    match h.as_int() {
        Some(k) => json!(k),
        None => json!(h.to_string()),
    }
}

fn decomposition_json(dec: &Decomposition) -> Value {
    let terms: Vec<Value> = dec
        .iter()
        .map(|(w, m)| json!({"weight": w.entries(), "mult": m}))
        .collect();
    let total: Number = serde_json::from_str(&dec.total_dim().to_string())
        .expect("decimal digits parse as a JSON number");
    json!({"terms": terms, "total_dim": total})
}

fn profile_json(p: &CohProfile) -> Value {
    json!(p.dims)
}

fn lemma_report_json(report: &LemmaReport) -> Value {
    let mut doc = Map::new();
    doc.insert("lemma".into(), json!(report.lemma.to_string()));
    doc.insert("n".into(), json!(report.n));
    match report.mults.len() {
        0 => {}
        1 => {
            doc.insert("multiplicity".into(), json!(report.mults[0]));
        }
        _ => {
            doc.insert("multiplicities".into(), json!(report.mults));
        }
    }
    doc.insert("checked".into(), json!(report.checked));
    doc.insert(
        "verdict".into(),
        json!(if report.pass { "PASS" } else { "FAIL" }),
    );
    Value::Object(doc)
}

fn sweep_report_json(report: &SweepReport, timings: bool) -> Value {
    let slots: Vec<Value> = report
        .slots
        .iter()
        .map(|slot| {
            let instances: Vec<Value> = slot
                .instances
                .iter()
                .map(|i| json!({"key": i.key, "verdict": i.verdict.to_string()}))
                .collect();
            let mut doc = Map::new();
            doc.insert("n".into(), json!(slot.n));
            doc.insert("pass".into(), json!(slot.pass));
            doc.insert("fail".into(), json!(slot.fail));
            doc.insert("skipped".into(), json!(slot.skipped));
            doc.insert("instances".into(), json!(instances));
            if timings {
                doc.insert("elapsed_ms".into(), json!(slot.elapsed_ms as u64));
            }
            Value::Object(doc)
        })
        .collect();
    json!({
        "lemma": report.lemma.to_string(),
        "n_lo": report.n_lo,
        "n_hi": report.n_hi,
        "samples": report.samples,
        "seed": report.seed,
        "bound": report.bound,
        "results": slots,
        "verdict": report.verdict.to_string(),
    })
}
