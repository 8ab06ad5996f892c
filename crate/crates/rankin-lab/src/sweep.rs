//! Randomized verification sweeps. Everything here is deterministic given
//! the seed: each (lemma, n) slot derives its own stream from the user
//! seed, so adding ranks or reordering lemmas never disturbs the samples
//! of another slot.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::compat::verify_lemma_3_4;
use crate::error::{Error, Result};
use crate::ktypes::{verify_lemma, LemmaId};
use crate::weights::{GlWeight, PureWeight};

/// A weakly decreasing weight with entries drawn uniformly from
/// `[-bound, bound]`.
pub fn random_dominant(rng: &mut impl Rng, n: usize, bound: i64) -> GlWeight {
    let mut entries: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
    entries.sort_unstable_by(|a, b| b.cmp(a));
    GlWeight::new(entries).expect("n >= 1")
}

/// A pure weight whose left half and derived right half both stay within
/// `[-bound, bound]`.
pub fn random_pure(rng: &mut impl Rng, n: usize, bound: i64) -> PureWeight {
    let left = random_dominant(rng, n, bound);
    // right_i = w - left_{n-1-i}, so w must stay within bound of every entry
    let w = rng.gen_range(left.max_entry() - bound..=left.min_entry() + bound);
    PureWeight::from_left_and_weight(left, w).expect("w chosen inside the feasible band")
}

/// A compatible pair with a half-odd kappa, built constructively: draw
/// the left halves, place `kappa - 1/2` (or `kappa + 1/2` for the c
/// route) inside the closed-form window, then split the total weight.
/// Rejection-samples until the window and the weight split are both
/// nonempty.
pub fn random_compatible_pair(
    rng: &mut impl Rng,
    n: usize,
    bound: i64,
) -> (PureWeight, PureWeight) {
    for _ in 0..100_000 {
        let mu_left = random_dominant(rng, n, bound);
        let nu_left = random_dominant(rng, n, bound);
        let stat = |t: usize, pick_max: bool| -> Option<i64> {
            let i_lo = 1usize.max(t.saturating_sub(n));
            let i_hi = n.min(t.saturating_sub(1));
            let vals = (i_lo..=i_hi)
                .map(|i| mu_left.get(i - 1) + nu_left.get(t - i - 1));
            if pick_max {
                vals.max()
            } else {
                vals.min()
            }
        };
        // b route: kappa - 1/2 in [max at depth n+1, min at depth n];
        // c route: kappa + 1/2 in [max at depth n+2, min at depth n+1]
        let twice_kappa = if let (Some(lo), Some(hi)) = (stat(n + 1, true), stat(n, false)) {
            if lo <= hi {
                2 * rng.gen_range(lo..=hi) + 1
            } else if let (Some(lo), Some(hi)) = (stat(n + 2, true), stat(n + 1, false)) {
                if lo <= hi {
                    2 * rng.gen_range(lo..=hi) - 1
                } else {
                    continue;
                }
            } else {
                continue;
            }
        } else {
            continue;
        };
        let w_lo = (mu_left.max_entry() - bound).max(twice_kappa - nu_left.min_entry() - bound);
        let w_hi = (mu_left.min_entry() + bound).min(twice_kappa - nu_left.max_entry() + bound);
        if w_lo > w_hi {
            continue;
        }
        let w = rng.gen_range(w_lo..=w_hi);
        let mu = PureWeight::from_left_and_weight(mu_left, w).expect("w inside the band");
        let nu =
            PureWeight::from_left_and_weight(nu_left, twice_kappa - w).expect("w' inside the band");
        return (mu, nu);
    }
    panic!("no compatible pair found in 100000 attempts (n={n}, bound={bound})");
}

/// What a sweep can target: the condition-set equivalence or one of the
/// multiplicity-one statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepLemma {
    Equivalence34,
    KType(LemmaId),
}

impl fmt::Display for SweepLemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepLemma::Equivalence34 => f.write_str("3.4"),
            SweepLemma::KType(id) => write!(f, "{id}"),
        }
    }
}

impl FromStr for SweepLemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "3.4" {
            return Ok(SweepLemma::Equivalence34);
        }
        Ok(SweepLemma::KType(s.parse()?))
    }
}

impl SweepLemma {
    /// Whether instances are drawn at random (and therefore need a seed).
    pub fn randomized(self) -> bool {
        matches!(
            self,
            SweepLemma::Equivalence34
                | SweepLemma::KType(LemmaId::L4_9)
                | SweepLemma::KType(LemmaId::L4_10)
                | SweepLemma::KType(LemmaId::L4_11)
        )
    }

    fn tag(self) -> u64 {
        match self {
            SweepLemma::Equivalence34 => 0,
            SweepLemma::KType(LemmaId::L4_4) => 1,
            SweepLemma::KType(LemmaId::L4_6) => 2,
            SweepLemma::KType(LemmaId::L4_7) => 3,
            SweepLemma::KType(LemmaId::L4_8) => 4,
            SweepLemma::KType(LemmaId::L4_9) => 5,
            SweepLemma::KType(LemmaId::L4_10) => 6,
            SweepLemma::KType(LemmaId::L4_11) => 7,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
        };
        f.write_str(s)
    }
}

/// One instance's outcome, keyed by a stable description of its inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceVerdict {
    pub key: String,
    pub verdict: Verdict,
}

/// Aggregated outcome of one (lemma, n) slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotOutcome {
    pub n: usize,
    pub pass: u64,
    pub fail: u64,
    pub skipped: u64,
    pub instances: Vec<InstanceVerdict>,
    pub elapsed_ms: u128,
}

/// Whole-sweep report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub lemma: SweepLemma,
    pub n_lo: usize,
    pub n_hi: usize,
    pub samples: u64,
    pub seed: u64,
    pub bound: i64,
    pub slots: Vec<SlotOutcome>,
    pub verdict: Verdict,
}

fn slot_seed(seed: u64, lemma: SweepLemma, n: usize) -> u64 {
    seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ lemma.tag().wrapping_mul(0xBF58_476D_1CE4_E5B9)
}

/// Run one lemma over a rank range. Random slots draw `samples` instances
/// each; closed-form slots check their single instance. Guard trips are
/// recorded as SKIPPED and never count as PASS.
pub fn sweep_lemma(
    lemma: SweepLemma,
    n_lo: usize,
    n_hi: usize,
    samples: u64,
    seed: u64,
    bound: i64,
) -> Result<SweepReport> {
    if n_lo < 2 || n_lo > n_hi {
        return Err(Error::OutOfRange(format!(
            "rank range {n_lo}..={n_hi} is empty or starts below 2"
        )));
    }
    let mut slots = Vec::new();
    for n in n_lo..=n_hi {
        let started = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(slot_seed(seed, lemma, n));
        let mut instances = Vec::new();
        match lemma {
            SweepLemma::Equivalence34 => {
                for _ in 0..samples {
                    let mu = random_pure(&mut rng, n, bound);
                    let nu = random_pure(&mut rng, n, bound);
                    let key = format!("{mu}|{nu}");
                    let verdict = if verify_lemma_3_4(&mu, &nu)?.pass {
                        Verdict::Pass
                    } else {
                        Verdict::Fail
                    };
                    instances.push(InstanceVerdict { key, verdict });
                }
            }
            SweepLemma::KType(id @ (LemmaId::L4_9 | LemmaId::L4_10 | LemmaId::L4_11)) => {
                for _ in 0..samples {
                    let (mu, nu) = random_compatible_pair(&mut rng, n, bound);
                    let key = format!("{mu}|{nu}");
                    let verdict = match verify_lemma(id, n, Some((&mu, &nu)), None) {
                        Ok(r) if r.pass => Verdict::Pass,
                        Ok(_) => Verdict::Fail,
                        Err(Error::InfeasibleScale(_)) => Verdict::Skipped,
                        Err(e) => return Err(e),
                    };
                    instances.push(InstanceVerdict { key, verdict });
                }
            }
            SweepLemma::KType(id) => {
                let key = format!("n={n}");
                let verdict = match verify_lemma(id, n, None, None) {
                    Ok(r) if r.pass => Verdict::Pass,
                    Ok(_) => Verdict::Fail,
                    Err(Error::InfeasibleScale(_)) => Verdict::Skipped,
                    Err(e) => return Err(e),
                };
                instances.push(InstanceVerdict { key, verdict });
            }
        }
        instances.sort_by(|a, b| a.key.cmp(&b.key));
        let count =
            |v: Verdict| instances.iter().filter(|i| i.verdict == v).count() as u64;
        slots.push(SlotOutcome {
            n,
            pass: count(Verdict::Pass),
            fail: count(Verdict::Fail),
            skipped: count(Verdict::Skipped),
            instances,
            elapsed_ms: started.elapsed().as_millis(),
        });
    }
    let verdict = if slots.iter().any(|s| s.fail > 0) {
        Verdict::Fail
    } else if slots.iter().all(|s| s.pass == 0) {
        Verdict::Skipped
    } else {
        Verdict::Pass
    };
    Ok(SweepReport {
        lemma,
        n_lo,
        n_hi,
        samples,
        seed,
        bound,
        slots,
        verdict,
    })
}
