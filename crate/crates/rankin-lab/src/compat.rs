//! Compatibility of pure weight pairs: the four-window case classifier
//! with its coefficient system V_j and degree l(j), the max/min statistics
//! driving the two-sided inequality conditions, the Hom-space dimension,
//! and the equivalence check between condition sets and critical places.
//!
//! Window thresholds mix integers with `k_eta / n` and `2 kappa`; every
//! comparison here is scaled by n and carried out in i64, so no division
//! ever happens.

use std::fmt;

use crate::charring::tensor_mult;
use crate::error::{Error, Result};
use crate::ltheory::critical_places;
use crate::weights::{k_eta, pair_kappa, GlWeight, HalfInt, PureWeight};

/// Which of the four non-vanishing windows an integer j falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseLabel {
    A,
    B,
    C,
    D,
    None,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseLabel::A => "a",
            CaseLabel::B => "b",
            CaseLabel::C => "c",
            CaseLabel::D => "d",
            CaseLabel::None => "none",
        };
        f.write_str(s)
    }
}

/// Classifier output: the label, and inside a window the coefficient pair
/// and cohomological degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseData {
    pub label: CaseLabel,
    pub vj: Option<(GlWeight, GlWeight)>,
    pub l_j: Option<usize>,
}

/// Max and min of `mu_i + nu_j` (left halves, 1-based) over `i + j = t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MmStats {
    pub t: usize,
    pub max: i64,
    pub min: i64,
}

/// The two flavours of double-inequality condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cond {
    B,
    C,
}

/// Compatibility verdict of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Compatibility {
    No,
    ViaB,
    ViaC,
}

impl fmt::Display for Compatibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Compatibility::No => "false",
            Compatibility::ViaB => "via_b",
            Compatibility::ViaC => "via_c",
        };
        f.write_str(s)
    }
}

/// Highest weight of `Sym^a (x) det^k`. For `a < 0` the convention is the
/// contragredient power, weight `(k, ..., k, a+k)`; either way the result
/// is dominant.
fn sym_det(n: usize, a: i64, k: i64) -> GlWeight {
    let mut entries = vec![k; n];
    if a >= 0 {
        entries[0] += a;
    } else {
        entries[n - 1] += a;
    }
    GlWeight::new(entries).expect("n >= 1")
}

/// Evaluate the four threshold systems at `(n, k_eta, kappa, j)`. The
/// windows are pairwise disjoint, so order of checking is immaterial;
/// outside all four the label is `None` (the cohomology vanishes there,
/// so absence is an answer rather than an error).
pub fn classify_case(n: usize, k_eta: i64, kappa: HalfInt, j: i64) -> CaseData {
    let ni = n as i64;
    // comparisons scaled by n: nj against integer thresholds
    let nj = ni * j;
    let nt = ni * kappa.twice();
    let case = if nj >= ni - k_eta && nj >= ni + k_eta - nt {
        CaseLabel::A
    } else if ni - nt + k_eta <= nj && nj <= -k_eta {
        CaseLabel::B
    } else if ni - k_eta <= nj && nj <= k_eta - nt {
        CaseLabel::C
    } else if nj <= -k_eta && nj <= k_eta - nt {
        CaseLabel::D
    } else {
        CaseLabel::None
    };
    let (vj, l_j) = match case {
        CaseLabel::A => (
            Some((
                sym_det(n, nj + k_eta - ni, 1 - j),
                sym_det(n, nj - ni - k_eta + nt, 1 - j),
            )),
            Some(2 * (n - 1)),
        ),
        CaseLabel::B => (
            Some((
                sym_det(n, nj + k_eta, -j),
                sym_det(n, nj - ni - k_eta + nt, 1 - j),
            )),
            Some(n - 1),
        ),
        CaseLabel::C => (
            Some((
                sym_det(n, nj + k_eta - ni, 1 - j),
                sym_det(n, nj + nt - k_eta, -j),
            )),
            Some(n - 1),
        ),
        CaseLabel::D => (
            Some((
                sym_det(n, nj + k_eta, -j),
                sym_det(n, nj + nt - k_eta, -j),
            )),
            Some(0),
        ),
        CaseLabel::None => (None, None),
    };
    CaseData { label: case, vj, l_j }
}

/// Exact max/min of the anti-diagonal sums at depth t, for
/// `t in {n, n+1, n+2}`. Pairs exist only for `t = n+1` when `n = 1`.
pub fn mm_stats(mu: &PureWeight, nu: &PureWeight, t: usize) -> Result<MmStats> {
    if mu.n() != nu.n() {
        return Err(Error::DimensionMismatch(mu.n(), nu.n()));
    }
    let n = mu.n();
    if !(t == n || t == n + 1 || t == n + 2) {
        return Err(Error::BadIndex { t, n });
    }
    let i_lo = 1.max(t.saturating_sub(n));
    let i_hi = n.min(t - 1);
    if i_lo > i_hi {
        return Err(Error::BadIndex { t, n });
    }
    let mut max = i64::MIN;
    let mut min = i64::MAX;
    for i in i_lo..=i_hi {
        let j = t - i;
        let v = mu.left().get(i - 1) + nu.left().get(j - 1);
        max = max.max(v);
        min = min.min(v);
    }
    Ok(MmStats { t, max, min })
}

/// The integer solution set of the flavour's two-sided inequalities, in
/// increasing order.
pub fn cond_set(mu: &PureWeight, nu: &PureWeight, which: Cond) -> Result<Vec<i64>> {
    let n = mu.n();
    let two_kappa = pair_kappa(mu, nu) + pair_kappa(mu, nu);
    let one = HalfInt::from_int(1);
    let (lo, hi) = match which {
        Cond::B => {
            let sn = mm_stats(mu, nu, n)?;
            let sn1 = mm_stats(mu, nu, n + 1)?;
            let lo = HalfInt::from_int(-sn.min).max(one - two_kappa + HalfInt::from_int(sn1.max));
            let hi = HalfInt::from_int(-sn1.max)
                .min(one - two_kappa + HalfInt::from_int(sn.min));
            (lo, hi)
        }
        Cond::C => {
            let sn1 = mm_stats(mu, nu, n + 1)?;
            let sn2 = mm_stats(mu, nu, n + 2)?;
            let lo = (one - HalfInt::from_int(sn1.min))
                .max(HalfInt::from_int(sn2.max) - two_kappa);
            let hi = (one - HalfInt::from_int(sn2.max))
                .min(HalfInt::from_int(sn1.min) - two_kappa);
            (lo, hi)
        }
    };
    if lo > hi {
        return Ok(Vec::new());
    }
    Ok((lo.ceil()..=hi.floor()).collect())
}

/// Closed-form emptiness test for a condition set; must agree with
/// enumerating [`cond_set`].
pub fn cond_nonempty(mu: &PureWeight, nu: &PureWeight, which: Cond) -> Result<bool> {
    let kappa = pair_kappa(mu, nu);
    let half = HalfInt::from_twice(1);
    match which {
        Cond::B => {
            let sn = mm_stats(mu, nu, mu.n())?;
            let sn1 = mm_stats(mu, nu, mu.n() + 1)?;
            Ok(HalfInt::from_int(sn1.max) <= kappa - half
                && kappa - half <= HalfInt::from_int(sn.min))
        }
        Cond::C => {
            let sn1 = mm_stats(mu, nu, mu.n() + 1)?;
            let sn2 = mm_stats(mu, nu, mu.n() + 2)?;
            Ok(HalfInt::from_int(sn2.max) <= kappa + half
                && kappa + half <= HalfInt::from_int(sn1.min))
        }
    }
}

/// Compatibility of a pair: which condition set, if any, is nonempty. At
/// most one flavour can be nonempty for a given pair.
pub fn compatible(mu: &PureWeight, nu: &PureWeight) -> Result<Compatibility> {
    if !cond_set(mu, nu, Cond::B)?.is_empty() {
        return Ok(Compatibility::ViaB);
    }
    if !cond_set(mu, nu, Cond::C)?.is_empty() {
        return Ok(Compatibility::ViaC);
    }
    Ok(Compatibility::No)
}

/// Result of checking that nonempty condition sets coincide with the
/// critical places.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma34Report {
    pub cond_b: Vec<i64>,
    pub cond_c: Vec<i64>,
    pub places: Vec<i64>,
    pub pass: bool,
    pub vacuous: bool,
}

/// Check, on one pair, that every nonempty condition set equals the set
/// of critical places. Both sides are computed by unrelated routes.
pub fn verify_lemma_3_4(mu: &PureWeight, nu: &PureWeight) -> Result<Lemma34Report> {
    let cond_b = cond_set(mu, nu, Cond::B)?;
    let cond_c = cond_set(mu, nu, Cond::C)?;
    let places = critical_places(mu, nu)?.places;
    let vacuous = cond_b.is_empty() && cond_c.is_empty();
    let pass = (cond_b.is_empty() || cond_b == places)
        && (cond_c.is_empty() || cond_c == places);
    Ok(Lemma34Report {
        cond_b,
        cond_c,
        places,
        pass,
        vacuous,
    })
}

/// Dimension of the invariant pairing against the coefficient system at
/// j: one exactly when j lies in the matching condition set. Only the two
/// middle windows carry the statement; elsewhere the question is not
/// posed and the error says so.
pub fn hom_dim_fxi(mu: &PureWeight, nu: &PureWeight, j: i64) -> Result<u64> {
    if mu.n() != nu.n() {
        return Err(Error::DimensionMismatch(mu.n(), nu.n()));
    }
    let case = classify_case(mu.n(), k_eta(mu, nu)?, pair_kappa(mu, nu), j);
    let which = match case.label {
        CaseLabel::B => Cond::B,
        CaseLabel::C => Cond::C,
        other => {
            return Err(Error::UnsupportedCase(format!(
                "j={j} falls in case {other}; only cases b and c carry the Hom statement"
            )))
        }
    };
    Ok(u64::from(cond_set(mu, nu, which)?.contains(&j)))
}

/// The same dimension computed the long way round: restrict the question
/// to each tensor factor and multiply the two one-sided multiplicities.
pub fn hom_dim_via_tensor(mu: &PureWeight, nu: &PureWeight, j: i64) -> Result<u64> {
    if mu.n() != nu.n() {
        return Err(Error::DimensionMismatch(mu.n(), nu.n()));
    }
    let case = classify_case(mu.n(), k_eta(mu, nu)?, pair_kappa(mu, nu), j);
    let (vl, vr) = match (case.label, case.vj) {
        (CaseLabel::B | CaseLabel::C, Some(v)) => v,
        (other, _) => {
            return Err(Error::UnsupportedCase(format!(
                "j={j} falls in case {other}; only cases b and c carry the Hom statement"
            )))
        }
    };
    let left = tensor_mult(mu.left(), nu.left(), &vl)?;
    let right = tensor_mult(mu.right(), nu.right(), &vr)?;
    Ok(left * right)
}

/// The central integer `j0 = -kappa + 1/2`; defined only when kappa is a
/// half-odd integer.
pub fn central_point(mu: &PureWeight, nu: &PureWeight) -> Result<i64> {
    let kappa = pair_kappa(mu, nu);
    if !kappa.is_half_odd() {
        return Err(Error::NotHalfOdd(format!(
            "kappa = {kappa} is not half-odd, so there is no central integer"
        )));
    }
    Ok((1 - kappa.twice()) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PureWeight {
        s.parse().unwrap()
    }

    fn worked() -> (PureWeight, PureWeight) {
        (p("5,-5;6,-4"), p("5,-5;5,-5"))
    }

    fn half() -> HalfInt {
        HalfInt::from_twice(1)
    }

    #[test]
    fn antidiagonal_stats_of_the_worked_pair() {
        let (mu, nu) = worked();
        let s2 = mm_stats(&mu, &nu, 2).unwrap();
        assert_eq!((s2.max, s2.min), (10, 10));
        let s3 = mm_stats(&mu, &nu, 3).unwrap();
        assert_eq!((s3.max, s3.min), (0, 0));
        let s4 = mm_stats(&mu, &nu, 4).unwrap();
        assert_eq!((s4.max, s4.min), (-10, -10));
        assert!(matches!(
            mm_stats(&mu, &nu, 5),
            Err(Error::BadIndex { t: 5, n: 2 })
        ));
    }

    #[test]
    fn classifier_matches_the_three_worked_windows() {
        let b = classify_case(2, 0, half(), 0);
        assert_eq!(b.label, CaseLabel::B);
        assert_eq!(
            b.vj,
            Some(("0,0".parse().unwrap(), "1,1".parse().unwrap()))
        );
        assert_eq!(b.l_j, Some(1));

        let a = classify_case(2, 0, half(), 5);
        assert_eq!(a.label, CaseLabel::A);
        assert_eq!(
            a.vj,
            Some(("4,-4".parse().unwrap(), "6,-4".parse().unwrap()))
        );
        assert_eq!(a.l_j, Some(2));

        let d = classify_case(2, 0, half(), -1);
        assert_eq!(d.label, CaseLabel::D);
        assert_eq!(
            d.vj,
            Some(("1,-1".parse().unwrap(), "1,1".parse().unwrap()))
        );
        assert_eq!(d.l_j, Some(0));
    }

    #[test]
    fn windows_are_mutually_exclusive_and_dominant_on_a_grid() {
        for n in 2usize..=4 {
            for k_eta in -12..=12 {
                for twice_kappa in -12..=12 {
                    let kappa = HalfInt::from_twice(twice_kappa);
                    for j in -12..=12 {
                        let got = classify_case(n, k_eta, kappa, j);
                        let ni = n as i64;
                        let nj = ni * j;
                        let nt = ni * twice_kappa;
                        let in_a = nj >= ni - k_eta && nj >= ni + k_eta - nt;
                        let in_b = ni - nt + k_eta <= nj && nj <= -k_eta;
                        let in_c = ni - k_eta <= nj && nj <= k_eta - nt;
                        let in_d = nj <= -k_eta && nj <= k_eta - nt;
                        let hits = [in_a, in_b, in_c, in_d].iter().filter(|&&x| x).count();
                        assert!(hits <= 1, "overlap at n={n} k={k_eta} 2kappa={twice_kappa} j={j}");
                        assert_eq!(got.label == CaseLabel::None, hits == 0);
                        if let Some((l, r)) = got.vj {
                            assert!(l.is_dominant() && r.is_dominant());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn condition_sets_of_the_worked_pair() {
        let (mu, nu) = worked();
        assert_eq!(cond_set(&mu, &nu, Cond::B).unwrap(), vec![0]);
        assert_eq!(cond_set(&mu, &nu, Cond::C).unwrap(), Vec::<i64>::new());
    }

    #[test]
    fn enumeration_agrees_with_the_closed_form_emptiness_test() {
        let pairs = [
            ("5,-5;6,-4", "5,-5;5,-5"),
            ("1,0;1,0", "0,0;0,0"),
            ("0,0;0,0", "0,0;0,0"),
            ("3,1;2,0", "2,-1;4,1"),
            ("2,1,0;2,1,0", "1,0,-1;1,0,-1"),
            ("4,0,-1;3,2,-2", "2,1,0;1,0,-1"),
        ];
        for (a, b) in pairs {
            let mu = p(a);
            let nu = p(b);
            for which in [Cond::B, Cond::C] {
                assert_eq!(
                    !cond_set(&mu, &nu, which).unwrap().is_empty(),
                    cond_nonempty(&mu, &nu, which).unwrap(),
                    "pair {a} / {b} cond {which:?}"
                );
            }
        }
    }

    #[test]
    fn compatibility_verdicts() {
        let (mu, nu) = worked();
        assert_eq!(compatible(&mu, &nu).unwrap(), Compatibility::ViaB);
        assert_eq!(
            compatible(&p("1,0;1,0"), &p("0,0;0,0")).unwrap(),
            Compatibility::No
        );
        let z = p("0,0;0,0");
        assert_eq!(compatible(&z, &z).unwrap(), Compatibility::No);
    }

    #[test]
    fn condition_sets_match_critical_places() {
        let (mu, nu) = worked();
        let report = verify_lemma_3_4(&mu, &nu).unwrap();
        assert!(report.pass && !report.vacuous);
        assert_eq!(report.cond_b, report.places);

        let z = p("0,0;0,0");
        let report = verify_lemma_3_4(&z, &z).unwrap();
        assert!(report.pass && report.vacuous);
    }

    #[test]
    fn members_of_a_condition_set_classify_into_its_case() {
        let (mu, nu) = worked();
        let ke = k_eta(&mu, &nu).unwrap();
        let kappa = pair_kappa(&mu, &nu);
        for j in cond_set(&mu, &nu, Cond::B).unwrap() {
            assert_eq!(classify_case(mu.n(), ke, kappa, j).label, CaseLabel::B);
        }
    }

    #[test]
    fn hom_dimension_at_the_worked_place() {
        let (mu, nu) = worked();
        assert_eq!(hom_dim_fxi(&mu, &nu, 0).unwrap(), 1);
        assert_eq!(hom_dim_via_tensor(&mu, &nu, 0).unwrap(), 1);
        assert!(matches!(
            hom_dim_fxi(&mu, &nu, 1),
            Err(Error::UnsupportedCase(_))
        ));
        assert!(matches!(
            hom_dim_fxi(&p("1,0;1,0"), &p("0,0;0,0"), 0),
            Err(Error::UnsupportedCase(_))
        ));
    }

    #[test]
    fn central_point_values() {
        let (mu, nu) = worked();
        assert_eq!(central_point(&mu, &nu).unwrap(), 0);
        // weights 3 and 0 give kappa = 3/2
        assert_eq!(
            central_point(&p("2,0;3,1"), &p("0,0;0,0")).unwrap(),
            -1
        );
        let z = p("0,0;0,0");
        assert!(matches!(central_point(&z, &z), Err(Error::NotHalfOdd(_))));
    }
}
