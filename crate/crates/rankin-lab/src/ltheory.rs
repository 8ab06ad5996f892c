//! Pole bookkeeping for the archimedean factor attached to a pair of pure
//! weights. The factor is a product of n^2 gamma functions whose arguments
//! are shifted by exact half-integers; an integer s is critical when no
//! argument on either side of the functional equation hits a pole. Nothing
//! here evaluates gamma numerically; only pole positions are tracked.

use crate::error::{Error, Result};
use crate::weights::{pair_kappa, HalfInt, PureWeight};

/// One gamma-argument shift, tagged by its 1-based index pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaShift {
    pub i: usize,
    pub j: usize,
    pub shift: HalfInt,
}

/// The critical strip data of a pair: the interval `[lo, hi]` with
/// `lo = 1 - kappa - c` and `hi = -kappa + c`, and the integers inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalData {
    pub kappa: HalfInt,
    pub c: HalfInt,
    pub lo: HalfInt,
    pub hi: HalfInt,
    pub places: Vec<i64>,
}

/// All `n^2` shifts `|mu_i + nu_j - kappa + (n+1) - (i+j)|`, indices
/// 1-based, using the left halves of both weights.
pub fn gamma_shifts(mu: &PureWeight, nu: &PureWeight) -> Result<Vec<GammaShift>> {
    if mu.n() != nu.n() {
        return Err(Error::DimensionMismatch(mu.n(), nu.n()));
    }
    let n = mu.n();
    let kappa = pair_kappa(mu, nu);
    let mut out = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let base = HalfInt::from_int(
                mu.left().get(i - 1) + nu.left().get(j - 1) + (n as i64 + 1) - (i + j) as i64,
            );
            out.push(GammaShift {
                i,
                j,
                shift: (base - kappa).abs(),
            });
        }
    }
    Ok(out)
}

/// The minimal shift `c`, the joint pole-distance of the factor.
pub fn c_mu_nu(mu: &PureWeight, nu: &PureWeight) -> Result<HalfInt> {
    let shifts = gamma_shifts(mu, nu)?;
    Ok(shifts
        .iter()
        .map(|g| g.shift)
        .min()
        .expect("n >= 1 gives a nonempty shift list"))
}

/// Whether the integer `s` avoids every pole: `s + kappa + shift >= 1` and
/// `1 - s - kappa + shift >= 1` for every shift.
pub fn is_critical(mu: &PureWeight, nu: &PureWeight, s: i64) -> Result<bool> {
    let shifts = gamma_shifts(mu, nu)?;
    let kappa = pair_kappa(mu, nu);
    let one = HalfInt::from_int(1);
    let s = HalfInt::from_int(s);
    Ok(shifts.iter().all(|g| {
        s + kappa + g.shift >= one && one - s - kappa + g.shift >= one
    }))
}

/// The critical interval in closed form. `lo` and `hi` are always
/// integral: every shift differs from kappa by an integer, so `c` and
/// `kappa` have the same parity of twice their value.
pub fn critical_places(mu: &PureWeight, nu: &PureWeight) -> Result<CriticalData> {
    let kappa = pair_kappa(mu, nu);
    let c = c_mu_nu(mu, nu)?;
    let one = HalfInt::from_int(1);
    let lo = one - kappa - c;
    let hi = c - kappa;
    debug_assert!(lo.is_integral() && hi.is_integral());
    let places = if lo <= hi {
        (lo.ceil()..=hi.floor()).collect()
    } else {
        Vec::new()
    };
    Ok(CriticalData {
        kappa,
        c,
        lo,
        hi,
        places,
    })
}

/// Exhaustive integer scan of [`is_critical`] over a window guaranteed to
/// contain every critical place: shifts are bounded by the entry spread
/// plus n, so the window `[-B, B]` with `B = 2*max|entry| + 2n + 2` is
/// safely wider than the interval.
pub fn scan_critical(mu: &PureWeight, nu: &PureWeight) -> Result<Vec<i64>> {
    if mu.n() != nu.n() {
        return Err(Error::DimensionMismatch(mu.n(), nu.n()));
    }
    let spread = mu
        .left()
        .entries()
        .iter()
        .chain(mu.right().entries())
        .chain(nu.left().entries())
        .chain(nu.right().entries())
        .map(|e| e.abs())
        .max()
        .unwrap_or(0);
    let b = 2 * spread + 2 * mu.n() as i64 + 2;
    let mut out = Vec::new();
    for s in -b..=b {
        if is_critical(mu, nu, s)? {
            out.push(s);
        }
    }
    Ok(out)
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

    #[test]
    fn shifts_of_the_worked_pair() {
        let (mu, nu) = worked();
        let shifts: Vec<HalfInt> = gamma_shifts(&mu, &nu)
            .unwrap()
            .into_iter()
            .map(|g| g.shift)
            .collect();
        let expect: Vec<HalfInt> = [21, 1, 1, 23].iter().map(|&t| HalfInt::from_twice(t)).collect();
        assert_eq!(shifts, expect);
    }

    #[test]
    fn shifts_of_the_zero_pair_are_rho_gaps() {
        let z = p("0,0;0,0");
        let shifts: Vec<i64> = gamma_shifts(&z, &z)
            .unwrap()
            .into_iter()
            .map(|g| g.shift.twice())
            .collect();
        assert_eq!(shifts, vec![2, 0, 0, 2]);
    }

    #[test]
    fn minimal_shift_examples() {
        let (mu, nu) = worked();
        assert_eq!(c_mu_nu(&mu, &nu).unwrap(), HalfInt::from_twice(1));
        let z = p("0,0;0,0");
        assert_eq!(c_mu_nu(&z, &z).unwrap(), HalfInt::ZERO);
        assert_eq!(
            c_mu_nu(&p("1,0;1,0"), &z).unwrap(),
            HalfInt::from_twice(1)
        );
    }

    #[test]
    fn worked_pair_has_the_single_place_zero() {
        let (mu, nu) = worked();
        let data = critical_places(&mu, &nu).unwrap();
        assert_eq!(data.kappa, HalfInt::from_twice(1));
        assert_eq!(data.c, HalfInt::from_twice(1));
        assert_eq!(data.places, vec![0]);
        assert!(is_critical(&mu, &nu, 0).unwrap());
        assert!(!is_critical(&mu, &nu, 1).unwrap());
    }

    #[test]
    fn zero_pair_has_no_places() {
        let z = p("0,0;0,0");
        let data = critical_places(&z, &z).unwrap();
        assert_eq!(data.lo, HalfInt::from_int(1));
        assert_eq!(data.hi, HalfInt::ZERO);
        assert!(data.places.is_empty());
        assert_eq!(scan_critical(&z, &z).unwrap(), Vec::<i64>::new());
    }

    #[test]
    fn interval_formula_matches_the_scan() {
        for (a, b) in [
            ("5,-5;6,-4", "5,-5;5,-5"),
            ("1,0;1,0", "0,0;0,0"),
            ("3,1;2,0", "2,-1;4,1"),
            ("2,1,0;2,1,0", "1,0,-1;1,0,-1"),
        ] {
            let mu = p(a);
            let nu = p(b);
            assert_eq!(
                critical_places(&mu, &nu).unwrap().places,
                scan_critical(&mu, &nu).unwrap(),
                "pair {a} / {b}"
            );
        }
    }

    #[test]
    fn interval_is_centered_at_the_functional_equation_center() {
        let (mu, nu) = worked();
        let data = critical_places(&mu, &nu).unwrap();
        let two_kappa = data.kappa + data.kappa;
        assert_eq!(data.lo + data.hi, HalfInt::from_int(1) - two_kappa);
    }

    #[test]
    fn swapping_the_pair_changes_nothing() {
        let (mu, nu) = worked();
        assert_eq!(
            critical_places(&mu, &nu).unwrap(),
            critical_places(&nu, &mu).unwrap()
        );
    }

    #[test]
    fn rank_mismatch_is_rejected() {
        let a = p("1,0;1,0");
        let b = p("1,0,0;1,1,0");
        assert!(matches!(
            gamma_shifts(&a, &b),
            Err(Error::DimensionMismatch(2, 3))
        ));
    }
}
