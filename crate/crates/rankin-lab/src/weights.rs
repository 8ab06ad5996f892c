//! Exact weight arithmetic: half-integers, GL(n) weights, and pure
//! weights of the product group.
//!
//! All arithmetic in this crate is exact. Half-integers are stored as
//! their doubles, weights as integer vectors; floating point never
//! appears.

use std::borrow::Borrow;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An element of (1/2)Z, stored exactly as its double.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub fn from_int(k: i64) -> Self {
        HalfInt { twice: 2 * k }
    }

    /// The double of the value; always exact.
    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integral(self) -> bool {
        self.twice % 2 == 0
    }

    /// True when the value is half an odd integer.
    pub fn is_half_odd(self) -> bool {
        self.twice.rem_euclid(2) == 1
    }

    pub fn as_int(self) -> Option<i64> {
        if self.is_integral() {
            Some(self.twice / 2)
        } else {
            None
        }
    }

    pub fn abs(self) -> Self {
        HalfInt {
            twice: self.twice.abs(),
        }
    }

    /// Largest integer <= self.
    pub fn floor(self) -> i64 {
        self.twice.div_euclid(2)
    }

    /// Smallest integer >= self.
    pub fn ceil(self) -> i64 {
        -((-self.twice).div_euclid(2))
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice + rhs.twice,
        }
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice - rhs.twice,
        }
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    /// Integers print plainly, proper halves as `p/2` (e.g. `-11/2`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// An integer weight for GL(n), not necessarily dominant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlWeight {
    entries: Vec<i64>,
}

impl GlWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::OutOfRange("weight needs at least one entry".into()));
        }
        Ok(GlWeight { entries })
    }

    pub fn zero(n: usize) -> Self {
        GlWeight {
            entries: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> i64 {
        self.entries[i]
    }

    pub fn is_dominant(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn min_entry(&self) -> i64 {
        *self.entries.iter().min().unwrap()
    }

    pub fn max_entry(&self) -> i64 {
        *self.entries.iter().max().unwrap()
    }

    /// Contragredient highest weight: negate and reverse.
    pub fn dual(&self) -> GlWeight {
        let mut e: Vec<i64> = self.entries.iter().map(|&x| -x).collect();
        e.reverse();
        GlWeight { entries: e }
    }

    /// Entries in reverse order (the long Weyl element applied).
    pub fn reversed(&self) -> GlWeight {
        let mut e = self.entries.clone();
        e.reverse();
        GlWeight { entries: e }
    }

    /// The unique dominant weight in the orbit: entries sorted decreasing.
    pub fn dominant_rep(&self) -> GlWeight {
        let mut e = self.entries.clone();
        e.sort_unstable_by(|a, b| b.cmp(a));
        GlWeight { entries: e }
    }

    /// Adds `c` to every entry.
    pub fn shifted(&self, c: i64) -> GlWeight {
        GlWeight {
            entries: self.entries.iter().map(|&x| x + c).collect(),
        }
    }

    pub fn add(&self, other: &GlWeight) -> Result<GlWeight> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(self.n(), other.n()));
        }
        Ok(GlWeight {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn ensure_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.to_string()))
        }
    }
}

impl Borrow<[i64]> for GlWeight {
    fn borrow(&self) -> &[i64] {
        &self.entries
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for GlWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries: Result<Vec<i64>> = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad integer {tok:?} in weight {s:?}")))
            })
            .collect();
        GlWeight::new(entries?)
    }
}

/// A dominant weight of the product group whose two halves have constant
/// cross sums: `left_i + right_{n+1-i} = w` for every i. The constant `w`
/// is the purity weight.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PureWeight {
    left: GlWeight,
    right: GlWeight,
    w: i64,
}

impl PureWeight {
    pub fn new(left: GlWeight, right: GlWeight) -> Result<Self> {
        if left.n() != right.n() {
            return Err(Error::DimensionMismatch(left.n(), right.n()));
        }
        left.ensure_dominant()?;
        right.ensure_dominant()?;
        let n = left.n();
        let w = left.get(0) + right.get(n - 1);
        for i in 0..n {
            let s = left.get(i) + right.get(n - 1 - i);
            if s != w {
                return Err(Error::NotPure(format!(
                    "{};{} has cross sums {} and {}",
                    left, right, w, s
                )));
            }
        }
        Ok(PureWeight { left, right, w })
    }

    /// Validates a flat entry list `(l_1..l_n, r_1..r_n)` as a pure weight.
    pub fn from_flat(entries: &[i64]) -> Result<Self> {
        if entries.is_empty() || entries.len() % 2 != 0 {
            return Err(Error::OutOfRange(format!(
                "pure weight needs an even number of entries, got {}",
                entries.len()
            )));
        }
        let n = entries.len() / 2;
        let left = GlWeight::new(entries[..n].to_vec())?;
        let right = GlWeight::new(entries[n..].to_vec())?;
        PureWeight::new(left, right)
    }

    /// Builds the unique pure weight with the given left half and purity
    /// weight: `right = w - reverse(left)`.
    pub fn from_left_and_weight(left: GlWeight, w: i64) -> Result<Self> {
        left.ensure_dominant()?;
        let n = left.n();
        let right = GlWeight::new((0..n).map(|i| w - left.get(n - 1 - i)).collect())?;
        PureWeight::new(left, right)
    }

    pub fn n(&self) -> usize {
        self.left.n()
    }

    pub fn left(&self) -> &GlWeight {
        &self.left
    }

    pub fn right(&self) -> &GlWeight {
        &self.right
    }

    /// The purity weight `w`.
    pub fn weight(&self) -> i64 {
        self.w
    }

    /// Contragredient pure weight; its purity weight is `-w`.
    pub fn dual(&self) -> PureWeight {
        PureWeight {
            left: self.left.dual(),
            right: self.right.dual(),
            w: -self.w,
        }
    }

    /// Infinitesimal character parameters: for each i the pair
    /// `(a_i, b_i)` with `a_i = left_i + (n+1-2i)/2` and `b_i = w - a_i`.
    pub fn inf_char(&self) -> Vec<(HalfInt, HalfInt)> {
        let n = self.n() as i64;
        (0..self.n())
            .map(|i| {
                let rho = n + 1 - 2 * (i as i64 + 1);
                let a = HalfInt::from_twice(2 * self.left.get(i) + rho);
                let b = HalfInt::from_int(self.w) - a;
                (a, b)
            })
            .collect()
    }
}

impl fmt::Display for PureWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.left, self.right)
    }
}

impl FromStr for PureWeight {
    type Err = Error;

    /// Parses the literal form `"5,-5;6,-4"`: comma-separated integers,
    /// halves separated by `;`.
    fn from_str(s: &str) -> Result<Self> {
        let (l, r) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("pure weight {s:?} needs ';'")))?;
        let left: GlWeight = l.parse()?;
        let right: GlWeight = r.parse()?;
        PureWeight::new(left, right)
    }
}

/// Half the sum of two purity weights.
pub fn kappa(w: i64, w_prime: i64) -> HalfInt {
    HalfInt::from_twice(w + w_prime)
}

/// `kappa` of a pair of pure weights.
pub fn pair_kappa(mu: &PureWeight, nu: &PureWeight) -> HalfInt {
    kappa(mu.weight(), nu.weight())
}

/// Sum of the left-half entries of both weights.
pub fn k_eta(mu: &PureWeight, nu: &PureWeight) -> Result<i64> {
    if mu.n() != nu.n() {
        return Err(Error::DimensionMismatch(mu.n(), nu.n()));
    }
    Ok(mu.left().sum() + nu.left().sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pw(s: &str) -> PureWeight {
        s.parse().unwrap()
    }

    #[test]
    fn halfint_display_and_parity() {
        assert_eq!(HalfInt::from_twice(1).to_string(), "1/2");
        assert_eq!(HalfInt::from_twice(-11).to_string(), "-11/2");
        assert_eq!(HalfInt::from_int(3).to_string(), "3");
        assert!(HalfInt::from_twice(-3).is_half_odd());
        assert!(!HalfInt::from_twice(4).is_half_odd());
        assert_eq!(HalfInt::from_twice(-3).floor(), -2);
        assert_eq!(HalfInt::from_twice(-3).ceil(), -1);
        assert_eq!(HalfInt::from_twice(5).floor(), 2);
        assert_eq!(HalfInt::from_twice(5).ceil(), 3);
    }

    #[test]
    fn dual_is_an_involution() {
        let w: GlWeight = "3,1,-2".parse().unwrap();
        assert_eq!(w.dual().dual(), w);
        assert_eq!(w.dual(), "2,-1,-3".parse().unwrap());
    }

    #[test]
    fn dominant_rep_sorts_decreasing() {
        let w: GlWeight = "-1,1".parse().unwrap();
        assert_eq!(w.dominant_rep(), "1,-1".parse().unwrap());
        assert!(!w.is_dominant());
        assert!(w.dominant_rep().is_dominant());
    }

    #[test]
    fn purity_accepts_the_worked_pair() {
        let mu = pw("5,-5;6,-4");
        assert_eq!(mu.weight(), 1);
        assert_eq!(mu.n(), 2);
    }

    #[test]
    fn purity_rejects_mismatched_cross_sums() {
        let err = PureWeight::from_flat(&[1, 0, 1, 1]).unwrap_err();
        assert!(matches!(err, Error::NotPure(_)));
    }

    #[test]
    fn purity_rejects_non_dominant_halves() {
        let left = GlWeight::new(vec![0, 1]).unwrap();
        let right = GlWeight::new(vec![1, 0]).unwrap();
        assert!(matches!(
            PureWeight::new(left, right),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn left_half_and_weight_determine_the_rest() {
        let left: GlWeight = "5,-5".parse().unwrap();
        let mu = PureWeight::from_left_and_weight(left, 1).unwrap();
        assert_eq!(mu.right(), &"6,-4".parse().unwrap());
    }

    #[test]
    fn kappa_of_odd_total_is_half_odd() {
        let k = kappa(1, 0);
        assert_eq!(k, HalfInt::from_twice(1));
        assert!(k.is_half_odd());
    }

    #[test]
    fn k_eta_matches_the_worked_pair() {
        assert_eq!(k_eta(&pw("5,-5;6,-4"), &pw("5,-5;5,-5")).unwrap(), 0);
        assert_eq!(k_eta(&pw("1,0;1,0"), &pw("0,0;0,0")).unwrap(), 1);
    }

    #[test]
    fn inf_char_of_the_worked_weight() {
        let mu = pw("5,-5;6,-4");
        let ab = mu.inf_char();
        assert_eq!(ab[0].0, HalfInt::from_twice(11));
        assert_eq!(ab[0].1, HalfInt::from_twice(-9));
        assert_eq!(ab[1].0, HalfInt::from_twice(-11));
        assert_eq!(ab[1].1, HalfInt::from_twice(13));
    }

    #[test]
    fn inf_char_of_zero_is_the_staircase() {
        let mu = pw("0,0;0,0");
        let ab = mu.inf_char();
        assert_eq!(ab[0].0, HalfInt::from_twice(1));
        assert_eq!(ab[1].0, HalfInt::from_twice(-1));
        assert_eq!(ab[0].1, HalfInt::from_twice(-1));
        assert_eq!(ab[1].1, HalfInt::from_twice(1));
    }

    #[test]
    fn inf_char_sums_give_k_eta() {
        let mu = pw("5,-5;6,-4");
        let nu = pw("5,-5;5,-5");
        let sum_a = |p: &PureWeight| {
            p.inf_char()
                .iter()
                .fold(HalfInt::ZERO, |acc, (a, _)| acc + *a)
        };
        let total = sum_a(&mu) + sum_a(&nu);
        assert_eq!(total.as_int().unwrap(), k_eta(&mu, &nu).unwrap());
    }
}
