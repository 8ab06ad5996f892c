//! Brute-force character arithmetic built on triangular pattern
//! enumeration.
//!
//! A dominant weight's full weight multiset is produced by walking all
//! interleaving triangular arrays over it: row k sits below row k+1 with
//! `upper_i >= lower_i >= upper_{i+1}`, and the weight records the row-sum
//! differences. Characters multiply by convolving weight functions, and a
//! genuine character is decomposed by repeatedly stripping the
//! lexicographically largest surviving dominant weight. Everything here is
//! independent of the tableau combinatorics in [`crate::charring`], which
//! is the point: the two routes check each other.

use std::collections::hash_map::Entry;
use std::collections::BTreeMap;
use std::collections::HashMap;

use crate::charring::Decomposition;
use crate::error::{Error, Result};
use crate::weights::GlWeight;

/// A finitely supported function from integer weights to integers: the
/// multiset of weights of a virtual representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction {
    n: usize,
    support: BTreeMap<Vec<i64>, i64>,
}

impl WeightFunction {
    pub fn new(n: usize) -> Self {
        WeightFunction {
            n,
            support: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, weight: &[i64]) -> i64 {
        self.support.get(weight).copied().unwrap_or(0)
    }

    /// Adds `count` to the multiplicity at `weight`, dropping zeros.
    pub fn add(&mut self, weight: Vec<i64>, count: i64) {
        debug_assert_eq!(weight.len(), self.n);
        if count == 0 {
            return;
        }
        match self.support.entry(weight) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += count;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(count);
            }
        }
    }

    /// Total mass: the sum of all multiplicities.
    pub fn mass(&self) -> i64 {
        self.support.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[i64], i64)> {
        self.support.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn support_len(&self) -> usize {
        self.support.len()
    }

    /// Pointwise product of characters: the weight function of the tensor
    /// product, by convolution of supports.
    pub fn convolve(&self, other: &WeightFunction) -> Result<WeightFunction> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let mut out = WeightFunction::new(self.n);
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let c = ca.checked_mul(cb).expect("multiplicity overflow");
                let v = out.support.entry(sum).or_insert(0);
                *v = v.checked_add(c).expect("multiplicity overflow");
            }
        }
        out.support.retain(|_, v| *v != 0);
        Ok(out)
    }
}

/// Enumerates every triangular pattern over `top` and returns the full
/// weight multiset of the irreducible with that highest weight.
pub fn weight_mults(lambda: &GlWeight) -> Result<WeightFunction> {
    lambda.ensure_dominant()?;
    let n = lambda.n();
    let mut wf = WeightFunction::new(n);
    let mut tail: Vec<i64> = Vec::with_capacity(n);
    descend(lambda.entries(), &mut tail, &mut |weight| {
        let v = wf.support.entry(weight.to_vec()).or_insert(0);
        *v += 1;
    });
    Ok(wf)
}

/// Multiplicity of a single weight in the irreducible with highest weight
/// `lambda`, by the same pattern walk with every row sum pinned by the
/// target. Costs roughly one traversal per contributing pattern.
pub fn weight_mult_at(lambda: &GlWeight, weight: &[i64]) -> Result<u64> {
    lambda.ensure_dominant()?;
    let n = lambda.n();
    if weight.len() != n {
        return Err(Error::DimensionMismatch(weight.len(), n));
    }
    if weight.iter().sum::<i64>() != lambda.sum() {
        return Ok(0);
    }
    let mut count = 0u64;
    pinned_descend(lambda.entries(), weight, &mut count);
    Ok(count)
}

/// Recursive walk over interleaving rows; `tail` collects the weight
/// entries from the bottom of the pattern upward.
fn descend(row: &[i64], tail: &mut Vec<i64>, emit: &mut impl FnMut(&[i64])) {
    let k = row.len();
    if k == 1 {
        let mut weight = Vec::with_capacity(tail.len() + 1);
        weight.push(row[0]);
        weight.extend(tail.iter().rev());
        emit(&weight);
        return;
    }
    let row_sum: i64 = row.iter().sum();
    let mut next = vec![0i64; k - 1];
    fill_next(row, &mut next, 0, row_sum, tail, emit);
}

fn fill_next(
    row: &[i64],
    next: &mut Vec<i64>,
    pos: usize,
    row_sum: i64,
    tail: &mut Vec<i64>,
    emit: &mut impl FnMut(&[i64]),
) {
    if pos == next.len() {
        let next_sum: i64 = next.iter().sum();
        tail.push(row_sum - next_sum);
        descend(&next.clone(), tail, emit);
        tail.pop();
        return;
    }
    // interleaving bounds: row[pos] >= next[pos] >= row[pos + 1]
    for v in row[pos + 1]..=row[pos] {
        next[pos] = v;
        fill_next(row, next, pos + 1, row_sum, tail, emit);
    }
}

/// Like `descend`, but the sum of every lower row is forced by the target
/// weight, so the walk only explores patterns with exactly that weight.
fn pinned_descend(row: &[i64], target: &[i64], count: &mut u64) {
    let k = row.len();
    if k == 1 {
        debug_assert_eq!(row[0], target[0]);
        *count += 1;
        return;
    }
    let row_sum: i64 = row.iter().sum();
    let want = row_sum - target[k - 1];
    let mut next = vec![0i64; k - 1];
    fill_pinned(row, &mut next, 0, want, target, count);
}

fn fill_pinned(
    row: &[i64],
    next: &mut Vec<i64>,
    pos: usize,
    remaining: i64,
    target: &[i64],
    count: &mut u64,
) {
    let k = next.len();
    if pos == k {
        if remaining == 0 {
            pinned_descend(&next.clone(), target, count);
        }
        return;
    }
    // bounds on what the rest of the row can still absorb
    let rest_min: i64 = (pos + 1..k).map(|i| row[i + 1]).sum();
    let rest_max: i64 = (pos + 1..k).map(|i| row[i]).sum();
    let lo = (remaining - rest_max).max(row[pos + 1]);
    let hi = (remaining - rest_min).min(row[pos]);
    for v in lo..=hi {
        next[pos] = v;
        fill_pinned(row, next, pos + 1, remaining - v, target, count);
    }
}

/// Memo for repeated weight-multiset queries inside a single operation.
#[derive(Default)]
pub struct MultCache {
    map: HashMap<Vec<i64>, WeightFunction>,
}

impl MultCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn weight_mults(&mut self, lambda: &[i64]) -> Result<&WeightFunction> {
        match self.map.entry(lambda.to_vec()) {
            Entry::Occupied(o) => Ok(o.into_mut()),
            Entry::Vacant(v) => {
                let wf = weight_mults(&GlWeight::new(lambda.to_vec())?)?;
                Ok(v.insert(wf))
            }
        }
    }
}

/// Decomposes a genuine character, presented by its weight function, into
/// irreducibles: repeatedly strip the lexicographically largest surviving
/// weight, which in a genuine character is always dominant. A negative
/// multiplicity at any point, or a non-dominant maximum, means the input
/// was not a character.
pub fn peel(wf: &WeightFunction) -> Result<Decomposition> {
    peel_cached(wf, &mut MultCache::new())
}

pub fn peel_cached(wf: &WeightFunction, cache: &mut MultCache) -> Result<Decomposition> {
    let n = wf.n();
    let mut rem = wf.support.clone();
    let mut out = Decomposition::new(n);
    while let Some((top, &m)) = rem.iter().next_back() {
        if m < 0 {
            return Err(Error::MalformedCharacter(format!(
                "multiplicity {m} at {top:?}"
            )));
        }
        let top = top.clone();
        if !top.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::MalformedCharacter(format!(
                "maximal weight {top:?} is not dominant"
            )));
        }
        let mults = cache.weight_mults(&top)?;
        for (beta, c) in mults.iter() {
            let slot = rem.entry(beta.to_vec()).or_insert(0);
            *slot -= m * c;
            if *slot < 0 {
                return Err(Error::MalformedCharacter(format!(
                    "stripping {top:?} drives {beta:?} negative"
                )));
            }
            if *slot == 0 {
                rem.remove(beta);
            }
        }
        out.insert_add(GlWeight::new(top)?, m as u64);
    }
    Ok(out)
}

/// Tensor decomposition the slow way: convolve the two weight multisets
/// and peel. Serves as the independent check on the tableau route.
pub fn tensor_oracle(lambda: &GlWeight, mu: &GlWeight) -> Result<Decomposition> {
    let mut cache = MultCache::new();
    let a = cache.weight_mults(lambda.entries())?.clone();
    let b = cache.weight_mults(mu.entries())?.clone();
    let conv = a.convolve(&b)?;
    peel_cached(&conv, &mut cache)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GlWeight {
        s.parse().unwrap()
    }

    #[test]
    fn adjoint_weight_multiset_for_rank_three() {
        let wf = weight_mults(&w("1,0,-1")).unwrap();
        assert_eq!(wf.mass(), 8);
        assert_eq!(wf.get(&[0, 0, 0]), 2);
        assert_eq!(wf.get(&[1, 0, -1]), 1);
        assert_eq!(wf.get(&[1, -1, 0]), 1);
    }

    #[test]
    fn weight_multiset_is_symmetric_under_entry_permutation() {
        let wf = weight_mults(&w("2,1,-1")).unwrap();
        assert_eq!(wf.get(&[2, 1, -1]), wf.get(&[-1, 1, 2]));
        assert_eq!(wf.get(&[1, 1, 0]), wf.get(&[0, 1, 1]));
    }

    #[test]
    fn pinned_walk_agrees_with_the_full_multiset() {
        let lam = w("3,1,0,-2");
        let wf = weight_mults(&lam).unwrap();
        for (beta, c) in wf.iter() {
            assert_eq!(weight_mult_at(&lam, beta).unwrap(), c as u64);
        }
        assert_eq!(weight_mult_at(&lam, &[3, 3, 3, -7]).unwrap(), 0);
        assert_eq!(weight_mult_at(&lam, &[9, 9, 9, 9]).unwrap(), 0);
    }

    #[test]
    fn peel_recovers_a_single_irreducible() {
        let lam = w("4,2,-1");
        let dec = peel(&weight_mults(&lam).unwrap()).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec.get(lam.entries()), 1);
    }

    #[test]
    fn peel_rejects_an_asymmetric_multiset() {
        let mut wf = WeightFunction::new(2);
        wf.add(vec![1, 0], 1);
        assert!(matches!(peel(&wf), Err(Error::MalformedCharacter(_))));
    }

    #[test]
    fn peel_rejects_negative_multiplicities() {
        let mut wf = WeightFunction::new(2);
        wf.add(vec![1, 0], -1);
        wf.add(vec![0, 1], -1);
        assert!(matches!(peel(&wf), Err(Error::MalformedCharacter(_))));
    }

    #[test]
    fn rank_two_tensor_square_of_the_adjoint() {
        let dec = tensor_oracle(&w("1,-1"), &w("1,-1")).unwrap();
        assert_eq!(dec.len(), 3);
        assert_eq!(dec.get(&[2, -2]), 1);
        assert_eq!(dec.get(&[1, -1]), 1);
        assert_eq!(dec.get(&[0, 0]), 1);
    }

    #[test]
    fn oracle_tensor_is_commutative() {
        let a = w("2,0,-1");
        let b = w("1,1,0");
        assert_eq!(
            tensor_oracle(&a, &b).unwrap(),
            tensor_oracle(&b, &a).unwrap()
        );
    }
}
