//! Decompositions of finite-dimensional GL(n) representations by tableau
//! combinatorics.
//!
//! Tensor products are expanded by the classical rule: boxes of each
//! content row are appended to the first factor label by label, every
//! label forming a horizontal strip, with the reverse reading word kept a
//! lattice word. The lattice condition is enforced in its prefix-count
//! form: boxes of label k in rows <= r never exceed boxes of label k-1 in
//! rows <= r-1. Weights with negative entries are shifted into partitions
//! first and the determinant twist is restored afterwards.
//!
//! Exterior powers of the traceless module (weights `e_i - e_j` for
//! `i != j` plus `n - 1` zero weights) are computed by subset enumeration
//! of the weight multiset followed by peeling, and a hard guard rejects
//! instances with more than 2^25 subsets unless `RANKIN_LAB_MAX_SUBSETS`
//! raises it.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::oracle::{peel_cached, MultCache, WeightFunction};
use crate::weights::GlWeight;

/// A finite decomposition into irreducibles: dominant weights with
/// positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    n: usize,
    terms: BTreeMap<GlWeight, u64>,
}

impl Decomposition {
    pub fn new(n: usize) -> Self {
        Decomposition {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert_add(&mut self, weight: GlWeight, mult: u64) {
        debug_assert_eq!(weight.n(), self.n);
        debug_assert!(weight.is_dominant());
        if mult == 0 {
            return;
        }
        *self.terms.entry(weight).or_insert(0) += mult;
    }

    pub fn get(&self, weight: &[i64]) -> u64 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of weight.
    pub fn iter(&self) -> impl Iterator<Item = (&GlWeight, u64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    /// Sum of `mult * dim` over all terms.
    pub fn total_dim(&self) -> BigUint {
        let mut acc = BigUint::from(0u32);
        for (w, m) in self.iter() {
            acc += weyl_dim(w).expect("terms are dominant") * BigUint::from(m);
        }
        acc
    }

    /// Term-wise contragredient.
    pub fn dual(&self) -> Decomposition {
        let mut out = Decomposition::new(self.n);
        for (w, m) in self.iter() {
            out.insert_add(w.dual(), m);
        }
        out
    }
}

/// A decomposition of a representation of a triple product group: terms
/// are triples of dominant weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleDecomposition {
    n: usize,
    terms: BTreeMap<(GlWeight, GlWeight, GlWeight), u64>,
}

impl TripleDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: &GlWeight, b: &GlWeight, c: &GlWeight) -> u64 {
        self.terms
            .get(&(a.clone(), b.clone(), c.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(GlWeight, GlWeight, GlWeight), u64)> {
        self.terms.iter().map(|(k, &m)| (k, m))
    }
}

/// Dimension of the irreducible with highest weight `lambda`, as a product
/// of hook-content style factors. Exact; the result routinely exceeds
/// 64 bits.
pub fn weyl_dim(lambda: &GlWeight) -> Result<BigUint> {
    lambda.ensure_dominant()?;
    let n = lambda.n();
    let e = lambda.entries();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        for j in (i + 1)..n {
            let gap = (j - i) as u64;
            num *= BigUint::from((e[i] - e[j]) as u64 + gap);
            den *= BigUint::from(gap);
        }
    }
    Ok(num / den)
}

/// Box-adding walk shared by the full expansion and the single-coefficient
/// count. `content` is a partition padded to length n; label k may only
/// land in rows >= k, so once label k is done rows 0..=k are frozen.
struct LrWalk<'a> {
    n: usize,
    content: &'a [i64],
    target: Option<&'a [i64]>,
    shape: Vec<i64>,
    placed: Vec<Vec<i64>>,
    full: BTreeMap<Vec<i64>, u64>,
    hits: u64,
}

impl<'a> LrWalk<'a> {
    fn new(base: &[i64], content: &'a [i64], target: Option<&'a [i64]>) -> Self {
        let n = base.len();
        LrWalk {
            n,
            content,
            target,
            shape: base.to_vec(),
            placed: vec![vec![0; n]; n],
            full: BTreeMap::new(),
            hits: 0,
        }
    }

    fn label(&mut self, k: usize) {
        if let Some(t) = self.target {
            let frozen = k.min(self.n);
            if self.shape[..frozen] != t[..frozen] {
                return;
            }
        }
        if k == self.n {
            match self.target {
                Some(_) => self.hits += 1,
                None => *self.full.entry(self.shape.clone()).or_insert(0) += 1,
            }
            return;
        }
        if self.content[k] == 0 {
            self.label(k + 1);
            return;
        }
        let old = self.shape.clone();
        self.row(k, k, self.content[k], &old);
    }

    fn row(&mut self, k: usize, r: usize, rem: i64, old: &[i64]) {
        if r == self.n {
            if rem == 0 {
                self.label(k + 1);
            }
            return;
        }
        let mut hi = rem;
        if r > 0 {
            // horizontal strip against the pre-label shape, partition
            // against the updated row above
            hi = hi.min(old[r - 1] - old[r]);
            hi = hi.min(self.shape[r - 1] - old[r]);
        }
        if k > 0 {
            let prev: i64 = self.placed[k - 1][..r].iter().sum();
            let cur: i64 = self.placed[k][..r].iter().sum();
            hi = hi.min(prev - cur);
        }
        let mut lo = 0;
        if let Some(t) = self.target {
            hi = hi.min(t[r] - old[r]);
            if r == k {
                // row k receives nothing after label k
                lo = t[r] - old[r];
            }
        }
        if lo < 0 {
            return;
        }
        for add in lo..=hi {
            self.shape[r] = old[r] + add;
            self.placed[k][r] = add;
            self.row(k, r + 1, rem - add, old);
        }
        self.shape[r] = old[r];
        self.placed[k][r] = 0;
    }
}

fn shift_to_partition(w: &GlWeight) -> (Vec<i64>, i64) {
    let s = (-w.min_entry()).max(0);
    (w.shifted(s).entries().to_vec(), s)
}

/// Full tensor product decomposition of two irreducibles.
pub fn tensor(lambda: &GlWeight, mu: &GlWeight) -> Result<Decomposition> {
    if lambda.n() != mu.n() {
        return Err(Error::DimensionMismatch(lambda.n(), mu.n()));
    }
    lambda.ensure_dominant()?;
    mu.ensure_dominant()?;
    let (lp, sl) = shift_to_partition(lambda);
    let (mp, sm) = shift_to_partition(mu);
    // walk with the lighter content side; the product is symmetric
    let (base, content) = if lp.iter().sum::<i64>() >= mp.iter().sum::<i64>() {
        (lp, mp)
    } else {
        (mp, lp)
    };
    let mut walk = LrWalk::new(&base, &content, None);
    walk.label(0);
    let unshift = sl + sm;
    let mut out = Decomposition::new(lambda.n());
    for (shape, m) in walk.full {
        let w = GlWeight::new(shape)?.shifted(-unshift);
        out.insert_add(w, m);
    }
    Ok(out)
}

/// Multiplicity of `nu` in `lambda (x) mu`, counted directly without
/// expanding the whole product.
pub fn tensor_mult(lambda: &GlWeight, mu: &GlWeight, nu: &GlWeight) -> Result<u64> {
    if lambda.n() != mu.n() || lambda.n() != nu.n() {
        return Err(Error::DimensionMismatch(lambda.n(), mu.n().max(nu.n())));
    }
    lambda.ensure_dominant()?;
    mu.ensure_dominant()?;
    nu.ensure_dominant()?;
    if lambda.sum() + mu.sum() != nu.sum() {
        return Ok(0);
    }
    let (lp, sl) = shift_to_partition(lambda);
    let (mp, sm) = shift_to_partition(mu);
    let target = nu.shifted(sl + sm);
    if target.min_entry() < 0 {
        return Ok(0);
    }
    let (base, content) = if lp.iter().sum::<i64>() >= mp.iter().sum::<i64>() {
        (lp, mp)
    } else {
        (mp, lp)
    };
    if base
        .iter()
        .zip(target.entries())
        .any(|(b, t)| b > t)
    {
        return Ok(0);
    }
    let mut walk = LrWalk::new(&base, &content, Some(target.entries()));
    walk.label(0);
    Ok(walk.hits)
}

/// Tensor with the a-th symmetric power of the standard module. For
/// `a < 0` the convention is the contragredient power: highest weight
/// `(0, ..., 0, a)`.
pub fn pieri(lambda: &GlWeight, a: i64) -> Result<Decomposition> {
    lambda.ensure_dominant()?;
    if a < 0 {
        return Ok(pieri(&lambda.dual(), -a)?.dual());
    }
    let n = lambda.n();
    let (base, s) = shift_to_partition(lambda);
    let mut out = Decomposition::new(n);
    let mut cur = base.clone();
    strip_rows(&base, &mut cur, 0, a, &mut |shape| {
        let w = GlWeight::new(shape.to_vec()).expect("nonempty").shifted(-s);
        out.insert_add(w, 1);
    });
    Ok(out)
}

fn strip_rows(old: &[i64], cur: &mut Vec<i64>, r: usize, rem: i64, emit: &mut impl FnMut(&[i64])) {
    let n = old.len();
    if r == n {
        if rem == 0 {
            emit(cur);
        }
        return;
    }
    let hi = if r == 0 {
        rem
    } else {
        rem.min(old[r - 1] - old[r])
    };
    for add in 0..=hi {
        cur[r] = old[r] + add;
        strip_rows(old, cur, r + 1, rem - add, emit);
    }
    cur[r] = old[r];
}

/// Multiplicity of the d-th determinant power in
/// `E_lambda (x) E_mu (x) Sym^a`, by the closed-form bounds: it is one
/// exactly when `max_i(lambda_i + mu_{n+1-i}) <= d <=
/// min_{i<n}(lambda_i + mu_{n-i})` and the degrees balance, zero
/// otherwise.
pub fn det_mult_grenie(lambda: &GlWeight, mu: &GlWeight, a: i64, d: i64) -> Result<u64> {
    if lambda.n() != mu.n() {
        return Err(Error::DimensionMismatch(lambda.n(), mu.n()));
    }
    lambda.ensure_dominant()?;
    mu.ensure_dominant()?;
    if a < 0 {
        return Err(Error::NegativeSymPower(a));
    }
    let n = lambda.n();
    let lo = (0..n)
        .map(|i| lambda.get(i) + mu.get(n - 1 - i))
        .max()
        .unwrap();
    let hi = (0..n.saturating_sub(1))
        .map(|i| lambda.get(i) + mu.get(n - 2 - i))
        .min()
        .unwrap_or(i64::MAX);
    let degree_ok = a == (n as i64) * d - (lambda.sum() + mu.sum());
    Ok(u64::from(lo <= d && d <= hi && degree_ok))
}

/// Highest weight of the Cartan component: the entrywise sum.
pub fn cartan(lambda: &GlWeight, mu: &GlWeight) -> Result<GlWeight> {
    lambda.ensure_dominant()?;
    mu.ensure_dominant()?;
    lambda.add(mu)
}

/// Highest weight of the smallest constituent: dominant representative of
/// `lambda + reverse(mu)`.
pub fn prv(lambda: &GlWeight, mu: &GlWeight) -> Result<GlWeight> {
    lambda.ensure_dominant()?;
    mu.ensure_dominant()?;
    Ok(lambda.add(&mu.reversed())?.dominant_rep())
}

/// Restriction of an outer-product representation `(left; right)` of the
/// doubled group to its diagonal compact form: the tensor product of
/// `E_left` with the contragredient of `E_right`.
pub fn restrict_to_k(left: &GlWeight, right: &GlWeight) -> Result<Decomposition> {
    tensor(left, &right.dual())
}

/// Dimension of the invariant subspace of an iterated tensor product.
pub fn invariant_dim(weights: &[GlWeight]) -> Result<u64> {
    for w in weights {
        w.ensure_dominant()?;
        if w.n() != weights[0].n() {
            return Err(Error::DimensionMismatch(weights[0].n(), w.n()));
        }
    }
    match weights.len() {
        0 => Ok(1),
        1 => Ok(u64::from(weights[0].is_zero())),
        2 => Ok(u64::from(weights[1] == weights[0].dual())),
        len => {
            // invariants pair the last factor against the rest
            let mut acc = Decomposition::new(weights[0].n());
            acc.insert_add(weights[0].clone(), 1);
            for w in &weights[1..len - 2] {
                acc = tensor_decomps(&acc, &single(w))?;
            }
            let last_dual = weights[len - 1].dual();
            let mut total = 0u64;
            for (nu, m) in acc.iter() {
                let c = tensor_mult(nu, &weights[len - 2], &last_dual)?;
                total = total
                    .checked_add(m.checked_mul(c).expect("multiplicity overflow"))
                    .expect("multiplicity overflow");
            }
            Ok(total)
        }
    }
}

fn single(w: &GlWeight) -> Decomposition {
    let mut d = Decomposition::new(w.n());
    d.insert_add(w.clone(), 1);
    d
}

/// Tensor product of two decompositions, expanded term by term.
pub fn tensor_decomps(a: &Decomposition, b: &Decomposition) -> Result<Decomposition> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(a.n(), b.n()));
    }
    let mut out = Decomposition::new(a.n());
    for (wa, ma) in a.iter() {
        for (wb, mb) in b.iter() {
            let prod = tensor(wa, wb)?;
            let scale = ma.checked_mul(mb).expect("multiplicity overflow");
            for (nu, m) in prod.iter() {
                out.insert_add(nu.clone(), m.checked_mul(scale).expect("multiplicity overflow"));
            }
        }
    }
    Ok(out)
}

fn subset_limit() -> u128 {
    std::env::var("RANKIN_LAB_MAX_SUBSETS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1u128 << 25)
}

/// Binomial coefficient, exact.
pub fn binomial(m: u64, k: u64) -> BigUint {
    if k > m {
        return BigUint::from(0u32);
    }
    let k = k.min(m - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(m - i) / BigUint::from(i + 1);
    }
    acc
}

fn binomial_capped(m: u64, k: u64, cap: u128) -> u128 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((m - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return cap + 1,
        };
        if acc > cap {
            return cap + 1;
        }
    }
    acc
}

/// The weights `e_i - e_j`, `i != j`, in a fixed order.
fn root_weights(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(n * n - n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut v = vec![0i64; n];
                v[i] = 1;
                v[j] = -1;
                out.push(v);
            }
        }
    }
    out
}

fn subset_sums(
    roots: &[Vec<i64>],
    idx: usize,
    need: usize,
    sum: &mut Vec<i64>,
    mult: i64,
    wf: &mut WeightFunction,
) {
    if need == 0 {
        wf.add(sum.clone(), mult);
        return;
    }
    if roots.len() - idx < need {
        return;
    }
    for (a, b) in sum.iter_mut().zip(&roots[idx]) {
        *a += b;
    }
    subset_sums(roots, idx + 1, need - 1, sum, mult, wf);
    for (a, b) in sum.iter_mut().zip(&roots[idx]) {
        *a -= b;
    }
    subset_sums(roots, idx + 1, need, sum, mult, wf);
}

/// Decomposition of the k-th exterior power of the traceless module
/// (dimension `n^2 - 1`), by subset enumeration of its weight multiset
/// and peeling. The `n - 1` zero weights contribute binomially.
pub fn exterior_p(n: usize, k: usize) -> Result<Decomposition> {
    let dim = n * n - 1;
    if k > dim {
        return Err(Error::OutOfRange(format!(
            "exterior degree {k} exceeds module dimension {dim}"
        )));
    }
    let limit = subset_limit();
    if binomial_capped(dim as u64, k as u64, limit) > limit {
        return Err(Error::InfeasibleScale(format!(
            "C({dim},{k}) subsets exceed the limit {limit}"
        )));
    }
    let roots = root_weights(n);
    let zeros = n - 1;
    let mut wf = WeightFunction::new(n);
    for z in 0..=zeros.min(k) {
        if k - z > roots.len() {
            continue;
        }
        let coeff: u64 = binomial(zeros as u64, z as u64)
            .try_into()
            .expect("small binomial");
        let mut sum = vec![0i64; n];
        subset_sums(&roots, 0, k - z, &mut sum, coeff as i64, &mut wf);
    }
    peel_cached(&wf, &mut MultCache::new())
}

/// All exterior powers of the traceless module at once: index k of the
/// result is the decomposition of the k-th power. One pass over the root
/// subsets feeds every degree.
pub fn exterior_ladder(n: usize) -> Result<Vec<Decomposition>> {
    let dim = n * n - 1;
    let limit = subset_limit();
    if dim >= 128 || (1u128 << dim) > limit {
        return Err(Error::InfeasibleScale(format!(
            "2^{dim} subsets exceed the limit {limit}"
        )));
    }
    let roots = root_weights(n);
    let zeros = n - 1;
    let binoms: Vec<i64> = (0..=zeros)
        .map(|z| {
            let b: u64 = binomial(zeros as u64, z as u64)
                .try_into()
                .expect("small binomial");
            b as i64
        })
        .collect();
    let mut wfs: Vec<WeightFunction> = (0..=dim).map(|_| WeightFunction::new(n)).collect();
    let mut sum = vec![0i64; n];
    ladder_rec(&roots, 0, 0, &mut sum, &binoms, &mut wfs);
    let mut cache = MultCache::new();
    wfs.iter().map(|wf| peel_cached(wf, &mut cache)).collect()
}

fn ladder_rec(
    roots: &[Vec<i64>],
    idx: usize,
    size: usize,
    sum: &mut Vec<i64>,
    binoms: &[i64],
    wfs: &mut [WeightFunction],
) {
    if idx == roots.len() {
        for (z, &b) in binoms.iter().enumerate() {
            wfs[size + z].add(sum.clone(), b);
        }
        return;
    }
    ladder_rec(roots, idx + 1, size, sum, binoms, wfs);
    for (a, b) in sum.iter_mut().zip(&roots[idx]) {
        *a += b;
    }
    ladder_rec(roots, idx + 1, size + 1, sum, binoms, wfs);
    for (a, b) in sum.iter_mut().zip(&roots[idx]) {
        *a -= b;
    }
}

/// Multiplicity of an outer-product triple in the k-th exterior power of
/// three copies of the traceless module, via the direct-sum identity
/// `sum over a+b+c=k` of the per-factor multiplicities. The three copies
/// are never enumerated jointly.
pub fn triple_mult(
    n: usize,
    k: usize,
    target: (&GlWeight, &GlWeight, &GlWeight),
) -> Result<u64> {
    let ladder = exterior_ladder(n)?;
    triple_mult_from(&ladder, k, target)
}

/// Same as [`triple_mult`] against a precomputed ladder.
pub fn triple_mult_from(
    ladder: &[Decomposition],
    k: usize,
    target: (&GlWeight, &GlWeight, &GlWeight),
) -> Result<u64> {
    let dim = ladder.len() - 1;
    if k > 3 * dim {
        return Err(Error::OutOfRange(format!(
            "exterior degree {k} exceeds 3*{dim}"
        )));
    }
    let m0: Vec<u64> = ladder.iter().map(|d| d.get(target.0.entries())).collect();
    let m1: Vec<u64> = ladder.iter().map(|d| d.get(target.1.entries())).collect();
    let m2: Vec<u64> = ladder.iter().map(|d| d.get(target.2.entries())).collect();
    let mut total = 0u64;
    for a in 0..=dim.min(k) {
        if m0[a] == 0 {
            continue;
        }
        for b in 0..=dim.min(k - a) {
            if m1[b] == 0 {
                continue;
            }
            let c = k - a - b;
            if c > dim {
                continue;
            }
            total = total
                .checked_add(m0[a] * m1[b] * m2[c])
                .expect("multiplicity overflow");
        }
    }
    Ok(total)
}

/// Materialized decomposition of the k-th exterior power of the triple
/// direct sum, for cross-checking the targeted sum on small ranks.
pub fn triple_exterior(n: usize, k: usize) -> Result<TripleDecomposition> {
    let ladder = exterior_ladder(n)?;
    let dim = ladder.len() - 1;
    if k > 3 * dim {
        return Err(Error::OutOfRange(format!(
            "exterior degree {k} exceeds 3*{dim}"
        )));
    }
    let mut terms: BTreeMap<(GlWeight, GlWeight, GlWeight), u64> = BTreeMap::new();
    for a in 0..=dim.min(k) {
        for b in 0..=dim.min(k - a) {
            let c = k - a - b;
            if c > dim {
                continue;
            }
            for (wa, ma) in ladder[a].iter() {
                for (wb, mb) in ladder[b].iter() {
                    for (wc, mc) in ladder[c].iter() {
                        *terms
                            .entry((wa.clone(), wb.clone(), wc.clone()))
                            .or_insert(0) += ma * mb * mc;
                    }
                }
            }
        }
    }
    Ok(TripleDecomposition { n, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::tensor_oracle;

    fn w(s: &str) -> GlWeight {
        s.parse().unwrap()
    }

    #[test]
    fn weyl_dim_basics() {
        assert_eq!(weyl_dim(&w("2,0")).unwrap(), BigUint::from(3u32));
        assert_eq!(weyl_dim(&w("1,0,-1")).unwrap(), BigUint::from(8u32));
        assert_eq!(weyl_dim(&w("0,0,0,0")).unwrap(), BigUint::from(1u32));
        assert!(matches!(weyl_dim(&w("0,1")), Err(Error::NotDominant(_))));
    }

    #[test]
    fn standard_square_in_rank_two() {
        let dec = tensor(&w("1,0"), &w("1,0")).unwrap();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec.get(&[2, 0]), 1);
        assert_eq!(dec.get(&[1, 1]), 1);
    }

    #[test]
    fn adjoint_square_in_rank_two() {
        let dec = tensor(&w("1,-1"), &w("1,-1")).unwrap();
        assert_eq!(dec.get(&[2, -2]), 1);
        assert_eq!(dec.get(&[1, -1]), 1);
        assert_eq!(dec.get(&[0, 0]), 1);
        assert_eq!(dec.len(), 3);
    }

    #[test]
    fn tensor_matches_oracle_on_rank_three() {
        let a = w("2,1,-1");
        let b = w("1,0,-2");
        assert_eq!(tensor(&a, &b).unwrap(), tensor_oracle(&a, &b).unwrap());
    }

    #[test]
    fn tensor_conserves_dimension() {
        let a = w("3,1,0");
        let b = w("2,0,-1");
        let dec = tensor(&a, &b).unwrap();
        assert_eq!(
            dec.total_dim(),
            weyl_dim(&a).unwrap() * weyl_dim(&b).unwrap()
        );
    }

    #[test]
    fn targeted_coefficient_agrees_with_the_expansion() {
        let a = w("2,1,-1");
        let b = w("1,1,-2");
        let dec = tensor(&a, &b).unwrap();
        for (nu, m) in dec.iter() {
            assert_eq!(tensor_mult(&a, &b, nu).unwrap(), m);
        }
        assert_eq!(tensor_mult(&a, &b, &w("9,0,-9")).unwrap(), 0);
    }

    #[test]
    fn pieri_adds_one_box_to_a_column() {
        let dec = pieri(&w("1,1"), 1).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec.get(&[2, 1]), 1);
    }

    #[test]
    fn pieri_negative_power_is_the_contragredient_strip() {
        let dec = pieri(&w("0,0"), -2).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec.get(&[0, -2]), 1);
    }

    #[test]
    fn pieri_is_tensor_with_a_symmetric_power() {
        let lam = w("2,0,-1");
        for a in [0i64, 1, 3] {
            let via_tensor = tensor(&lam, &w(&format!("{a},0,0"))).unwrap();
            assert_eq!(pieri(&lam, a).unwrap(), via_tensor);
        }
    }

    #[test]
    fn grenie_bounds_on_the_adjoint_pair() {
        let ad = w("1,-1");
        assert_eq!(det_mult_grenie(&ad, &ad, 0, 0).unwrap(), 1);
        assert_eq!(det_mult_grenie(&ad, &ad, 6, 3).unwrap(), 0);
        assert!(matches!(
            det_mult_grenie(&ad, &ad, -2, -1),
            Err(Error::NegativeSymPower(-2))
        ));
    }

    #[test]
    fn prv_of_the_worked_pair() {
        let got = prv(&w("11,-9"), &w("10,-12")).unwrap();
        assert_eq!(got, w("1,-1"));
    }

    #[test]
    fn cartan_and_prv_sit_inside_the_product() {
        let a = w("2,1,-1");
        let b = w("1,0,-2");
        let dec = tensor(&a, &b).unwrap();
        assert_eq!(dec.get(cartan(&a, &b).unwrap().entries()), 1);
        assert!(dec.get(prv(&a, &b).unwrap().entries()) >= 1);
    }

    #[test]
    fn restriction_of_a_det_twist_is_a_single_term() {
        let dec = restrict_to_k(&w("0,0"), &w("1,1")).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec.get(&[-1, -1]), 1);
    }

    #[test]
    fn invariants_of_small_lists() {
        assert_eq!(invariant_dim(&[w("1,0"), w("0,-1")]).unwrap(), 1);
        assert_eq!(invariant_dim(&[w("1,0"), w("1,0")]).unwrap(), 0);
        assert_eq!(invariant_dim(&[w("0,0,0")]).unwrap(), 1);
        assert_eq!(
            invariant_dim(&[w("1,-1"), w("1,-1"), w("1,-1")]).unwrap(),
            1
        );
    }

    #[test]
    fn rank_two_exterior_square_is_the_adjoint() {
        let dec = exterior_p(2, 2).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec.get(&[1, -1]), 1);
    }

    #[test]
    fn exterior_powers_conserve_dimension() {
        for n in [2usize, 3] {
            let dim = (n * n - 1) as u64;
            for k in 0..=(n * n - 1) {
                let dec = exterior_p(n, k).unwrap();
                assert_eq!(dec.total_dim(), binomial(dim, k as u64), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn exterior_degree_out_of_range_is_rejected() {
        assert!(matches!(exterior_p(2, 4), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn exterior_guard_trips_without_the_override() {
        // C(35,17) is far beyond the default subset limit
        assert!(matches!(exterior_p(6, 17), Err(Error::InfeasibleScale(_))));
    }

    #[test]
    fn ladder_agrees_with_single_degrees() {
        let ladder = exterior_ladder(3).unwrap();
        assert_eq!(ladder.len(), 9);
        for (k, dec) in ladder.iter().enumerate() {
            assert_eq!(dec, &exterior_p(3, k).unwrap(), "k={k}");
        }
    }

    #[test]
    fn rank_two_triple_block() {
        let ad = w("1,-1");
        assert_eq!(triple_mult(2, 3, (&ad, &ad, &ad)).unwrap(), 1);
    }

    #[test]
    fn triple_sum_matches_the_materialized_product() {
        let ladder = exterior_ladder(2).unwrap();
        for k in 0..=6 {
            let trip = triple_exterior(2, k).unwrap();
            for (key, m) in trip.iter() {
                assert_eq!(
                    triple_mult_from(&ladder, k, (&key.0, &key.1, &key.2)).unwrap(),
                    m
                );
            }
        }
    }
}
