//! Relative Lie algebra cohomology dimensions, computed as counts of
//! equivariant maps out of exterior powers of the traceless module. For a
//! coefficient system X, the reduced profile at degree d is the number of
//! invariants in `wedge^d p (x) X` restricted to the trace-free compact
//! form, matched modulo determinant twists. The full profile adds one
//! central line: `full[d] = reduced[d] + reduced[d-1]`; for the
//! degenerate series it carries the 1, 2, 1 block at degrees l(j),
//! l(j)+1, l(j)+2. The reduced profile is palindromic (the coefficient
//! pairing is self-dual), so for n >= 3 a mirrored copy of the block
//! genuinely appears in the complementary degrees; at n = 2 the two
//! blocks coincide.

use crate::charring::{exterior_ladder, restrict_to_k, tensor_decomps};
use crate::compat::{central_point, classify_case, CaseLabel};
use crate::error::{Error, Result};
use crate::ktypes::{ij_spectrum, jmu_mult_su};
use crate::weights::{k_eta, pair_kappa, PureWeight};

/// Half the dimension of the symmetric directions: `n(n-1)/2`.
pub fn b_n(n: usize) -> usize {
    n * (n - 1) / 2
}

/// The middle-degree width: `n - 1`.
pub fn c_n(n: usize) -> usize {
    n - 1
}

/// Which normalization a profile was computed against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    Reduced,
    Full,
}

/// A cohomology profile: `dims[d]` is the dimension in degree d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohProfile {
    pub kind: ProfileKind,
    pub dims: Vec<u64>,
}

impl CohProfile {
    pub fn dim(&self, d: usize) -> u64 {
        self.dims.get(d).copied().unwrap_or(0)
    }
}

/// Reduced profile of `pi_mu (x) F_mu^dual`: at each degree, the
/// multiplicity sum over constituents tau of `wedge^d p (x) F_mu^dual|_K`
/// of the J_mu-multiplicity of dual(tau), matched modulo det twists.
pub fn coh_profile_pi(mu: &PureWeight) -> Result<CohProfile> {
    let n = mu.n();
    let ladder = exterior_ladder(n)?;
    let coeff = restrict_to_k(&mu.left().dual(), &mu.right().dual())?;
    let mut dims = Vec::with_capacity(ladder.len());
    for exterior in &ladder {
        let prod = tensor_decomps(exterior, &coeff)?;
        let mut total: u64 = 0;
        for (tau, m) in prod.iter() {
            let j = jmu_mult_su(mu, &tau.dual())?;
            total = total
                .checked_add(m.checked_mul(j).expect("multiplicity overflow"))
                .expect("multiplicity overflow");
        }
        dims.push(total);
    }
    Ok(CohProfile {
        kind: ProfileKind::Reduced,
        dims,
    })
}

/// Profiles of the degenerate-series block at the central point.
/// `window_ok` checks the 1, 2, 1 values at degrees l_j, l_j+1, l_j+2;
/// `pattern_ok` additionally demands vanishing everywhere else. The
/// mirrored block in complementary degrees makes `pattern_ok` false for
/// every n >= 3 instance; both flags are reported, never patched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IjCohomology {
    pub reduced: CohProfile,
    pub full: CohProfile,
    pub l_j: usize,
    pub window_ok: bool,
    pub pattern_ok: bool,
}

/// Reduced and full profiles of `I_j (x) V_j`. Defined only at the
/// central point `j = -kappa + 1/2` (the series is unitary on the
/// trace-free form exactly there) and inside the b or c window.
pub fn coh_profile_ij(mu: &PureWeight, nu: &PureWeight, j: i64) -> Result<IjCohomology> {
    if mu.n() != nu.n() {
        return Err(Error::DimensionMismatch(mu.n(), nu.n()));
    }
    let kappa = pair_kappa(mu, nu);
    if !kappa.is_half_odd() {
        return Err(Error::AssumptionViolated(format!(
            "kappa = {kappa} is integral; the reduction needs a half-odd kappa"
        )));
    }
    let j0 = central_point(mu, nu)?;
    if j != j0 {
        return Err(Error::AssumptionViolated(format!(
            "j = {j} is not the central point {j0}; unitarity holds only there"
        )));
    }
    let n = mu.n();
    let case = classify_case(n, k_eta(mu, nu)?, kappa, j);
    let (vl, vr) = match (case.label, case.vj) {
        (CaseLabel::B | CaseLabel::C, Some(v)) => v,
        (other, _) => {
            return Err(Error::UnsupportedCase(format!(
                "central point {j} falls in case {other}; the profile needs case b or c"
            )))
        }
    };
    let l_j = case.l_j.expect("cases b and c carry a degree");
    let spectrum = ij_spectrum(mu, nu)?;
    let ladder = exterior_ladder(n)?;
    let coeff = restrict_to_k(&vl, &vr)?;
    let mut reduced = Vec::with_capacity(ladder.len());
    for exterior in &ladder {
        let prod = tensor_decomps(exterior, &coeff)?;
        let mut total: u64 = 0;
        for (tau, m) in prod.iter() {
            if spectrum.su_matched_contains(&tau.dual()) {
                total = total.checked_add(m).expect("multiplicity overflow");
            }
        }
        reduced.push(total);
    }
    let mut full = vec![0u64; reduced.len() + 1];
    for (d, slot) in full.iter_mut().enumerate() {
        let above = if d < reduced.len() { reduced[d] } else { 0 };
        let below = if d > 0 { reduced[d - 1] } else { 0 };
        *slot = above + below;
    }
    let window_ok = full[l_j..=l_j + 2] == [1, 2, 1];
    let mut expected = vec![0u64; full.len()];
    expected[l_j] = 1;
    expected[l_j + 1] = 2;
    expected[l_j + 2] = 1;
    let pattern_ok = full == expected;
    Ok(IjCohomology {
        reduced: CohProfile {
            kind: ProfileKind::Reduced,
            dims: reduced,
        },
        full: CohProfile {
            kind: ProfileKind::Full,
            dims: full,
        },
        l_j,
        window_ok,
        pattern_ok,
    })
}

/// Multiplicity of the trivial K-type in the top exterior power; equals 1
/// because the full subset is the unique one of weight zero in top degree.
pub fn top_trivial_mult(n: usize) -> Result<u64> {
    let ladder = exterior_ladder(n)?;
    let zero = crate::weights::GlWeight::zero(n);
    Ok(ladder[n * n - 1].get(zero.entries()))
}

/// Everything the product formula needs, in one bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohSummary {
    pub n: usize,
    pub b_n: usize,
    pub c_n: usize,
    pub j0: i64,
    pub pi_mu: CohProfile,
    pub pi_nu: CohProfile,
    pub ij: IjCohomology,
    pub top_trivial: u64,
    pub total: u64,
}

/// The full degree-`2 b_n + c_n` computation for a compatible pair at its
/// central point: both single-factor profiles, the degenerate-series
/// block, the top-degree trivial multiplicity, and the product total.
pub fn coh_summary(mu: &PureWeight, nu: &PureWeight) -> Result<CohSummary> {
    if mu.n() != nu.n() {
        return Err(Error::DimensionMismatch(mu.n(), nu.n()));
    }
    let kappa = pair_kappa(mu, nu);
    if !kappa.is_half_odd() {
        return Err(Error::AssumptionViolated(format!(
            "kappa = {kappa} is integral; there is no central point"
        )));
    }
    let n = mu.n();
    let j0 = central_point(mu, nu)?;
    let pi_mu = coh_profile_pi(mu)?;
    let pi_nu = coh_profile_pi(nu)?;
    let ij = coh_profile_ij(mu, nu, j0)?;
    let top_trivial = top_trivial_mult(n)?;
    assert_eq!(
        top_trivial, 1,
        "the top exterior power must contain the trivial type exactly once"
    );
    let total = pi_mu.dim(b_n(n)) * pi_nu.dim(b_n(n)) * ij.reduced.dim(c_n(n));
    Ok(CohSummary {
        n,
        b_n: b_n(n),
        c_n: c_n(n),
        j0,
        pi_mu,
        pi_nu,
        ij,
        top_trivial,
        total,
    })
}

/// The product total alone.
pub fn coh_total(mu: &PureWeight, nu: &PureWeight) -> Result<u64> {
    Ok(coh_summary(mu, nu)?.total)
}
