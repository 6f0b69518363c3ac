//! The fundamental cycle and the divisor G used for the Hilbert slope.
//!
//! The fundamental cycle is the minimal nonzero effective integral
//! exceptional cycle Z with (Z·E_j) ≤ 0 for every exceptional curve. It is
//! computed by the classical increment iteration: start at Σ E_j (the answer
//! has full support, since the dual graph is connected) and add one curve at
//! a time while some pairing is still positive. Negative definiteness makes
//! the iteration terminate, and the limit does not depend on which violator
//! is picked at each step.
//!
//! The slope of the Hilbert function is (−Δ·G) where G is the exceptional
//! divisor cut out by the maximal ideal on the resolution. That divisor is
//! not determined by the dual graph alone: it equals the fundamental cycle
//! exactly when the singularity is rational and may be larger otherwise, so
//! callers may either accept the fundamental-cycle default (flagged in
//! reports as an assumption) or supply G themselves.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::Signed;

use crate::lattice::{QDivisor, ValidatedConfig};

/// Step fuse for the increment iteration. Termination is guaranteed on a
/// validated configuration, so hitting the fuse means one slipped through.
pub const LAUFER_FUSE: u64 = 1_000_000;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("FuseExceeded: cycle iteration did not terminate within {0} steps")]
    FuseExceeded(u64),
    #[error("InvalidUserG: {0}")]
    InvalidUserG(&'static str),
}

/// The fundamental cycle together with the number of increment steps taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalCycle {
    /// Integral, anti-nef, with coefficient ≥ 1 on every exceptional curve.
    pub z: QDivisor,
    pub laufer_steps: u64,
}

/// Where the divisor G for the Hilbert slope comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GSource {
    FromFundamentalCycle,
    UserSupplied(QDivisor),
}

/// Provenance tag recorded in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GProvenance {
    FundamentalCycle,
    User,
}

/// Deterministic tie-break when several curves pair positively.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolatorRule {
    SmallestIndex,
    LargestIndex,
}

/// Compute the fundamental cycle with the default smallest-index rule.
pub fn fundamental_cycle(cfg: &ValidatedConfig) -> Result<FundamentalCycle, CycleError> {
    fundamental_cycle_with_rule(cfg, ViolatorRule::SmallestIndex)
}

/// The increment iteration with an explicit violator-selection rule. The
/// limit is rule-independent; only `laufer_steps`' witness path may differ.
pub fn fundamental_cycle_with_rule(
    cfg: &ValidatedConfig,
    rule: ViolatorRule,
) -> Result<FundamentalCycle, CycleError> {
    let r = cfg.rank();
    let mut z: Vec<BigInt> = vec![BigInt::from(1); r];
    // pairings[j] = (Z·E_j), updated incrementally as Z grows.
    let mut pairings: Vec<BigInt> = (0..r)
        .map(|j| (0..r).map(|i| &z[i] * cfg.form().entry_int(i, j)).sum())
        .collect();
    let mut steps = 0u64;
    loop {
        let violator = match rule {
            ViolatorRule::SmallestIndex => (0..r).find(|&j| pairings[j].is_positive()),
            ViolatorRule::LargestIndex => (0..r).rev().find(|&j| pairings[j].is_positive()),
        };
        let Some(j) = violator else { break };
        z[j] += 1;
        for k in 0..r {
            pairings[k] += cfg.form().entry_int(j, k);
        }
        steps += 1;
        if steps >= LAUFER_FUSE {
            return Err(CycleError::FuseExceeded(LAUFER_FUSE));
        }
    }
    let coeffs = z.into_iter().map(BigRational::from).collect();
    Ok(FundamentalCycle {
        z: cfg.exceptional_cycle(coeffs),
        laufer_steps: steps,
    })
}

/// Check that a user-supplied G is effective, integral, exceptional,
/// nonzero and anti-nef.
pub fn validate_user_g(cfg: &ValidatedConfig, g: &QDivisor) -> Result<(), CycleError> {
    if !g.is_exceptional() {
        return Err(CycleError::InvalidUserG("support is not exceptional"));
    }
    if !g.is_effective() {
        return Err(CycleError::InvalidUserG("not effective"));
    }
    if !g.is_integral() {
        return Err(CycleError::InvalidUserG("not integral"));
    }
    if g.is_zero() {
        return Err(CycleError::InvalidUserG("zero divisor"));
    }
    if !cfg.is_anti_nef(g) {
        return Err(CycleError::InvalidUserG("not anti-nef"));
    }
    Ok(())
}

/// Resolve the divisor G to use for the Hilbert slope, and record where it
/// came from.
pub fn resolve_g(
    cfg: &ValidatedConfig,
    source: &GSource,
) -> Result<(QDivisor, GProvenance), CycleError> {
    match source {
        GSource::FromFundamentalCycle => Ok((
            fundamental_cycle(cfg)?.z,
            GProvenance::FundamentalCycle,
        )),
        GSource::UserSupplied(g) => {
            validate_user_g(cfg, g)?;
            Ok((g.clone(), GProvenance::User))
        }
    }
}
