//! Zariski decomposition of effective ℚ-divisors.
//!
//! Every effective divisor D on the resolution has a unique decomposition
//! Δ = D + B where Δ is anti-nef, B is effective with exceptional support,
//! and (Δ·E) = 0 on every component of B. Δ is the minimal effective
//! anti-nef divisor dominating D by an exceptional amount, and it is a
//! ℚ-divisor whenever D is.
//!
//! [`zariski_decompose`] finds the pair by an active-set iteration: solve the
//! zero-pairing equality system on the current support exactly, drop indices
//! whose solved coefficient is negative, add every curve whose pairing is
//! still positive, repeat. Correctness never rests on the iteration path:
//! the returned value carries a complementarity certificate (anti-nefness
//! plus zero pairing on the support of B), and uniqueness makes any
//! certified answer the answer. The iteration carries a step fuse; if it
//! ever trips, the computation falls back to [`oracle_decompose`], which
//! enumerates all 2^r supports.

use num::rational::BigRational;
use num::traits::{Signed, Zero};

use crate::lattice::{QDivisor, ValidatedConfig};
use crate::linalg;

/// Ranks above this are refused by the enumeration oracle.
pub const ORACLE_RANK_CAP: usize = 12;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ZariskiError {
    #[error("NotEffective: the divisor has a negative coefficient")]
    NotEffective,
    #[error("RankCapExceeded: rank {rank} exceeds the enumeration cap {cap}")]
    RankCapExceeded { rank: usize, cap: usize },
    #[error(
        "NoFeasibleSupport: no support admits a complementary solution (internal inconsistency)"
    )]
    NoFeasibleSupport,
}

/// The checkable conditions that, by uniqueness, prove a candidate pair is
/// the Zariski decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecompositionCertificate {
    /// (Δ·E_j) ≤ 0 for every exceptional curve.
    pub antinef_ok: bool,
    /// (Δ·E_j) = 0 for every j with B_j > 0.
    pub support_orthogonality_ok: bool,
}

impl DecompositionCertificate {
    pub fn holds(&self) -> bool {
        self.antinef_ok && self.support_orthogonality_ok
    }
}

/// The pair (Δ, B) with Δ = D + B, together with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZariskiDecomposition {
    pub delta: QDivisor,
    pub b: QDivisor,
    pub certificate: DecompositionCertificate,
}

/// Componentwise minimum. If b and b2 both make D + · anti-nef then so does
/// their minimum; this closure property is what forces uniqueness of the
/// minimal decomposition.
pub fn pointwise_min(b: &QDivisor, b2: &QDivisor) -> QDivisor {
    b.pointwise_min(b2)
}

/// Recompute the certificate of a candidate pair from scratch.
pub fn certify(cfg: &ValidatedConfig, delta: &QDivisor, b: &QDivisor) -> DecompositionCertificate {
    let pairings: Vec<BigRational> = (0..cfg.rank()).map(|j| cfg.pair(delta, j)).collect();
    DecompositionCertificate {
        antinef_ok: pairings.iter().all(|p| !p.is_positive()),
        support_orthogonality_ok: (0..cfg.rank())
            .all(|j| !b.exc_coeff(j).is_positive() || pairings[j].is_zero()),
    }
}

/// Solve Σ_{i∈support} x_i (E_i·E_j) = −(D·E_j) for all j ∈ support.
/// The support submatrix of a negative definite form is negative definite,
/// hence nonsingular, so the solution exists and is unique.
fn solve_on_support(
    cfg: &ValidatedConfig,
    d: &QDivisor,
    support: &[usize],
) -> Vec<BigRational> {
    if support.is_empty() {
        return Vec::new();
    }
    let a: Vec<Vec<BigRational>> = support
        .iter()
        .map(|&i| support.iter().map(|&j| cfg.form().entry(i, j).clone()).collect())
        .collect();
    let rhs: Vec<BigRational> = support.iter().map(|&j| -cfg.pair(d, j)).collect();
    linalg::solve(a, rhs)
        .expect("principal submatrix of a negative definite form is nonsingular")
}

fn cycle_from(cfg: &ValidatedConfig, support: &[usize], x: &[BigRational]) -> QDivisor {
    let mut coeffs = vec![BigRational::zero(); cfg.rank()];
    for (&i, xi) in support.iter().zip(x) {
        coeffs[i] = xi.clone();
    }
    cfg.exceptional_cycle(coeffs)
}

fn assemble(cfg: &ValidatedConfig, d: &QDivisor, b: QDivisor) -> ZariskiDecomposition {
    let delta = d.add(&b);
    let certificate = certify(cfg, &delta, &b);
    assert!(
        certificate.holds(),
        "complementarity certificate failed on an assembled decomposition"
    );
    ZariskiDecomposition { delta, b, certificate }
}

/// Compute the Zariski decomposition of an effective divisor.
pub fn zariski_decompose(
    cfg: &ValidatedConfig,
    d: &QDivisor,
) -> Result<ZariskiDecomposition, ZariskiError> {
    if !d.is_effective() {
        return Err(ZariskiError::NotEffective);
    }
    let r = cfg.rank();
    let pairings: Vec<BigRational> = (0..r).map(|j| cfg.pair(d, j)).collect();
    let mut support: Vec<usize> = (0..r).filter(|&j| pairings[j].is_positive()).collect();

    // Termination of the add/drop heuristic is not load-bearing: after the
    // fuse we fall back to the enumeration oracle, and the certificate is
    // what proves the answer either way.
    let fuse = 1u64
        .checked_shl(r.min(40) as u32)
        .map_or(u64::MAX, |p| 3 * p);
    for _ in 0..fuse {
        let x = solve_on_support(cfg, d, &support);
        let negatives: Vec<usize> = support
            .iter()
            .zip(&x)
            .filter(|(_, xi)| xi.is_negative())
            .map(|(&i, _)| i)
            .collect();
        if !negatives.is_empty() {
            support.retain(|i| !negatives.contains(i));
            continue;
        }
        let b = cycle_from(cfg, &support, &x);
        let delta = d.add(&b);
        let violators: Vec<usize> = (0..r)
            .filter(|j| !support.contains(j) && cfg.pair(&delta, *j).is_positive())
            .collect();
        if !violators.is_empty() {
            support.extend(violators);
            support.sort_unstable();
            continue;
        }
        return Ok(assemble(cfg, d, b));
    }
    oracle_decompose(cfg, d)
}

/// Independent verification oracle: enumerate all 2^r supports, solve each
/// equality system exactly, and keep the solutions that are complementary
/// (x ≥ 0 on the support, pairing ≤ 0 off it). Exactly one decomposition
/// can come out, and it must attain the minimal coefficient sum among the
/// solutions found.
pub fn oracle_decompose(
    cfg: &ValidatedConfig,
    d: &QDivisor,
) -> Result<ZariskiDecomposition, ZariskiError> {
    oracle_decompose_with_cap(cfg, d, ORACLE_RANK_CAP)
}

/// [`oracle_decompose`] with an explicit rank cap.
pub fn oracle_decompose_with_cap(
    cfg: &ValidatedConfig,
    d: &QDivisor,
    cap: usize,
) -> Result<ZariskiDecomposition, ZariskiError> {
    if !d.is_effective() {
        return Err(ZariskiError::NotEffective);
    }
    let r = cfg.rank();
    if r > cap {
        return Err(ZariskiError::RankCapExceeded { rank: r, cap });
    }

    let mut kept: Vec<(QDivisor, BigRational)> = Vec::new();
    'supports: for mask in 0u64..(1u64 << r) {
        let support: Vec<usize> = (0..r).filter(|&j| mask & (1 << j) != 0).collect();
        let x = solve_on_support(cfg, d, &support);
        if x.iter().any(|xi| xi.is_negative()) {
            continue;
        }
        let b = cycle_from(cfg, &support, &x);
        let delta = d.add(&b);
        for j in 0..r {
            if !support.contains(&j) && cfg.pair(&delta, j).is_positive() {
                continue 'supports;
            }
        }
        let sum: BigRational = x.iter().sum();
        kept.push((b, sum));
    }

    let Some((b, _)) = kept.first() else {
        return Err(ZariskiError::NoFeasibleSupport);
    };
    assert!(
        kept.iter().all(|(other, _)| other == b),
        "distinct complementary solutions found; the Zariski decomposition must be unique"
    );
    let min_sum = kept.iter().map(|(_, s)| s).min().unwrap();
    let b_sum: BigRational = b.exc_coeffs().iter().sum();
    assert_eq!(
        &b_sum, min_sum,
        "returned decomposition does not minimize the coefficient sum"
    );
    let b = b.clone();
    Ok(assemble(cfg, d, b))
}
