//! Ring-theoretic conclusions read off from the numerical data.
//!
//! For an effective divisor D with Zariski decomposition Δ = D + B, the
//! section filtration I(nD) = Γ(X, O_X(−⌈nD⌉)) agrees with that of Δ, and
//! the behaviour of its Rees algebra R[D] is governed by the wall structure
//! of Δ against the exceptional curves:
//!
//! * the analytic spread of the filtration is 2 exactly when some
//!   exceptional curve meets Δ negatively — the "negative wall";
//! * the same condition decides whether the maximal ideal is an associated
//!   prime of R/I(nΔ) for all large n;
//! * curves with (Δ·E) = 0 are redundant: their valuations can be dropped
//!   from the intersection defining I(nΔ), and only they can appear in the
//!   fixed components of −⌈nΔ⌉ infinitely often;
//! * when the negative wall is empty the filtration is an intersection of
//!   symbolic powers of the height-one primes carried by the strict
//!   transforms in D;
//! * the Hilbert function n ↦ ℓ(I(nD)/m_R·I(nD)) grows like n·α + O(1) with
//!   α = (−Δ·G).
//!
//! Whether the spread is 0 or 1 is not determined by intersection data (it
//! can hinge on torsion of line-bundle classes), so the classification only
//! reports the dichotomy `Two` versus `ZeroOrOne`.

use std::collections::BTreeSet;

use num::rational::BigRational;
use num::traits::{Signed, Zero};

use crate::cycles::{self, CycleError, GProvenance, GSource};
use crate::lattice::{QDivisor, ValidatedConfig};
use crate::zariski::{self, ZariskiDecomposition, ZariskiError};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error(transparent)]
    Decomposition(#[from] ZariskiError),
    #[error(transparent)]
    InvalidG(#[from] CycleError),
    #[error("PreconditionOrder: d1 must be ≤ d2 componentwise")]
    PreconditionOrder,
    #[error("inputs must be effective and anti-nef")]
    PreconditionAntiNef,
}

/// The two-valued numerical classification of the analytic spread. The 0/1
/// distinction is deliberately left undecided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpreadClass {
    Two,
    ZeroOrOne,
}

/// Slope of the Hilbert function of the fiber cone: α = (−Δ·G), together
/// with the provenance of G. The bounded remainder σ(n) exists but is not
/// computable from intersection data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSlope {
    pub alpha: BigRational,
    pub g_used: GProvenance,
}

/// Aggregate of everything the numerical data decides about the filtration
/// of an effective divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub decomposition: ZariskiDecomposition,
    pub spread: SpreadClass,
    pub mr_associated_eventually: bool,
    /// Labels of exceptional curves with (Δ·E) = 0.
    pub redundant_exceptional: BTreeSet<String>,
    /// Labels of exceptional curves with (Δ·E) < 0.
    pub negative_wall: BTreeSet<String>,
    /// Equals `redundant_exceptional`: only the zero wall can appear in
    /// fixed components infinitely often.
    pub persistent_fixed_candidates: BTreeSet<String>,
    /// Present iff `spread` is `ZeroOrOne`: the strict-transform components
    /// of D with their coefficients b_i, so that I(nD) = ∩ Q_i^(⌈n·b_i⌉).
    pub symbolic_form: Option<Vec<(String, BigRational)>>,
    pub hilbert: HilbertSlope,
}

fn wall_labels<F: Fn(&BigRational) -> bool>(
    cfg: &ValidatedConfig,
    dec: &ZariskiDecomposition,
    keep: F,
) -> BTreeSet<String> {
    (0..cfg.rank())
        .filter(|&j| keep(&cfg.pair(&dec.delta, j)))
        .map(|j| cfg.exc_label(j).to_string())
        .collect()
}

/// `Two` iff some exceptional curve has (Δ·E) < 0.
pub fn spread_class(cfg: &ValidatedConfig, dec: &ZariskiDecomposition) -> SpreadClass {
    if (0..cfg.rank()).any(|j| cfg.pair(&dec.delta, j).is_negative()) {
        SpreadClass::Two
    } else {
        SpreadClass::ZeroOrOne
    }
}

/// Exceptional curves with (Δ·E) < 0.
pub fn negative_wall(cfg: &ValidatedConfig, dec: &ZariskiDecomposition) -> BTreeSet<String> {
    wall_labels(cfg, dec, |p| p.is_negative())
}

/// True iff m_R is an associated prime of R/I(nΔ) for all large n, which
/// happens exactly when the negative wall is nonempty.
pub fn mr_associated_eventually(cfg: &ValidatedConfig, dec: &ZariskiDecomposition) -> bool {
    !negative_wall(cfg, dec).is_empty()
}

/// Exceptional curves whose valuation can be dropped from the intersection
/// defining I(nΔ) for every n: exactly those with (Δ·E) = 0.
pub fn redundant_exceptional(
    cfg: &ValidatedConfig,
    dec: &ZariskiDecomposition,
) -> BTreeSet<String> {
    wall_labels(cfg, dec, Zero::is_zero)
}

/// Exceptional curves that can appear in the fixed component of −⌈nΔ⌉ for
/// infinitely many n: again the zero wall.
pub fn persistent_fixed_candidates(
    cfg: &ValidatedConfig,
    dec: &ZariskiDecomposition,
) -> BTreeSet<String> {
    wall_labels(cfg, dec, Zero::is_zero)
}

/// When the spread class is `ZeroOrOne`, the filtration of D is the
/// intersection of symbolic powers of the primes carried by the strict
/// transforms of D; returns their labels and coefficients. Absent when the
/// spread is `Two`.
pub fn symbolic_form(
    cfg: &ValidatedConfig,
    d: &QDivisor,
    dec: &ZariskiDecomposition,
) -> Option<Vec<(String, BigRational)>> {
    match spread_class(cfg, dec) {
        SpreadClass::Two => None,
        SpreadClass::ZeroOrOne => Some(
            (0..cfg.strict_transforms().len())
                .filter(|&f| d.st_coeff(f).is_positive())
                .map(|f| (cfg.st_label(f).to_string(), d.st_coeff(f).clone()))
                .collect(),
        ),
    }
}

/// Do two nested anti-nef effective divisors define the same section
/// filtration for infinitely many n? That happens exactly when the divisors
/// are equal.
pub fn filtrations_equal(
    cfg: &ValidatedConfig,
    d1: &QDivisor,
    d2: &QDivisor,
) -> Result<bool, ClassifyError> {
    if !d1.le(d2) {
        return Err(ClassifyError::PreconditionOrder);
    }
    for d in [d1, d2] {
        if !d.is_effective() || !cfg.is_anti_nef(d) {
            return Err(ClassifyError::PreconditionAntiNef);
        }
    }
    Ok(d1 == d2)
}

/// α = (−Δ·G) = Σ_j G_j · (−(Δ·E_j)), a nonnegative rational.
pub fn hilbert_slope(
    cfg: &ValidatedConfig,
    dec: &ZariskiDecomposition,
    g: &QDivisor,
    provenance: GProvenance,
) -> Result<HilbertSlope, ClassifyError> {
    if provenance == GProvenance::User {
        cycles::validate_user_g(cfg, g)?;
    }
    let mut alpha = BigRational::zero();
    for j in 0..cfg.rank() {
        let gj = g.exc_coeff(j);
        if !gj.is_zero() {
            alpha -= gj * cfg.pair(&dec.delta, j);
        }
    }
    debug_assert!(!alpha.is_negative());
    Ok(HilbertSlope {
        alpha,
        g_used: provenance,
    })
}

/// Euler characteristic of a degree-`deg` invertible sheaf on a curve of
/// arithmetic genus `p_a`: deg + 1 − p_a.
pub fn curve_chi(deg: i64, p_a: u64) -> i64 {
    deg + 1 - p_a as i64
}

/// Sufficient vanishing criterion for first cohomology on a curve:
/// deg > 2·p_a − 2. `false` means "not guaranteed", not "nonzero".
pub fn curve_h1_vanishes(deg: i64, p_a: u64) -> bool {
    deg > 2 * p_a as i64 - 2
}

/// Degree of a divisor Σ aᵢ·pᵢ on a curve, where each point contributes its
/// residue degree: Σ aᵢ·dᵢ.
pub fn curve_divisor_degree(points: &[(i64, u64)]) -> i64 {
    points.iter().map(|&(a, d)| a * d as i64).sum()
}

/// Run the whole pipeline for one divisor: decompose, classify, resolve G,
/// compute the slope.
pub fn classification_report(
    cfg: &ValidatedConfig,
    d: &QDivisor,
    g_source: &GSource,
) -> Result<ClassificationReport, ClassifyError> {
    let dec = zariski::zariski_decompose(cfg, d)?;
    let (g, provenance) = cycles::resolve_g(cfg, g_source)?;
    let hilbert = hilbert_slope(cfg, &dec, &g, provenance)?;
    let spread = spread_class(cfg, &dec);
    Ok(ClassificationReport {
        spread,
        mr_associated_eventually: mr_associated_eventually(cfg, &dec),
        redundant_exceptional: redundant_exceptional(cfg, &dec),
        negative_wall: negative_wall(cfg, &dec),
        persistent_fixed_candidates: persistent_fixed_candidates(cfg, &dec),
        symbolic_form: symbolic_form(cfg, d, &dec),
        hilbert,
        decomposition: dec,
    })
}
