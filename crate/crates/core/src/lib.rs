//! Exact intersection-theoretic computations on resolutions of
//! two-dimensional normal singularities.
//!
//! The input is the weighted dual graph of a resolution — exceptional curves
//! with self-intersections and genera, their pairwise intersection numbers,
//! and strict-transform curves with their meeting numbers — together with an
//! effective ℚ-divisor. From that data the crate computes, over exact
//! arbitrary-precision rationals:
//!
//! * the Zariski decomposition Δ = D + B, certified by complementary
//!   slackness and cross-checkable against a brute-force enumeration oracle
//!   ([`zariski`]);
//! * the fundamental cycle of the configuration ([`cycles`]);
//! * the analytic-spread classification of the divisorial filtration of D,
//!   its redundant valuations, its symbolic form when the spread is small,
//!   and the slope of the Hilbert function of its fiber cone ([`classify`]).
//!
//! ```
//! use antinef::{validate_config, zariski_decompose};
//! use antinef::lattice::{ExceptionalCurve, ResolutionConfig, StrictTransformCurve};
//! use num::BigRational;
//! use num::traits::One;
//!
//! // One elliptic (−3)-curve met once by each of three transversal curves.
//! let cfg = validate_config(ResolutionConfig {
//!     exceptional: vec![ExceptionalCurve { name: "E".into(), self_int: -3, genus: 1 }],
//!     edges: vec![],
//!     strict_transforms: ["F1", "F2", "F3"]
//!         .map(|name| StrictTransformCurve {
//!             name: name.into(),
//!             meets: [("E".to_string(), 1)].into(),
//!         })
//!         .into(),
//! })
//! .unwrap();
//!
//! let one = BigRational::one();
//! let d = cfg.divisor(&[("F1", one.clone()), ("F2", one.clone()), ("F3", one.clone())]).unwrap();
//! let z = zariski_decompose(&cfg, &d).unwrap();
//! assert_eq!(z.b, cfg.divisor(&[("E", one)]).unwrap());
//! ```

pub mod ade;
pub mod classify;
pub mod cycles;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod lattice;
pub mod linalg;
pub mod zariski;

pub use classify::{
    classification_report, ClassificationReport, ClassifyError, HilbertSlope, SpreadClass,
};
pub use cycles::{
    fundamental_cycle, resolve_g, CycleError, FundamentalCycle, GProvenance, GSource,
};
pub use lattice::{
    validate_config, Edge, ExceptionalCurve, IntersectionForm, LatticeError, QDivisor,
    ResolutionConfig, StrictTransformCurve, ValidatedConfig,
};
pub use zariski::{
    oracle_decompose, zariski_decompose, DecompositionCertificate, ZariskiDecomposition,
    ZariskiError,
};
