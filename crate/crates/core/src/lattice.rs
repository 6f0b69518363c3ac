//! Resolution configurations, ℚ-divisors and the intersection pairing.
//!
//! A [`ResolutionConfig`] is the weighted dual graph of a resolution of a
//! two-dimensional normal singularity: exceptional curves with their
//! self-intersections and genera, pairwise intersection numbers, and
//! strict-transform curves recorded by how often they meet each exceptional
//! curve. [`validate_config`] checks the structural invariants — unique
//! labels, negative self-intersections, a connected dual graph, and a
//! negative definite intersection matrix certified by the signs of its
//! leading principal minors — and only a [`ValidatedConfig`] can be fed to
//! the rest of the crate.
//!
//! All coefficients are exact rationals; there is no floating point anywhere.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::linalg;

/// Whether a prime divisor is contracted by the resolution or not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DivisorKind {
    Exceptional,
    StrictTransform,
}

/// Identity of a prime divisor. Labels are unique within a configuration
/// across both kinds, so the label alone determines the divisor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeDivisorId {
    pub label: String,
    pub kind: DivisorKind,
}

/// An exceptional curve: a vertex of the dual graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalCurve {
    pub name: String,
    /// Self-intersection number (E·E). Must be negative.
    pub self_int: i64,
    /// Arithmetic genus p_a(E). Carried for the curve Riemann-Roch helpers.
    pub genus: u64,
}

/// A non-exceptional prime divisor through the singular point, recorded by
/// its meeting numbers (F·E) with the exceptional curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictTransformCurve {
    pub name: String,
    pub meets: BTreeMap<String, u64>,
}

/// An undirected edge of the dual graph: (E_a · E_b) = `multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub a: String,
    pub b: String,
    pub multiplicity: u64,
}

/// The weighted dual graph as supplied by the user, before validation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ResolutionConfig {
    pub exceptional: Vec<ExceptionalCurve>,
    pub edges: Vec<Edge>,
    pub strict_transforms: Vec<StrictTransformCurve>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("DuplicateLabel: `{0}`")]
    DuplicateLabel(String),
    #[error("empty label")]
    EmptyLabel,
    #[error("configuration has no exceptional curves")]
    NoExceptionalCurves,
    #[error("NonNegativeSelfIntersection: {label} has (E·E) = {self_int}")]
    NonNegativeSelfIntersection { label: String, self_int: i64 },
    #[error("edge `{a}`-`{b}`: {reason}")]
    BadEdge {
        a: String,
        b: String,
        reason: &'static str,
    },
    #[error("`{curve}` meets unknown exceptional curve `{label}`")]
    UnknownMeet { curve: String, label: String },
    #[error("strict transform `{0}` meets no exceptional curve; a curve through the singular point must meet the exceptional fiber")]
    IsolatedStrictTransform(String),
    #[error(
        "NotNegativeDefinite: leading principal minor of order {order} has the wrong sign"
    )]
    NotNegativeDefinite { order: usize },
    #[error("DisconnectedGraph: `{witness}` is not connected to `{root}`")]
    DisconnectedGraph { root: String, witness: String },
    #[error("unknown prime divisor `{0}`")]
    UnknownId(String),
    #[error("`{0}` is a strict transform; the pairing is defined against exceptional curves only")]
    PairAgainstStrictTransform(String),
}

/// The intersection matrix ((E_i·E_j)) together with its negative
/// definiteness certificate: the leading principal minor of order k must
/// have sign (−1)^k for every 1 ≤ k ≤ r.
#[derive(Clone, Debug)]
pub struct IntersectionForm {
    matrix_int: Vec<Vec<BigInt>>,
    matrix: Vec<Vec<BigRational>>,
    minors: Vec<BigInt>,
}

impl IntersectionForm {
    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    /// Entry (E_i·E_j) as an exact rational.
    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.matrix[i][j]
    }

    /// Entry (E_i·E_j) as an integer.
    pub fn entry_int(&self, i: usize, j: usize) -> &BigInt {
        &self.matrix_int[i][j]
    }

    /// Leading principal minors, orders 1..=r.
    pub fn minors(&self) -> &[BigInt] {
        &self.minors
    }

    /// Signs of the leading principal minors; alternates -,+,-,… on a
    /// validated configuration.
    pub fn minor_signs(&self) -> Vec<i8> {
        self.minors.iter().map(linalg::sign).collect()
    }

    /// x^T M y over exact rationals.
    pub fn evaluate(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                acc += xi * yj * &self.matrix[i][j];
            }
        }
        acc
    }
}

/// A configuration whose invariants have all been checked. Immutable; every
/// operation on it is a pure function, so values can be shared freely across
/// threads.
#[derive(Clone, Debug)]
pub struct ValidatedConfig {
    cfg: ResolutionConfig,
    form: IntersectionForm,
    exc_index: BTreeMap<String, usize>,
    st_index: BTreeMap<String, usize>,
    /// meets[f][j] = (F_f · E_j)
    meets: Vec<Vec<u64>>,
}

/// A finitely supported map from prime divisors to exact rationals, stored
/// densely in the curve order of its ambient configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDivisor {
    exc: Vec<BigRational>,
    st: Vec<BigRational>,
}

impl QDivisor {
    pub fn exc_coeff(&self, i: usize) -> &BigRational {
        &self.exc[i]
    }

    pub fn st_coeff(&self, f: usize) -> &BigRational {
        &self.st[f]
    }

    pub fn is_zero(&self) -> bool {
        self.exc.iter().all(Zero::is_zero) && self.st.iter().all(Zero::is_zero)
    }

    /// True iff every coefficient is ≥ 0.
    pub fn is_effective(&self) -> bool {
        self.exc.iter().chain(self.st.iter()).all(|c| !c.is_negative())
    }

    /// True iff the support contains no strict transform.
    pub fn is_exceptional(&self) -> bool {
        self.st.iter().all(Zero::is_zero)
    }

    /// True iff every coefficient has denominator one.
    pub fn is_integral(&self) -> bool {
        self.exc
            .iter()
            .chain(self.st.iter())
            .all(|c| c.denom().is_one())
    }

    /// Componentwise order: self ≤ other.
    pub fn le(&self, other: &QDivisor) -> bool {
        debug_assert_eq!(self.exc.len(), other.exc.len());
        debug_assert_eq!(self.st.len(), other.st.len());
        self.exc.iter().zip(&other.exc).all(|(a, b)| a <= b)
            && self.st.iter().zip(&other.st).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &QDivisor) -> QDivisor {
        QDivisor {
            exc: self.exc.iter().zip(&other.exc).map(|(a, b)| a + b).collect(),
            st: self.st.iter().zip(&other.st).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &QDivisor) -> QDivisor {
        QDivisor {
            exc: self.exc.iter().zip(&other.exc).map(|(a, b)| a - b).collect(),
            st: self.st.iter().zip(&other.st).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> QDivisor {
        QDivisor {
            exc: self.exc.iter().map(|a| a * c).collect(),
            st: self.st.iter().map(|a| a * c).collect(),
        }
    }

    /// Componentwise minimum.
    pub fn pointwise_min(&self, other: &QDivisor) -> QDivisor {
        let min = |a: &BigRational, b: &BigRational| if a <= b { a.clone() } else { b.clone() };
        QDivisor {
            exc: self.exc.iter().zip(&other.exc).map(|(a, b)| min(a, b)).collect(),
            st: self.st.iter().zip(&other.st).map(|(a, b)| min(a, b)).collect(),
        }
    }

    pub(crate) fn exc_coeffs(&self) -> &[BigRational] {
        &self.exc
    }
}

/// Check every `ResolutionConfig` invariant and return the validated wrapper
/// with the negative definiteness certificate attached.
pub fn validate_config(cfg: ResolutionConfig) -> Result<ValidatedConfig, LatticeError> {
    if cfg.exceptional.is_empty() {
        return Err(LatticeError::NoExceptionalCurves);
    }

    let mut exc_index = BTreeMap::new();
    let mut st_index = BTreeMap::new();
    for (i, e) in cfg.exceptional.iter().enumerate() {
        if e.name.is_empty() {
            return Err(LatticeError::EmptyLabel);
        }
        if exc_index.insert(e.name.clone(), i).is_some() {
            return Err(LatticeError::DuplicateLabel(e.name.clone()));
        }
    }
    for (f, t) in cfg.strict_transforms.iter().enumerate() {
        if t.name.is_empty() {
            return Err(LatticeError::EmptyLabel);
        }
        if exc_index.contains_key(&t.name) || st_index.insert(t.name.clone(), f).is_some() {
            return Err(LatticeError::DuplicateLabel(t.name.clone()));
        }
    }

    for e in &cfg.exceptional {
        if e.self_int >= 0 {
            return Err(LatticeError::NonNegativeSelfIntersection {
                label: e.name.clone(),
                self_int: e.self_int,
            });
        }
    }

    let r = cfg.exceptional.len();
    let mut matrix_int = vec![vec![BigInt::zero(); r]; r];
    for (i, e) in cfg.exceptional.iter().enumerate() {
        matrix_int[i][i] = BigInt::from(e.self_int);
    }
    let mut seen_pairs = std::collections::BTreeSet::new();
    for edge in &cfg.edges {
        let bad = |reason| LatticeError::BadEdge {
            a: edge.a.clone(),
            b: edge.b.clone(),
            reason,
        };
        let i = *exc_index
            .get(&edge.a)
            .ok_or_else(|| bad("endpoint is not an exceptional curve"))?;
        let j = *exc_index
            .get(&edge.b)
            .ok_or_else(|| bad("endpoint is not an exceptional curve"))?;
        if i == j {
            return Err(bad("a curve cannot be joined to itself"));
        }
        if !seen_pairs.insert((i.min(j), i.max(j))) {
            return Err(bad("duplicate edge"));
        }
        matrix_int[i][j] = BigInt::from(edge.multiplicity);
        matrix_int[j][i] = BigInt::from(edge.multiplicity);
    }

    let mut meets = vec![vec![0u64; r]; cfg.strict_transforms.len()];
    for (f, t) in cfg.strict_transforms.iter().enumerate() {
        for (label, &mult) in &t.meets {
            let j = *exc_index.get(label).ok_or_else(|| LatticeError::UnknownMeet {
                curve: t.name.clone(),
                label: label.clone(),
            })?;
            meets[f][j] = mult;
        }
        if meets[f].iter().all(|&m| m == 0) {
            return Err(LatticeError::IsolatedStrictTransform(t.name.clone()));
        }
    }

    // Connectedness of the dual graph on exceptional curves.
    let mut reached = vec![false; r];
    let mut stack = vec![0usize];
    reached[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..r {
            if j != i && !reached[j] && !matrix_int[i][j].is_zero() {
                reached[j] = true;
                stack.push(j);
            }
        }
    }
    if let Some(w) = reached.iter().position(|&ok| !ok) {
        return Err(LatticeError::DisconnectedGraph {
            root: cfg.exceptional[0].name.clone(),
            witness: cfg.exceptional[w].name.clone(),
        });
    }

    // Negative definiteness: the order-k leading principal minor must have
    // sign (−1)^k.
    let minors = linalg::leading_principal_minors(&matrix_int);
    for (k, minor) in minors.iter().enumerate() {
        let expected = if (k + 1) % 2 == 0 { 1 } else { -1 };
        if linalg::sign(minor) != expected {
            return Err(LatticeError::NotNegativeDefinite { order: k + 1 });
        }
    }

    let matrix = matrix_int
        .iter()
        .map(|row| row.iter().map(|v| BigRational::from(v.clone())).collect())
        .collect();
    Ok(ValidatedConfig {
        cfg,
        form: IntersectionForm {
            matrix_int,
            matrix,
            minors,
        },
        exc_index,
        st_index,
        meets,
    })
}

impl ValidatedConfig {
    /// Number of exceptional curves.
    pub fn rank(&self) -> usize {
        self.cfg.exceptional.len()
    }

    pub fn exceptional(&self) -> &[ExceptionalCurve] {
        &self.cfg.exceptional
    }

    pub fn strict_transforms(&self) -> &[StrictTransformCurve] {
        &self.cfg.strict_transforms
    }

    pub fn config(&self) -> &ResolutionConfig {
        &self.cfg
    }

    pub fn form(&self) -> &IntersectionForm {
        &self.form
    }

    pub fn exc_label(&self, i: usize) -> &str {
        &self.cfg.exceptional[i].name
    }

    pub fn st_label(&self, f: usize) -> &str {
        &self.cfg.strict_transforms[f].name
    }

    pub fn exc_index(&self, label: &str) -> Option<usize> {
        self.exc_index.get(label).copied()
    }

    pub fn st_index(&self, label: &str) -> Option<usize> {
        self.st_index.get(label).copied()
    }

    /// (F_f · E_j) for a strict transform index f.
    pub fn meet(&self, f: usize, j: usize) -> u64 {
        self.meets[f][j]
    }

    /// All prime divisor identities, exceptional curves first, in
    /// configuration order.
    pub fn primes(&self) -> Vec<PrimeDivisorId> {
        let exc = self.cfg.exceptional.iter().map(|e| PrimeDivisorId {
            label: e.name.clone(),
            kind: DivisorKind::Exceptional,
        });
        let st = self.cfg.strict_transforms.iter().map(|t| PrimeDivisorId {
            label: t.name.clone(),
            kind: DivisorKind::StrictTransform,
        });
        exc.chain(st).collect()
    }

    pub fn zero_divisor(&self) -> QDivisor {
        QDivisor {
            exc: vec![BigRational::zero(); self.rank()],
            st: vec![BigRational::zero(); self.cfg.strict_transforms.len()],
        }
    }

    /// Build a divisor from labeled coefficients; repeated labels accumulate.
    pub fn divisor(&self, coeffs: &[(&str, BigRational)]) -> Result<QDivisor, LatticeError> {
        let mut d = self.zero_divisor();
        for (label, c) in coeffs {
            if let Some(i) = self.exc_index(label) {
                d.exc[i] += c;
            } else if let Some(f) = self.st_index(label) {
                d.st[f] += c;
            } else {
                return Err(LatticeError::UnknownId(label.to_string()));
            }
        }
        Ok(d)
    }

    pub fn divisor_from_map(
        &self,
        coeffs: &BTreeMap<String, BigRational>,
    ) -> Result<QDivisor, LatticeError> {
        let pairs: Vec<(&str, BigRational)> = coeffs
            .iter()
            .map(|(label, c)| (label.as_str(), c.clone()))
            .collect();
        self.divisor(&pairs)
    }

    /// The cycle Σ coeffs[i]·E_i. Panics if `coeffs` has the wrong length.
    pub fn exceptional_cycle(&self, coeffs: Vec<BigRational>) -> QDivisor {
        assert_eq!(coeffs.len(), self.rank());
        QDivisor {
            exc: coeffs,
            st: vec![BigRational::zero(); self.cfg.strict_transforms.len()],
        }
    }

    /// The nonzero coefficients of a divisor, keyed by label.
    pub fn coeff_map(&self, d: &QDivisor) -> BTreeMap<String, BigRational> {
        let mut out = BTreeMap::new();
        for (i, c) in d.exc.iter().enumerate() {
            if !c.is_zero() {
                out.insert(self.exc_label(i).to_string(), c.clone());
            }
        }
        for (f, c) in d.st.iter().enumerate() {
            if !c.is_zero() {
                out.insert(self.st_label(f).to_string(), c.clone());
            }
        }
        out
    }

    /// The intersection number (D·E_j) of a divisor with the j-th
    /// exceptional curve. Bilinear in `d`.
    pub fn pair(&self, d: &QDivisor, j: usize) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, c) in d.exc.iter().enumerate() {
            if !c.is_zero() {
                acc += c * self.form.entry(i, j);
            }
        }
        for (f, c) in d.st.iter().enumerate() {
            if !c.is_zero() && self.meets[f][j] != 0 {
                acc += c * BigRational::from(BigInt::from(self.meets[f][j]));
            }
        }
        acc
    }

    /// Label-addressed variant of [`pair`](Self::pair). Pairing against a
    /// strict transform is undefined in this intersection theory and is
    /// rejected.
    pub fn pair_by_label(&self, d: &QDivisor, label: &str) -> Result<BigRational, LatticeError> {
        if let Some(j) = self.exc_index(label) {
            Ok(self.pair(d, j))
        } else if self.st_index(label).is_some() {
            Err(LatticeError::PairAgainstStrictTransform(label.to_string()))
        } else {
            Err(LatticeError::UnknownId(label.to_string()))
        }
    }

    /// (D·E_j) ≤ 0 for every exceptional curve E_j.
    pub fn is_anti_nef(&self, d: &QDivisor) -> bool {
        (0..self.rank()).all(|j| !self.pair(d, j).is_positive())
    }

    /// (D·E_j) < 0 for every exceptional curve E_j, i.e. −D is ample.
    pub fn is_anti_ample(&self, d: &QDivisor) -> bool {
        (0..self.rank()).all(|j| self.pair(d, j).is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn curve(name: &str, self_int: i64) -> ExceptionalCurve {
        ExceptionalCurve {
            name: name.to_string(),
            self_int,
            genus: 0,
        }
    }

    fn edge(a: &str, b: &str, m: u64) -> Edge {
        Edge {
            a: a.to_string(),
            b: b.to_string(),
            multiplicity: m,
        }
    }

    use crate::fixtures::{a2_with_transversal, ex1};

    #[test]
    fn validates_single_curve() {
        let cfg = ResolutionConfig {
            exceptional: vec![curve("E", -2)],
            ..Default::default()
        };
        let v = validate_config(cfg).unwrap();
        assert_eq!(v.form().minors(), &[BigInt::from(-2)]);
        assert_eq!(v.form().minor_signs(), vec![-1]);
    }

    #[test]
    fn validates_a2_chain() {
        let cfg = ResolutionConfig {
            exceptional: vec![curve("E1", -2), curve("E2", -2)],
            edges: vec![edge("E1", "E2", 1)],
            ..Default::default()
        };
        let v = validate_config(cfg).unwrap();
        assert_eq!(v.form().minors(), &[BigInt::from(-2), BigInt::from(3)]);
    }

    #[test]
    fn rejects_degenerate_form() {
        // det [[-2, 2], [2, -2]] = 0: the order-2 minor vanishes.
        let cfg = ResolutionConfig {
            exceptional: vec![curve("E1", -2), curve("E2", -2)],
            edges: vec![edge("E1", "E2", 2)],
            ..Default::default()
        };
        assert_eq!(
            validate_config(cfg).unwrap_err(),
            LatticeError::NotNegativeDefinite { order: 2 }
        );
    }

    #[test]
    fn rejects_nonnegative_self_intersection() {
        let cfg = ResolutionConfig {
            exceptional: vec![curve("E1", 0)],
            ..Default::default()
        };
        assert_eq!(
            validate_config(cfg).unwrap_err(),
            LatticeError::NonNegativeSelfIntersection {
                label: "E1".into(),
                self_int: 0
            }
        );
    }

    #[test]
    fn rejects_disconnected_graph() {
        let cfg = ResolutionConfig {
            exceptional: vec![curve("E1", -2), curve("E2", -2)],
            ..Default::default()
        };
        assert_eq!(
            validate_config(cfg).unwrap_err(),
            LatticeError::DisconnectedGraph {
                root: "E1".into(),
                witness: "E2".into()
            }
        );
    }

    #[test]
    fn rejects_duplicate_labels() {
        let cfg = ResolutionConfig {
            exceptional: vec![curve("E", -2)],
            strict_transforms: vec![StrictTransformCurve {
                name: "E".into(),
                meets: BTreeMap::new(),
            }],
            ..Default::default()
        };
        assert_eq!(
            validate_config(cfg).unwrap_err(),
            LatticeError::DuplicateLabel("E".into())
        );
    }

    #[test]
    fn rejects_isolated_strict_transform() {
        let cfg = ResolutionConfig {
            exceptional: vec![curve("E", -2)],
            strict_transforms: vec![StrictTransformCurve {
                name: "F".into(),
                meets: BTreeMap::new(),
            }],
            ..Default::default()
        };
        assert_eq!(
            validate_config(cfg).unwrap_err(),
            LatticeError::IsolatedStrictTransform("F".into())
        );
    }

    #[test]
    fn rejects_empty_config() {
        assert_eq!(
            validate_config(ResolutionConfig::default()).unwrap_err(),
            LatticeError::NoExceptionalCurves
        );
    }

    #[test]
    fn pairing_on_ex1() {
        let v = ex1();
        let d = v
            .divisor(&[("F1", rat(1, 1)), ("F2", rat(1, 1)), ("F3", rat(1, 1))])
            .unwrap();
        assert_eq!(v.pair_by_label(&d, "E").unwrap(), rat(3, 1));

        let zero = v.zero_divisor();
        assert_eq!(v.pair_by_label(&zero, "E").unwrap(), rat(0, 1));

        let with_e = d.add(&v.divisor(&[("E", rat(1, 1))]).unwrap());
        assert_eq!(v.pair_by_label(&with_e, "E").unwrap(), rat(0, 1));
    }

    #[test]
    fn pairing_rejects_bad_targets() {
        let v = ex1();
        let d = v.zero_divisor();
        assert_eq!(
            v.pair_by_label(&d, "F1"),
            Err(LatticeError::PairAgainstStrictTransform("F1".into()))
        );
        assert_eq!(
            v.pair_by_label(&d, "nope"),
            Err(LatticeError::UnknownId("nope".into()))
        );
    }

    #[test]
    fn anti_nef_examples() {
        let single = validate_config(ResolutionConfig {
            exceptional: vec![curve("E", -2)],
            ..Default::default()
        })
        .unwrap();
        let e = single.divisor(&[("E", rat(1, 1))]).unwrap();
        assert!(single.is_anti_nef(&e));

        let v = ex1();
        let d = v
            .divisor(&[("F1", rat(1, 1)), ("F2", rat(1, 1)), ("F3", rat(1, 1))])
            .unwrap();
        assert!(!v.is_anti_nef(&d));
        let delta = d.add(&v.divisor(&[("E", rat(1, 1))]).unwrap());
        assert!(v.is_anti_nef(&delta));
    }

    #[test]
    fn anti_ample_examples() {
        let single = validate_config(ResolutionConfig {
            exceptional: vec![curve("E", -2)],
            ..Default::default()
        })
        .unwrap();
        let e = single.divisor(&[("E", rat(1, 1))]).unwrap();
        assert!(single.is_anti_ample(&e));

        let v = ex1();
        let d = v
            .divisor(&[
                ("F1", rat(1, 1)),
                ("F2", rat(1, 1)),
                ("F3", rat(1, 1)),
                ("E", rat(1, 1)),
            ])
            .unwrap();
        assert!(!v.is_anti_ample(&d)); // pairing is exactly 0

        let a2 = a2_with_transversal();
        let e1 = a2.divisor(&[("E1", rat(1, 1))]).unwrap();
        assert!(!a2.is_anti_ample(&e1)); // (E1·E2) = 1 > 0
    }

    #[test]
    fn divisor_rejects_unknown_label() {
        let v = ex1();
        assert_eq!(
            v.divisor(&[("X", rat(1, 1))]),
            Err(LatticeError::UnknownId("X".into()))
        );
    }

    #[test]
    fn coeff_map_roundtrip() {
        let v = a2_with_transversal();
        let d = v
            .divisor(&[("F", rat(1, 2)), ("E2", rat(-3, 7))])
            .unwrap();
        let map = v.coeff_map(&d);
        assert_eq!(v.divisor_from_map(&map).unwrap(), d);
    }
}
