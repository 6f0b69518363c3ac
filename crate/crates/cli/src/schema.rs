//! On-disk formats: the configuration file and exact rational strings.
//!
//! The schema is strict — unknown keys are rejected with the offending key
//! named, so a typo cannot silently describe a different singularity.
//! Rationals travel as reduced `"p/q"` (or plain integer) strings, never as
//! JSON numbers, so exactness survives every JSON implementation.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed};
use serde::{Deserialize, Serialize};

use antinef::lattice::{Edge, ExceptionalCurve, ResolutionConfig, StrictTransformCurve};
use antinef::{QDivisor, ValidatedConfig};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExceptionalEntry {
    pub name: String,
    pub self_intersection: i64,
    #[serde(default)]
    pub genus: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrictTransformEntry {
    pub name: String,
    #[serde(default)]
    pub meets: BTreeMap<String, u64>,
}

/// The input document: dual graph, divisor, and an optional user G.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub exceptional: Vec<ExceptionalEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<(String, String, u64)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub strict_transforms: Vec<StrictTransformEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub divisor: BTreeMap<String, String>,
    #[serde(rename = "G", default, skip_serializing_if = "Option::is_none")]
    pub g: Option<BTreeMap<String, i64>>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<ConfigFile, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    #[cfg_attr(not(test), allow(dead_code))]
    pub fn emit(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("schema types serialize");
        out.push('\n');
        out
    }

    pub fn to_resolution(&self) -> ResolutionConfig {
        ResolutionConfig {
            exceptional: self
                .exceptional
                .iter()
                .map(|e| ExceptionalCurve {
                    name: e.name.clone(),
                    self_int: e.self_intersection,
                    genus: e.genus,
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|(a, b, m)| Edge {
                    a: a.clone(),
                    b: b.clone(),
                    multiplicity: *m,
                })
                .collect(),
            strict_transforms: self
                .strict_transforms
                .iter()
                .map(|t| StrictTransformCurve {
                    name: t.name.clone(),
                    meets: t.meets.clone(),
                })
                .collect(),
        }
    }

    /// The divisor named in the file, parsed against a validated config.
    pub fn divisor(&self, cfg: &ValidatedConfig) -> Result<QDivisor, CliError> {
        let mut coeffs = BTreeMap::new();
        for (label, text) in &self.divisor {
            coeffs.insert(label.clone(), parse_rational(text)?);
        }
        Ok(cfg.divisor_from_map(&coeffs)?)
    }

    /// The user G embedded in the file, if any.
    pub fn embedded_g(&self, cfg: &ValidatedConfig) -> Result<Option<QDivisor>, CliError> {
        let Some(map) = &self.g else { return Ok(None) };
        Ok(Some(integer_divisor(cfg, map)?))
    }
}

/// Build a divisor from a name→integer map (used for G).
pub fn integer_divisor(
    cfg: &ValidatedConfig,
    map: &BTreeMap<String, i64>,
) -> Result<QDivisor, CliError> {
    let coeffs: BTreeMap<String, BigRational> = map
        .iter()
        .map(|(label, &v)| (label.clone(), BigRational::from(BigInt::from(v))))
        .collect();
    Ok(cfg.divisor_from_map(&coeffs)?)
}

/// Parse `"p/q"` or a plain integer string. The denominator must be
/// positive; the result is stored reduced.
pub fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    let bad = |why: &str| CliError::Parse(format!("invalid rational `{text}`: {why}"));
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer: BigInt = numer
        .parse()
        .map_err(|_| bad("numerator is not an integer"))?;
    let denom: BigInt = match denom {
        Some(d) => d
            .parse()
            .map_err(|_| bad("denominator is not an integer"))?,
        None => BigInt::one(),
    };
    if !denom.is_positive() {
        return Err(bad("denominator must be positive"));
    }
    Ok(BigRational::new(numer, denom))
}

/// Canonical form: reduced, `"p"` when integral, `"p/q"` with q > 1 otherwise.
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// A divisor as a name→rational-string map (nonzero coefficients only).
pub fn divisor_strings(cfg: &ValidatedConfig, d: &QDivisor) -> BTreeMap<String, String> {
    cfg.coeff_map(d)
        .into_iter()
        .map(|(label, c)| (label, format_rational(&c)))
        .collect()
}

/// An integral exceptional divisor as a name→integer map.
pub fn divisor_integers(
    cfg: &ValidatedConfig,
    d: &QDivisor,
) -> Result<BTreeMap<String, i64>, CliError> {
    cfg.coeff_map(d)
        .into_iter()
        .map(|(label, c)| {
            if !c.denom().is_one() {
                return Err(CliError::Internal(format!(
                    "expected an integral coefficient on `{label}`"
                )));
            }
            let v = i64::try_from(c.numer()).map_err(|_| {
                CliError::Internal(format!("coefficient on `{label}` does not fit in 64 bits"))
            })?;
            Ok((label, v))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trips() {
        for text in ["0", "3", "-3", "1/2", "-7/3", "22/7"] {
            let q = parse_rational(text).unwrap();
            assert_eq!(format_rational(&q), text);
        }
    }

    #[test]
    fn rational_is_reduced_on_output() {
        assert_eq!(format_rational(&parse_rational("2/4").unwrap()), "1/2");
        assert_eq!(format_rational(&parse_rational("-6/3").unwrap()), "-2");
    }

    #[test]
    fn rational_rejects_garbage() {
        for text in ["", "1/0", "1/-2", "a", "1/2/3", "1.5"] {
            assert!(parse_rational(text).is_err(), "{text} should not parse");
        }
    }

    #[test]
    fn unknown_keys_are_named() {
        let err = ConfigFile::parse(r#"{"exceptional": [], "selfint": 1}"#).unwrap_err();
        assert!(err.to_string().contains("selfint"), "{err}");
    }

    #[test]
    fn config_round_trips() {
        let text = r#"{
            "exceptional": [{"name": "E", "self_intersection": -3, "genus": 1}],
            "strict_transforms": [{"name": "F1", "meets": {"E": 1}}],
            "divisor": {"F1": "1/2"},
            "G": {"E": 2}
        }"#;
        let parsed = ConfigFile::parse(text).unwrap();
        let reparsed = ConfigFile::parse(&parsed.emit()).unwrap();
        assert_eq!(parsed, reparsed);
    }

    mod roundtrip {
        use super::super::*;
        use proptest::prelude::*;

        fn label() -> impl Strategy<Value = String> {
            "[A-Za-z][A-Za-z0-9_]{0,6}"
        }

        fn config_file() -> impl Strategy<Value = ConfigFile> {
            let exceptional = prop::collection::vec(
                (label(), -9i64..=-1, 0u64..=3).prop_map(|(name, s, g)| ExceptionalEntry {
                    name,
                    self_intersection: s,
                    genus: g,
                }),
                0..4,
            );
            let edges = prop::collection::vec((label(), label(), 0u64..=3), 0..4);
            let transforms = prop::collection::vec(
                (label(), prop::collection::btree_map(label(), 0u64..=3, 0..3))
                    .prop_map(|(name, meets)| StrictTransformEntry { name, meets }),
                0..3,
            );
            let divisor = prop::collection::btree_map(
                label(),
                (-24i64..=24, 1i64..=12).prop_map(|(n, d)| {
                    format_rational(&BigRational::new(BigInt::from(n), BigInt::from(d)))
                }),
                0..4,
            );
            let g = prop::option::of(prop::collection::btree_map(label(), -3i64..=3, 0..3));
            (exceptional, edges, transforms, divisor, g).prop_map(
                |(exceptional, edges, strict_transforms, divisor, g)| ConfigFile {
                    exceptional,
                    edges,
                    strict_transforms,
                    divisor,
                    g,
                },
            )
        }

        proptest! {
            // Syntactic round trip; the values need not describe a valid
            // configuration.
            #[test]
            fn parse_emit_is_identity(file in config_file()) {
                let reparsed = ConfigFile::parse(&file.emit()).unwrap();
                prop_assert_eq!(reparsed, file);
            }
        }
    }
}
