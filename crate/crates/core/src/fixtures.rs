//! Shared test configurations.

use std::collections::BTreeMap;

use crate::lattice::{
    validate_config, ExceptionalCurve, ResolutionConfig, StrictTransformCurve, ValidatedConfig,
};

/// One elliptic exceptional curve of self-intersection −3 met once by each
/// of three transversal curves.
pub(crate) fn ex1() -> ValidatedConfig {
    let cfg = ResolutionConfig {
        exceptional: vec![ExceptionalCurve {
            name: "E".into(),
            self_int: -3,
            genus: 1,
        }],
        edges: vec![],
        strict_transforms: ["F1", "F2", "F3"]
            .iter()
            .map(|n| StrictTransformCurve {
                name: n.to_string(),
                meets: BTreeMap::from([("E".to_string(), 1)]),
            })
            .collect(),
    };
    validate_config(cfg).unwrap()
}

/// Two (−2)-curves meeting once, with one transversal curve on E1.
pub(crate) fn a2_with_transversal() -> ValidatedConfig {
    let cfg = ResolutionConfig {
        exceptional: vec![
            ExceptionalCurve {
                name: "E1".into(),
                self_int: -2,
                genus: 0,
            },
            ExceptionalCurve {
                name: "E2".into(),
                self_int: -2,
                genus: 0,
            },
        ],
        edges: vec![crate::lattice::Edge {
            a: "E1".into(),
            b: "E2".into(),
            multiplicity: 1,
        }],
        strict_transforms: vec![StrictTransformCurve {
            name: "F".into(),
            meets: BTreeMap::from([("E1".to_string(), 1)]),
        }],
    };
    validate_config(cfg).unwrap()
}
