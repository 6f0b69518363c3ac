//! Fixture inputs shared by the criterion benchmarks.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;

use antinef::lattice::{Edge, ExceptionalCurve, ResolutionConfig, StrictTransformCurve};
use antinef::{ade, validate_config, QDivisor, ValidatedConfig};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// One elliptic (−3)-curve with three transversal curves; D = F1 + F2 + F3.
pub fn ex1() -> (ValidatedConfig, QDivisor) {
    let cfg = validate_config(ResolutionConfig {
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
    })
    .unwrap();
    let one = rat(1, 1);
    let d = cfg
        .divisor(&[("F1", one.clone()), ("F2", one.clone()), ("F3", one)])
        .unwrap();
    (cfg, d)
}

/// The E8 graph with one transversal curve on the long tail; D = F.
pub fn e8_with_transversal() -> (ValidatedConfig, QDivisor) {
    let mut raw = ade::e8();
    raw.strict_transforms.push(StrictTransformCurve {
        name: "F".into(),
        meets: BTreeMap::from([("E8".to_string(), 1)]),
    });
    let cfg = validate_config(raw).unwrap();
    let d = cfg.divisor(&[("F", rat(1, 1))]).unwrap();
    (cfg, d)
}

/// A dense rank-5 weighted graph with a rational divisor; every support
/// step of the active set is exercised.
pub fn dense5() -> (ValidatedConfig, QDivisor) {
    let names: Vec<String> = (1..=5).map(|i| format!("E{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..5usize {
        for j in i + 1..5 {
            if (i + j) % 2 == 0 || j == i + 1 {
                edges.push(Edge {
                    a: names[i].clone(),
                    b: names[j].clone(),
                    multiplicity: 1 + ((i * j) % 2) as u64,
                });
            }
        }
    }
    let mut degree = vec![0i64; 5];
    for e in &edges {
        let a = names.iter().position(|n| n == &e.a).unwrap();
        let b = names.iter().position(|n| n == &e.b).unwrap();
        degree[a] += e.multiplicity as i64;
        degree[b] += e.multiplicity as i64;
    }
    let cfg = validate_config(ResolutionConfig {
        exceptional: (0..5)
            .map(|i| ExceptionalCurve {
                name: names[i].clone(),
                self_int: -(degree[i] + 1 + i as i64 % 2),
                genus: 0,
            })
            .collect(),
        edges,
        strict_transforms: vec![StrictTransformCurve {
            name: "F".into(),
            meets: BTreeMap::from([("E1".to_string(), 2), ("E4".to_string(), 1)]),
        }],
    })
    .unwrap();
    let d = cfg
        .divisor(&[("F", rat(7, 3)), ("E2", rat(5, 12))])
        .unwrap();
    (cfg, d)
}

pub fn e8_raw() -> ResolutionConfig {
    ade::e8()
}
