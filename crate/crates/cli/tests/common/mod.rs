//! Shared machinery for the CLI test suites: a seeded random corpus of
//! validated configurations, an integer grid oracle for minimal anti-nef
//! cycles, and helpers for driving the compiled binary.
//!
//! Not every suite uses every helper.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, Output};

use num::bigint::BigInt;
use num::rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use antinef::lattice::{Edge, ExceptionalCurve, ResolutionConfig, StrictTransformCurve};
use antinef::{validate_config, QDivisor, ValidatedConfig};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random connected weighted graph on 1..=5 vertices whose diagonal is
/// −(weighted degree + slack), hence strictly diagonally dominant and
/// negative definite. `validate_config` re-checks the minor certificate.
pub fn random_config(rng: &mut ChaCha8Rng) -> ValidatedConfig {
    let r: usize = rng.gen_range(1..=5);
    let mut mult = vec![vec![0u64; r]; r];
    for i in 1..r {
        let parent = rng.gen_range(0..i);
        mult[i][parent] = rng.gen_range(1..=2);
        mult[parent][i] = mult[i][parent];
    }
    if r >= 2 {
        for _ in 0..rng.gen_range(0..=2) {
            let a = rng.gen_range(0..r);
            let b = rng.gen_range(0..r);
            if a != b && mult[a][b] == 0 {
                let m = rng.gen_range(1..=2);
                mult[a][b] = m;
                mult[b][a] = m;
            }
        }
    }

    let exceptional = (0..r)
        .map(|i| {
            let degree: u64 = mult[i].iter().sum();
            ExceptionalCurve {
                name: format!("E{}", i + 1),
                self_int: -(degree as i64 + rng.gen_range(1..=3)),
                genus: rng.gen_range(0..=2),
            }
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            if mult[i][j] > 0 {
                edges.push(Edge {
                    a: format!("E{}", i + 1),
                    b: format!("E{}", j + 1),
                    multiplicity: mult[i][j],
                });
            }
        }
    }
    let strict_transforms = (0..rng.gen_range(0..=2))
        .map(|f| {
            let mut meets = BTreeMap::new();
            for _ in 0..rng.gen_range(1..=2) {
                let j = rng.gen_range(0..r);
                *meets.entry(format!("E{}", j + 1)).or_insert(0) += rng.gen_range(1..=2);
            }
            StrictTransformCurve {
                name: format!("F{}", f + 1),
                meets,
            }
        })
        .collect();

    validate_config(ResolutionConfig {
        exceptional,
        edges,
        strict_transforms,
    })
    .expect("diagonally dominant configurations validate")
}

/// Random effective divisor with numerators ≤ 24 and denominators ≤ 12.
pub fn random_effective_divisor(rng: &mut ChaCha8Rng, cfg: &ValidatedConfig) -> QDivisor {
    let mut d = cfg.zero_divisor();
    let labels: Vec<String> = cfg.primes().into_iter().map(|p| p.label).collect();
    for label in &labels {
        if rng.gen_bool(0.7) {
            let c = rat(rng.gen_range(0..=24), rng.gen_range(1..=12));
            d = d.add(&cfg.divisor(&[(label.as_str(), c)]).unwrap());
        }
    }
    d
}

/// Random effective exceptional increment with small coefficients.
pub fn random_exceptional_increment(rng: &mut ChaCha8Rng, cfg: &ValidatedConfig) -> QDivisor {
    let coeffs = (0..cfg.rank())
        .map(|_| rat(rng.gen_range(0..=12), rng.gen_range(1..=12)))
        .collect();
    cfg.exceptional_cycle(coeffs)
}

/// Enumerate every nonzero effective integral anti-nef cycle with
/// coefficients in 0..=box_max and return the componentwise minimum of the
/// feasible set, asserting that the minimum is itself feasible (so the set
/// has a unique minimal element).
pub fn grid_minimal_cycle(cfg: &ValidatedConfig, box_max: i64) -> QDivisor {
    let r = cfg.rank();
    let m: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| i64::try_from(cfg.form().entry_int(i, j)).expect("small test matrices"))
                .collect()
        })
        .collect();
    let mut z = vec![0i64; r];
    let mut pairings = vec![0i64; r];
    let mut min: Option<Vec<i64>> = None;
    'outer: loop {
        let mut k = 0;
        loop {
            if k == r {
                break 'outer;
            }
            if z[k] < box_max {
                z[k] += 1;
                for j in 0..r {
                    pairings[j] += m[k][j];
                }
                break;
            }
            for j in 0..r {
                pairings[j] -= z[k] * m[k][j];
            }
            z[k] = 0;
            k += 1;
        }
        if pairings.iter().all(|&p| p <= 0) {
            min = Some(match min {
                None => z.clone(),
                Some(prev) => prev.iter().zip(&z).map(|(&a, &b)| a.min(b)).collect(),
            });
        }
    }
    let min = min.expect("no feasible cycle within the box");
    let min_feasible =
        (0..r).all(|j| (0..r).map(|i| min[i] * m[i][j]).sum::<i64>() <= 0);
    assert!(min_feasible, "feasible set has no unique minimal element");
    cfg.exceptional_cycle(min.iter().map(|&c| rat(c, 1)).collect())
}

pub fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_antinef")
}

pub fn run_cli(args: &[&str], cwd: &Path) -> Output {
    Command::new(binary())
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

pub const EX1_JSON: &str = r#"{
  "exceptional": [{"name": "E", "self_intersection": -3, "genus": 1}],
  "strict_transforms": [
    {"name": "F1", "meets": {"E": 1}},
    {"name": "F2", "meets": {"E": 1}},
    {"name": "F3", "meets": {"E": 1}}
  ],
  "divisor": {"F1": "1", "F2": "1", "F3": "1"}
}
"#;

pub const A2_JSON: &str = r#"{
  "exceptional": [
    {"name": "E1", "self_intersection": -2},
    {"name": "E2", "self_intersection": -2}
  ],
  "edges": [["E1", "E2", 1]],
  "strict_transforms": [{"name": "F", "meets": {"E1": 1}}],
  "divisor": {"F": "1"}
}
"#;
