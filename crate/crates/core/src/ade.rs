//! Standard negative definite configurations of (−2)-curves.
//!
//! Chains and the D/E stars, labeled `E1`, `E2`, … with the usual numbering:
//! for the stars, the branch node `E2` is attached to `E4` and the remaining
//! curves form the chain `E1`-`E3`-`E4`-…-`En`.

use crate::lattice::{Edge, ExceptionalCurve, ResolutionConfig};

fn two_curve(name: String) -> ExceptionalCurve {
    ExceptionalCurve {
        name,
        self_int: -2,
        genus: 0,
    }
}

fn edge(a: usize, b: usize) -> Edge {
    Edge {
        a: format!("E{a}"),
        b: format!("E{b}"),
        multiplicity: 1,
    }
}

/// A chain of n (−2)-curves, `E1`-`E2`-…-`En`.
pub fn a_chain(n: usize) -> ResolutionConfig {
    assert!(n >= 1);
    ResolutionConfig {
        exceptional: (1..=n).map(|i| two_curve(format!("E{i}"))).collect(),
        edges: (1..n).map(|i| edge(i, i + 1)).collect(),
        strict_transforms: vec![],
    }
}

/// Three curves attached to a central one.
pub fn d4() -> ResolutionConfig {
    ResolutionConfig {
        exceptional: (1..=4).map(|i| two_curve(format!("E{i}"))).collect(),
        edges: vec![edge(1, 2), edge(3, 2), edge(4, 2)],
        strict_transforms: vec![],
    }
}

fn e_star(n: usize) -> ResolutionConfig {
    debug_assert!((6..=8).contains(&n));
    let mut edges = vec![edge(1, 3), edge(2, 4), edge(3, 4)];
    edges.extend((4..n).map(|i| edge(i, i + 1)));
    ResolutionConfig {
        exceptional: (1..=n).map(|i| two_curve(format!("E{i}"))).collect(),
        edges,
        strict_transforms: vec![],
    }
}

pub fn e6() -> ResolutionConfig {
    e_star(6)
}

pub fn e7() -> ResolutionConfig {
    e_star(7)
}

pub fn e8() -> ResolutionConfig {
    e_star(8)
}
