//! Exact linear algebra over arbitrary-precision integers and rationals.
//!
//! Everything in this module is deterministic and division-safe: minors are
//! computed by fraction-free (Bareiss) elimination over `BigInt`, and linear
//! systems are solved by Gaussian elimination over `BigRational`, where every
//! intermediate value is an exact rational.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// Determinant of a square integer matrix by fraction-free elimination with
/// row pivoting. Every division performed is exact over the integers.
pub fn det_int(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Leading principal minors `det(a[..k][..k])` for `k = 1..=n`.
pub fn leading_principal_minors(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    (1..=a.len())
        .map(|k| {
            let sub: Vec<Vec<BigInt>> = a[..k].iter().map(|row| row[..k].to_vec()).collect();
            det_int(sub)
        })
        .collect()
}

/// Solve `a x = b` exactly over the rationals. Returns `None` when `a` is
/// singular. The pivot choice is fixed (first nonzero below the diagonal),
/// so the output is deterministic; over exact arithmetic the solution does
/// not depend on it anyway.
pub fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    for k in 0..n {
        let pivot_row = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, pivot_row);
        b.swap(k, pivot_row);
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            for j in k..n {
                let t = &a[i][j] - &factor * &a[k][j];
                a[i][j] = t;
            }
            let t = &b[i] - &factor * &b[k];
            b[i] = t;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for k in (0..n).rev() {
        let mut acc = b[k].clone();
        for j in k + 1..n {
            acc -= &a[k][j] * &x[j];
        }
        x[k] = acc / &a[k][k];
    }
    Some(x)
}

/// Sign of an integer as -1, 0 or 1.
pub fn sign(v: &BigInt) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_negative() {
        -1
    } else {
        1
    }
}
