#![allow(clippy::needless_range_loop)]

//! Exact dense linear algebra over arbitrary-precision integers.
//!
//! Exponent matrices are tiny (one row per monomial), so plain Gauss–Jordan
//! over big rationals is exact and fast; no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Determinant of a square integer matrix (Bareiss fraction-free elimination).
pub fn det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Exact inverse of a square integer matrix. Errors when singular.
pub fn inverse(m: &[Vec<i64>]) -> Result<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        BigRational::from_integer(BigInt::from(m[i][j]))
                    } else if j - n == i {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        let pivot_row = (k..n)
            .find(|&r| !a[r][k].is_zero())
            .ok_or(Error::Singular)?;
        a.swap(k, pivot_row);
        let pivot = a[k][k].clone();
        for j in 0..2 * n {
            a[k][j] = &a[k][j] / &pivot;
        }
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = a[i][k].clone();
                for j in 0..2 * n {
                    let v = &a[i][j] - &f * &a[k][j];
                    a[i][j] = v;
                }
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Converts a big rational to an `i64` ratio pair, if it fits.
pub fn to_i64_pair(r: &BigRational) -> Option<(i64, i64)> {
    let n: i64 = r.numer().try_into().ok()?;
    let d: i64 = r.denom().try_into().ok()?;
    Some((n, d))
}

/// |det| as usize when it fits, used for cap checks before enumeration.
pub fn abs_det_usize(m: &[Vec<i64>]) -> Option<usize> {
    det(m).abs().try_into().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_matches_cofactor_expansion_small() {
        let m = vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]];
        assert_eq!(det(&m), BigInt::from(-162));
        let f = vec![vec![6, 0, 0], vec![0, 6, 0], vec![0, 0, 6]];
        assert_eq!(det(&f), BigInt::from(216));
        let s = vec![vec![2, 1], vec![0, 0]];
        assert_eq!(det(&s), BigInt::zero());
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]];
        let inv = inverse(&m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = BigRational::zero();
                for k in 0..3 {
                    s += BigRational::from_integer(BigInt::from(m[i][k])) * &inv[k][j];
                }
                let expect = if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                assert_eq!(s, expect);
            }
        }
    }

    #[test]
    fn inverse_of_singular_errors() {
        let s = vec![vec![2, 1], vec![0, 0]];
        assert!(inverse(&s).is_err());
    }
}
