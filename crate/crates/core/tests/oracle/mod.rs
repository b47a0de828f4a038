//! Reference computations that share no code with the library.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rows `0..=max` of Pascal's triangle; row `m` has length `m + 1`.
pub fn pascal(max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for m in 1..=max {
        let prev = &rows[m - 1];
        let row = (0..=m)
            .map(|k| {
                let left = if k > 0 { prev[k - 1].clone() } else { BigInt::zero() };
                let right = prev.get(k).cloned().unwrap_or_default();
                left + right
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Generalized binomial `C(m, k) = m (m-1) ... (m-k+1) / k!` for any integer
/// `m`.
pub fn gen_binomial(m: i64, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(m - i as i64);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Laplace expansion along the first row; exponential, small sizes only.
pub fn cofactor_det(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &a[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Coefficients of `(1 - t)^m` modulo `t^{n+1}` by the binomial series.
pub fn line_series(n: usize, m: i64) -> Vec<BigInt> {
    (0..=n).map(|k| sign(k) * gen_binomial(m, k)).collect()
}
