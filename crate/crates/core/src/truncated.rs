//! The truncated polynomial ring `Z[t]/t^{n+1}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of `Z[t]/t^{n+1}`.
///
/// Always holds exactly `n + 1` coefficients, `coeffs[k]` being the
/// coefficient of `t^k`. Binary operations refuse operands of different
/// truncation order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedPoly {
    coeffs: Vec<BigInt>,
}

impl TruncatedPoly {
    pub fn zero(n: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); n + 1],
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, 1)
    }

    pub fn constant(n: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(n);
        p.coeffs[0] = c.into();
        p
    }

    /// `t^k`, which is zero when `k > n`.
    pub fn t_pow(n: usize, k: usize) -> Self {
        let mut p = Self::zero(n);
        if k <= n {
            p.coeffs[k] = BigInt::one();
        }
        p
    }

    /// Builds from leading coefficients; missing ones are zero and anything
    /// past degree `n` is discarded.
    pub fn from_coeffs<I, C>(n: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(n);
        for (slot, c) in p.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        p
    }

    /// Truncation order `n`.
    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::OrderMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Truncated convolution.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.n();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Square-and-multiply; `a^0 = 1`.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.n());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same order");
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base).expect("same order");
            }
        }
        acc
    }

    /// Inverse over `Z`, which exists iff the constant term is `±1`.
    ///
    /// Solved degree by degree: `b_0 = a_0` and
    /// `b_k = -a_0 * sum_{i=1..k} a_i b_{k-i}`.
    pub fn invert_unit(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if !a0.abs().is_one() {
            return Err(Error::NotInvertible {
                constant: a0.clone(),
            });
        }
        let n = self.n();
        let mut b = Self::zero(n);
        b.coeffs[0] = a0.clone();
        for k in 1..=n {
            let s: BigInt = (1..=k).map(|i| &self.coeffs[i] * &b.coeffs[k - i]).sum();
            b.coeffs[k] = -(a0 * s);
        }
        Ok(b)
    }

    /// Keeps the terms of degree `<= target`.
    pub fn truncate(&self, target: usize) -> Result<Self> {
        if target > self.n() {
            return Err(Error::out_of_range(
                "truncation target",
                target as i64,
                format!("<= {}", self.n()),
            ));
        }
        Ok(Self {
            coeffs: self.coeffs[..=target].to_vec(),
        })
    }
}

/// `c0 + c1*t + c2*t^2 + ...`, skipping zero terms and writing unit
/// coefficients of positive powers as `t` / `- t`.
impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let abs = c.abs();
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    match k {
                        1 => write!(f, "t")?,
                        _ => write!(f, "t^{k}")?,
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedPoly(n={}: {})", self.n(), self)
    }
}
