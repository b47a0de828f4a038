//! Classes in `K_0(C(CP^n_q)) = Z[t]/t^{n+1}`.
//!
//! The generator `t = [1] - [L_1]` is the Euler class of the Hopf line
//! bundle. Line bundles multiply like characters of the circle, so the class
//! of the spectral subspace `L_m` is `(1 - t)^m` for every integer `m`.
//! Labels follow the convention `L_m = {a : action is lambda^m a}`.

use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::truncated::TruncatedPoly;

/// A `K_0` class of `C(CP^n_q)` written in the basis `1, t, ..., t^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KClass {
    poly: TruncatedPoly,
}

impl KClass {
    pub fn new(poly: TruncatedPoly) -> Self {
        Self { poly }
    }

    pub fn from_coeffs<I, C>(n: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        Self::new(TruncatedPoly::from_coeffs(n, coeffs))
    }

    /// `r * [1]`, the class of a trivial bundle of rank `r`.
    pub fn trivial(n: usize, rank: impl Into<BigInt>) -> Self {
        Self::new(TruncatedPoly::constant(n, rank))
    }

    pub fn t_pow(n: usize, k: usize) -> Self {
        Self::new(TruncatedPoly::t_pow(n, k))
    }

    pub fn n(&self) -> usize {
        self.poly.n()
    }

    pub fn poly(&self) -> &TruncatedPoly {
        &self.poly
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.poly.coeffs()
    }

    /// Constant coefficient; for a genuine bundle this is its rank.
    pub fn rank(&self) -> &BigInt {
        self.poly.coeff(0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.poly.checked_add(&other.poly).map(Self::new)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.poly.checked_sub(&other.poly).map(Self::new)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.poly.checked_mul(&other.poly).map(Self::new)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.poly.scale(c))
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

impl fmt::Debug for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KClass(n={}: {})", self.n(), self.poly)
    }
}

/// `{"n": n, "coeffs": ["c0", "c1", ...]}`, coefficients as decimal strings.
impl Serialize for KClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.coeffs().iter().map(ToString::to_string).collect();
        let mut s = serializer.serialize_struct("KClass", 2)?;
        s.serialize_field("n", &self.n())?;
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

/// The Euler class together with a flag for the degenerate case `n = 0`,
/// where `K_0` is `Z` and `t` vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerClass {
    pub class: KClass,
    pub degenerate: bool,
}

pub fn euler_class(n: usize) -> EulerClass {
    EulerClass {
        class: KClass::t_pow(n, 1),
        degenerate: n == 0,
    }
}

/// `[L^n_m] = (1 - t)^m`; negative `m` goes through the inverse
/// `(1 - t)^{-1} = 1 + t + ... + t^n`.
pub fn line_class(n: usize, m: i64) -> KClass {
    let hopf = TruncatedPoly::from_coeffs(n, [1, -1]);
    let base = if m >= 0 {
        hopf
    } else {
        hopf.invert_unit().expect("1 - t is a unit")
    };
    KClass::new(base.pow(m.unsigned_abs()))
}

/// Pushforward along `CP^{n_target}_q -> CP^n_q` induced by killing the
/// generators `z_i`, `i > n_target`: truncation of the `t`-expansion.
pub fn restrict(c: &KClass, n_target: usize) -> Result<KClass> {
    if n_target < 1 || n_target > c.n() {
        return Err(Error::out_of_range(
            "restriction target",
            n_target as i64,
            format!("1..={}", c.n()),
        ));
    }
    c.poly.truncate(n_target).map(KClass::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(n: usize, c: &[i64]) -> KClass {
        KClass::from_coeffs(n, c.iter().copied())
    }

    #[test]
    fn euler_class_is_t() {
        for n in 1..5 {
            let e = euler_class(n);
            assert!(!e.degenerate);
            assert_eq!(e.class, class(n, &[0, 1]));
        }
        let e0 = euler_class(0);
        assert!(e0.degenerate);
        assert_eq!(e0.class, class(0, &[0]));
    }

    #[test]
    fn line_classes() {
        for n in 1..6 {
            assert_eq!(line_class(n, 1), class(n, &[1, -1]));
            assert_eq!(line_class(n, 0), class(n, &[1]));
        }
        assert_eq!(line_class(2, -1), class(2, &[1, 1, 1]));
        let hopf = line_class(2, 1);
        assert_eq!(line_class(2, 2), hopf.checked_mul(&hopf).unwrap());
        assert_eq!(line_class(2, 2), class(2, &[1, -2, 1]));
    }

    #[test]
    fn restriction() {
        for m in -6..=6 {
            assert_eq!(restrict(&line_class(4, m), 1).unwrap(), class(1, &[1, -m]));
        }
        let c = class(3, &[2, 0, 5, -1]);
        assert_eq!(restrict(&c, 3).unwrap(), c);
        assert_eq!(restrict(&line_class(3, -1), 1).unwrap(), class(1, &[1, 1]));
        assert!(restrict(&c, 4).is_err());
        assert!(restrict(&c, 0).is_err());
    }

    #[test]
    fn json_rendering() {
        let json = serde_json::to_string(&line_class(2, -2)).unwrap();
        assert_eq!(json, r#"{"n":2,"coeffs":["1","2","3"]}"#);
    }
}
