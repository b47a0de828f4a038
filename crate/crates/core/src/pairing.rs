//! Index pairings of the K-homology generators `[mu_k]` with `K_0` classes.
//!
//! The functionals are determined by their values on the `t`-basis,
//! `<[mu_k], t^j> = (-1)^j delta_{jk}`, so pairing is coefficient extraction
//! with a sign.

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kring::KClass;
use crate::matrix::IntMatrix;

/// `values[k] = <[mu_k], class>` for `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingVector {
    pub n: usize,
    pub values: Vec<BigInt>,
}

impl Serialize for PairingVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let values: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        let mut s = serializer.serialize_struct("PairingVector", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("values", &values)?;
        s.end()
    }
}

fn signed_coeff(k: usize, c: &KClass) -> BigInt {
    let coeff = &c.coeffs()[k];
    if k.is_multiple_of(2) {
        coeff.clone()
    } else {
        -coeff
    }
}

/// `<[mu_k], c>`: `(-1)^k` times the coefficient of `t^k`.
pub fn pair_mu(k: usize, c: &KClass) -> Result<BigInt> {
    if k > c.n() {
        return Err(Error::out_of_range("k", k as i64, format!("0..={}", c.n())));
    }
    Ok(signed_coeff(k, c))
}

pub fn pair_vector(c: &KClass) -> PairingVector {
    PairingVector {
        n: c.n(),
        values: (0..=c.n()).map(|k| signed_coeff(k, c)).collect(),
    }
}

/// Square matrix with entry `(k, j) = <[mu_k], classes[j]>`.
pub fn pairing_matrix(classes: &[KClass]) -> Result<IntMatrix> {
    let Some(first) = classes.first() else {
        return Err(Error::DimensionMismatch("no classes given".into()));
    };
    let n = first.n();
    if let Some(bad) = classes.iter().find(|c| c.n() != n) {
        return Err(Error::OrderMismatch {
            left: n,
            right: bad.n(),
        });
    }
    if classes.len() != n + 1 {
        return Err(Error::DimensionMismatch(format!(
            "expected {} classes for n = {n}, got {}",
            n + 1,
            classes.len()
        )));
    }
    Ok(IntMatrix::from_fn(n + 1, n + 1, |k, j| signed_coeff(k, &classes[j])))
}
