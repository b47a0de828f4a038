//! Bundles associated with character-graded corepresentations.
//!
//! When a corepresentation of `O(U(1))` is diagonal with weights
//! `lambda_1, ..., lambda_r` (exponents of `u`), the cotensor product with
//! the Peter–Weyl algebra of the sphere splits weightwise: a weight
//! `lambda` vector pairs with the spectral subspace `L_lambda`. The class of
//! the associated module is then the sum of the line classes.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kring::{line_class, KClass};

/// A nonempty multiset of integer `U(1)`-weights, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct WeightVector {
    weights: Vec<i64>,
}

impl WeightVector {
    pub fn new(mut weights: Vec<i64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::DimensionMismatch("weight vector must be nonempty".into()));
        }
        weights.sort_unstable();
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn dimension(&self) -> usize {
        self.weights.len()
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        weights.sort_unstable();
        Self { weights }
    }

    pub fn multiplicities(&self) -> Decomposition {
        let mut parts = BTreeMap::new();
        for &w in &self.weights {
            *parts.entry(w).or_insert(0) += 1;
        }
        Decomposition { parts }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Direct sum of line bundles: label `m` of `L_m` -> multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Decomposition {
    parts: BTreeMap<i64, usize>,
}

impl Decomposition {
    pub fn from_parts(parts: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let mut map = BTreeMap::new();
        for (label, mult) in parts {
            if mult > 0 {
                *map.entry(label).or_insert(0) += mult;
            }
        }
        Self { parts: map }
    }

    pub fn parts(&self) -> &BTreeMap<i64, usize> {
        &self.parts
    }

    pub fn multiplicity(&self, label: i64) -> usize {
        self.parts.get(&label).copied().unwrap_or(0)
    }

    pub fn to_weights(&self) -> Result<WeightVector> {
        WeightVector::new(
            self.parts
                .iter()
                .flat_map(|(&w, &mult)| std::iter::repeat_n(w, mult))
                .collect(),
        )
    }
}

/// `L_-1 (+) L_2`-style rendering.
impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|(label, mult)| match mult {
                1 => format!("L_{label}"),
                k => format!("L_{label}^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" (+) "))
    }
}

fn check_su_rank(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::out_of_range("m", m as i64, ">= 2"));
    }
    Ok(())
}

/// Weights of the fundamental corepresentation of `SU_q(m)` pushed through
/// the diagonal Hopf surjection onto `O(U(1))`: `u^-1` on the first `m - 1`
/// basis vectors and `u^{m-1}` on the last.
pub fn pi_weights(m: usize) -> Result<WeightVector> {
    check_su_rank(m)?;
    let mut weights = vec![-1; m - 1];
    weights.push(m as i64 - 1);
    WeightVector::new(weights)
}

/// The quantum determinant of a diagonal image is `u^{sum of weights}`,
/// which must be `1`.
pub fn check_determinant_condition(w: &WeightVector) -> bool {
    w.weights.iter().sum::<i64>() == 0
}

/// Class of the associated module: `sum over weights lambda of [L_lambda]`.
pub fn associated_class(n: usize, w: &WeightVector) -> Result<KClass> {
    if n < 1 {
        return Err(Error::out_of_range("n", n as i64, ">= 1"));
    }
    let mut acc = KClass::trivial(n, 0);
    for (label, mult) in w.multiplicities().parts {
        let term = line_class(n, label).scale(&BigInt::from(mult));
        acc = acc.checked_add(&term)?;
    }
    Ok(acc)
}

/// `F^n_m = L_-1^{(+)(m-1)} (+) L_{m-1}` for `2 <= m <= n`.
pub fn fundamental_decomposition(n: usize, m: usize) -> Result<Decomposition> {
    check_su_rank(m)?;
    if m > n {
        return Err(Error::out_of_range("m", m as i64, format!("2..={n}")));
    }
    Ok(pi_weights(m)?.multiplicities())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairing::pair_mu;

    #[test]
    fn pi_weight_shapes() {
        assert_eq!(pi_weights(2).unwrap().weights(), &[-1, 1]);
        assert_eq!(pi_weights(3).unwrap().weights(), &[-1, -1, 2]);
        assert_eq!(pi_weights(5).unwrap().weights(), &[-1, -1, -1, -1, 4]);
        assert!(pi_weights(1).is_err());
        assert!(pi_weights(0).is_err());
    }

    #[test]
    fn determinant_condition() {
        assert!(check_determinant_condition(&WeightVector::new(vec![-1, 1]).unwrap()));
        assert!(!check_determinant_condition(&WeightVector::new(vec![1, 1]).unwrap()));
        for m in 2..=50 {
            assert!(check_determinant_condition(&pi_weights(m).unwrap()));
        }
    }

    #[test]
    fn associated_classes() {
        let c = associated_class(2, &pi_weights(2).unwrap()).unwrap();
        assert_eq!(c, KClass::from_coeffs(2, [2, 0, 1]));
        let c = associated_class(3, &pi_weights(3).unwrap()).unwrap();
        assert_eq!(c, KClass::from_coeffs(3, [3, 0, 3, 2]));
        let c = associated_class(4, &WeightVector::new(vec![0]).unwrap()).unwrap();
        assert_eq!(c, KClass::trivial(4, 1));
        assert!(associated_class(0, &pi_weights(2).unwrap()).is_err());
    }

    #[test]
    fn decompositions() {
        let d = fundamental_decomposition(2, 2).unwrap();
        assert_eq!(d, Decomposition::from_parts([(-1, 1), (1, 1)]));
        assert_eq!(d.to_string(), "L_-1 (+) L_1");
        let d = fundamental_decomposition(5, 3).unwrap();
        assert_eq!(d, Decomposition::from_parts([(-1, 2), (2, 1)]));
        assert_eq!(d.to_string(), "L_-1^2 (+) L_2");
        assert!(fundamental_decomposition(2, 3).is_err());
        assert!(fundamental_decomposition(4, 1).is_err());
    }

    #[test]
    fn rank_is_representation_dimension() {
        for n in 2..=12 {
            for m in 2..=n {
                let d = fundamental_decomposition(n, m).unwrap();
                let c = associated_class(n, &d.to_weights().unwrap()).unwrap();
                assert_eq!(pair_mu(0, &c).unwrap(), BigInt::from(m));
            }
        }
    }

    #[test]
    fn empty_weights_are_rejected() {
        assert!(WeightVector::new(vec![]).is_err());
    }
}
