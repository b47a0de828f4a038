//! The basis `E^n_0, ..., E^n_n` of `K_0(C(CP^n_q))` and its unimodularity
//! certificate.
//!
//! `E^n_0 = [1]`, `E^n_1 = [L_1] - [1]` and `E^n_m = [F^n_m] - m[1]` for
//! `m >= 2`, where `F^n_m` is the bundle associated with the fundamental
//! corepresentation of `SU_q(m)`. Row `j` of `M_n` holds the `t`-coefficients
//! of `E^n_j`; the classes form a basis iff `M_n` is invertible over `Z`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::corep::{associated_class, pi_weights};
use crate::error::{Error, Result};
use crate::kring::{line_class, KClass};
use crate::matrix::IntMatrix;

fn check_index(n: usize, m: usize) -> Result<()> {
    if m > n {
        return Err(Error::out_of_range("m", m as i64, format!("0..={n}")));
    }
    Ok(())
}

fn check_dimension(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::out_of_range("n", n as i64, ">= 1"));
    }
    Ok(())
}

/// `E^n_m` built from line bundles and associated bundles.
pub fn e_class(n: usize, m: usize) -> Result<KClass> {
    check_index(n, m)?;
    match m {
        0 => Ok(KClass::trivial(n, 1)),
        1 => line_class(n, 1).checked_sub(&KClass::trivial(n, 1)),
        _ => associated_class(n, &pi_weights(m)?)?.checked_sub(&KClass::trivial(n, m)),
    }
}

/// Closed form of `E^n_m` for `2 <= m <= n`: the coefficient of `t^k` is
/// `(m - 1) + (-1)^k C(m-1, k)` for `k >= 2` and zero below.
pub fn e_class_formula(n: usize, m: usize) -> Result<KClass> {
    if m < 2 || m > n {
        return Err(Error::out_of_range("m", m as i64, format!("2..={n}")));
    }
    let top = BigInt::from(m - 1);
    let coeffs = (0..=n).map(|k| {
        if k < 2 {
            return BigInt::zero();
        }
        let b = if k < m {
            binomial(top.clone(), BigInt::from(k))
        } else {
            BigInt::zero()
        };
        if k % 2 == 0 {
            &top + b
        } else {
            &top - b
        }
    });
    Ok(KClass::from_coeffs(n, coeffs))
}

/// `M_n`: row `j` is the coefficient vector of `E^n_j`.
pub fn basis_matrix(n: usize) -> Result<IntMatrix> {
    check_dimension(n)?;
    let rows = (0..=n)
        .map(|j| e_class(n, j).map(|c| c.coeffs().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_rows(rows)
}

pub fn det_exact(m: &IntMatrix) -> Result<BigInt> {
    m.det()
}

/// Constructive proof that `E^n_0, ..., E^n_n` is a `Z`-basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisCertificate {
    pub n: usize,
    pub matrix: IntMatrix,
    pub det: BigInt,
    pub inverse: IntMatrix,
}

impl BasisCertificate {
    /// Re-checks every invariant from scratch.
    pub fn verify(&self) -> bool {
        let size = self.n + 1;
        let shape_ok = self.matrix.rows() == size
            && self.matrix.cols() == size
            && self.inverse.rows() == size
            && self.inverse.cols() == size;
        if !shape_ok || !self.det.abs().is_one() {
            return false;
        }
        let id = IntMatrix::identity(size);
        let inverse_ok = self.matrix.mul(&self.inverse).is_ok_and(|p| p == id)
            && self.inverse.mul(&self.matrix).is_ok_and(|p| p == id);
        let row0 = (0..size).all(|k| *self.matrix.get(0, k) == BigInt::from((k == 0) as i64));
        let row1 = (0..size).all(|k| *self.matrix.get(1, k) == BigInt::from(-((k == 1) as i64)));
        let low_cols = (2..size).all(|j| self.matrix.get(j, 0).is_zero() && self.matrix.get(j, 1).is_zero());
        inverse_ok && row0 && row1 && low_cols
    }

    /// Coordinates `x` with `sum_j x_j E^n_j = c`, i.e. `x = c M^-1`.
    pub fn coordinates(&self, c: &KClass) -> Result<Vec<BigInt>> {
        if c.n() != self.n {
            return Err(Error::OrderMismatch {
                left: self.n,
                right: c.n(),
            });
        }
        self.inverse.left_apply(c.coeffs())
    }
}

fn matrix_strings(m: &IntMatrix) -> Vec<Vec<String>> {
    m.row_vecs()
        .into_iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

impl Serialize for BasisCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BasisCertificate", 4)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("matrix", &matrix_strings(&self.matrix))?;
        s.serialize_field("det", &self.det.to_string())?;
        s.serialize_field("inverse", &matrix_strings(&self.inverse))?;
        s.end()
    }
}

/// Builds `M_n`, its determinant and an exact integer inverse.
///
/// Fails with [`Error::UnimodularityViolated`] if `|det M_n| != 1`.
pub fn certify_basis(n: usize) -> Result<BasisCertificate> {
    let matrix = basis_matrix(n)?;
    let (det, adj) = matrix.det_and_adjugate()?;
    if !det.abs().is_one() {
        return Err(Error::UnimodularityViolated { n, det });
    }
    // det = ±1, so M^-1 = adj / det = det * adj.
    let inverse = if det.is_one() {
        adj
    } else {
        IntMatrix::from_fn(n + 1, n + 1, |i, j| -adj.get(i, j))
    };
    let cert = BasisCertificate {
        n,
        matrix,
        det: det.clone(),
        inverse,
    };
    if !cert.verify() {
        return Err(Error::UnimodularityViolated { n, det });
    }
    Ok(cert)
}

/// Certificates for several `n`, computed in parallel; output order matches
/// the input order.
pub fn certify_many(ns: &[usize]) -> Vec<Result<BasisCertificate>> {
    ns.par_iter().map(|&n| certify_basis(n)).collect()
}

/// Unique integer coordinates of `c` in the basis `E^n_j`.
pub fn expand_in_e_basis(c: &KClass) -> Result<Vec<BigInt>> {
    certify_basis(c.n())?.coordinates(c)
}

/// `M_n` equals the upper-left `(n+1) x (n+1)` block of `M_{n+1}`.
pub fn nesting_check(n: usize) -> Result<bool> {
    let small = basis_matrix(n)?;
    let big = basis_matrix(n + 1)?;
    Ok(big.upper_left(n + 1, n + 1).is_some_and(|b| b == small))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().copied())).unwrap()
    }

    #[test]
    fn low_classes() {
        assert_eq!(e_class(2, 0).unwrap(), KClass::trivial(2, 1));
        assert_eq!(e_class(2, 1).unwrap(), KClass::from_coeffs(2, [0, -1]));
        assert_eq!(e_class(2, 2).unwrap(), KClass::t_pow(2, 2));
        assert_eq!(e_class(3, 3).unwrap(), KClass::from_coeffs(3, [0, 0, 3, 2]));
        assert!(e_class(2, 3).is_err());
    }

    #[test]
    fn closed_form() {
        assert_eq!(e_class_formula(3, 3).unwrap(), KClass::from_coeffs(3, [0, 0, 3, 2]));
        assert_eq!(e_class_formula(2, 2).unwrap(), KClass::from_coeffs(2, [0, 0, 1]));
        assert_eq!(e_class_formula(4, 2).unwrap(), KClass::from_coeffs(4, [0, 0, 1, 1, 1]));
        assert!(e_class_formula(4, 1).is_err());
        assert!(e_class_formula(4, 5).is_err());
    }

    #[test]
    fn small_matrices() {
        assert_eq!(basis_matrix(1).unwrap(), mat(&[&[1, 0], &[0, -1]]));
        assert_eq!(basis_matrix(2).unwrap(), mat(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 1]]));
        assert_eq!(
            basis_matrix(3).unwrap(),
            mat(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 1, 1], &[0, 0, 3, 2]])
        );
        assert!(basis_matrix(0).is_err());
    }

    #[test]
    fn determinants() {
        assert_eq!(det_exact(&basis_matrix(2).unwrap()).unwrap(), BigInt::from(-1));
        assert_eq!(det_exact(&basis_matrix(3).unwrap()).unwrap(), BigInt::from(1));
        assert_eq!(det_exact(&IntMatrix::identity(4)).unwrap(), BigInt::from(1));
    }

    #[test]
    fn certificates() {
        let c = certify_basis(2).unwrap();
        assert_eq!(c.det, BigInt::from(-1));
        assert_eq!(c.inverse, mat(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 1]]));
        assert_eq!(certify_basis(1).unwrap().det, BigInt::from(-1));
        assert!(certify_basis(0).is_err());

        let mut forged = certify_basis(3).unwrap();
        forged.inverse = IntMatrix::identity(4);
        assert!(!forged.verify());
    }

    #[test]
    fn coordinates() {
        assert_eq!(
            expand_in_e_basis(&KClass::trivial(3, 1)).unwrap(),
            vec![BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::zero()]
        );
        assert_eq!(
            expand_in_e_basis(&KClass::t_pow(2, 2)).unwrap(),
            vec![BigInt::zero(), BigInt::zero(), BigInt::one()]
        );
        let cert = certify_basis(3).unwrap();
        assert!(cert.coordinates(&KClass::trivial(2, 1)).is_err());
    }

    #[test]
    fn nesting() {
        for n in 1..=10 {
            assert!(nesting_check(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn parallel_certificates_keep_order() {
        let ns = [5, 1, 3];
        let out = certify_many(&ns);
        for (n, c) in ns.iter().zip(out) {
            assert_eq!(c.unwrap().n, *n);
        }
    }
}
