//! Exact computations in the K-theory of the Vaksman–Soibelman quantum
//! projective spaces `CP^n_q`, together with a normal-ordering engine for the
//! polynomial algebra of the quantum odd sphere `S^{2n+1}_q`.
//!
//! * [`truncated`] and [`laurent`] hold the scalar rings: `Z[t]/t^{n+1}` and
//!   `Z[q, q^-1]`.
//! * [`kring`] builds line-bundle classes in `K_0`, [`pairing`] evaluates the
//!   index pairings against them and [`corep`] computes classes of bundles
//!   associated with diagonal (character-graded) corepresentations.
//! * [`basis`] assembles the integer matrix of the classes `E^n_m` and
//!   certifies that it is unimodular.
//! * [`qsphere`] is the oriented rewriting system for the sphere relations.

pub mod basis;
pub mod corep;
pub mod error;
pub mod kring;
pub mod laurent;
pub mod matrix;
pub mod pairing;
pub mod qsphere;
pub mod truncated;

pub use basis::{
    basis_matrix, certify_basis, certify_many, det_exact, e_class, e_class_formula, expand_in_e_basis,
    nesting_check, BasisCertificate,
};
pub use corep::{
    associated_class, check_determinant_condition, fundamental_decomposition, pi_weights,
    Decomposition, WeightVector,
};
pub use error::{Error, Result};
pub use kring::{euler_class, line_class, restrict, EulerClass, KClass};
pub use laurent::LaurentQ;
pub use matrix::IntMatrix;
pub use num_bigint::BigInt;
pub use pairing::{pair_mu, pair_vector, pairing_matrix, PairingVector};
pub use qsphere::{
    adjoint, fuzz_confluence, normal_form, parse_nc, phi, spectral_component, u1_degree,
    verify_defining_relations, Degree, Generator, NCPoly, ReductionReport, RuleSet, SphereRule,
    Strategy, Word,
};
pub use truncated::TruncatedPoly;
