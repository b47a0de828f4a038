//! The polynomial `*`-algebra of the Vaksman–Soibelman sphere
//! `O(S^{2n+1}_q)` over `Z[q, q^-1]`.
//!
//! Elements live in the free algebra ([`NCPoly`]) and are brought to a
//! canonical representative by the oriented rules in [`rewrite`]. The
//! diagonal circle action gives `z_i` degree `+1` and `z*_i` degree `-1`.

mod check;
mod parse;
mod poly;
pub mod rewrite;
mod word;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

pub use check::{
    defining_relations, exhaustive_confluence, fuzz_confluence, fuzz_confluence_with,
    ordered_sphere_relation, verify_defining_relations, Mismatch, MismatchKind, ReductionReport,
};
pub use parse::{parse_nc, parse_nc_infer};
pub use poly::NCPoly;
pub use rewrite::{normal_form, normal_form_with, reduce, Reduction, RuleSet, SphereRule, Strategy, DEFAULT_STEP_CAP};
pub use word::{Generator, Word};

use crate::error::{Error, Result};

/// Reverses words and toggles stars; coefficients are fixed since `q` is real.
pub fn adjoint(p: &NCPoly) -> NCPoly {
    NCPoly::from_terms(p.n(), p.terms().map(|(w, c)| (w.adjoint(), c.clone())))
}

/// Circle degree of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    Homogeneous(i64),
    Inhomogeneous,
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Homogeneous(d) => write!(f, "{d}"),
            Degree::Inhomogeneous => write!(f, "inhomogeneous"),
        }
    }
}

/// An integer, or the string `"inhomogeneous"`.
impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Degree::Homogeneous(d) => serializer.serialize_i64(*d),
            Degree::Inhomogeneous => serializer.serialize_str("inhomogeneous"),
        }
    }
}

/// `#unstarred - #starred` if every word agrees. Zero lies in every
/// spectral subspace and is reported as degree 0.
pub fn u1_degree(p: &NCPoly) -> Degree {
    let mut degrees = p.terms().map(|(w, _)| w.degree());
    let Some(first) = degrees.next() else {
        return Degree::Homogeneous(0);
    };
    if degrees.all(|d| d == first) {
        Degree::Homogeneous(first)
    } else {
        Degree::Inhomogeneous
    }
}

/// Projection onto the `m`-th spectral subspace.
pub fn spectral_component(p: &NCPoly, m: i64) -> NCPoly {
    p.filter_words(|w| w.degree() == m)
}

/// All nonzero spectral components, keyed by degree.
pub fn spectral_decomposition(p: &NCPoly) -> BTreeMap<i64, NCPoly> {
    let mut out: BTreeMap<i64, NCPoly> = BTreeMap::new();
    for (w, c) in p.terms() {
        out.entry(w.degree())
            .or_insert_with(|| NCPoly::zero(p.n()))
            .add_term(w.clone(), c);
    }
    out
}

/// The equivariant map onto `O(S^3_q)`: `z_0, z_1` are kept, `z_i` for
/// `i >= 2` go to zero; the image is normal-ordered in the `n = 1` algebra.
pub fn phi(p: &NCPoly) -> Result<NCPoly> {
    phi_with_cap(p, DEFAULT_STEP_CAP)
}

pub fn phi_with_cap(p: &NCPoly, cap: u64) -> Result<NCPoly> {
    if p.n() < 1 {
        return Err(Error::out_of_range("n", p.n() as i64, ">= 1"));
    }
    let image = p
        .filter_words(|w| w.letters().iter().all(|g| g.index <= 1))
        .with_ambient(1);
    normal_form_with(&image, &RuleSet::standard(1), cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentQ;

    fn p(text: &str, n: usize) -> NCPoly {
        parse_nc(text, n).unwrap()
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(adjoint(&p("z0*z1", 1)), p("z1s*z0s", 1));
        let x = p("q^-2*z0*z1s + 3*z1 - z0s*z0s", 1);
        assert_eq!(adjoint(&adjoint(&x)), x);
        let lhs = normal_form(&adjoint(&p("z1*z0", 1))).unwrap();
        let rhs = normal_form(&adjoint(&normal_form(&p("z1*z0", 1)).unwrap())).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, p("z0s*z1s", 1));
    }

    #[test]
    fn degrees() {
        assert_eq!(u1_degree(&p("z0*z1", 1)), Degree::Homogeneous(2));
        assert_eq!(u1_degree(&p("z0s*z1", 1)), Degree::Homogeneous(0));
        assert_eq!(u1_degree(&p("z0 + z0s", 1)), Degree::Inhomogeneous);
        assert_eq!(u1_degree(&NCPoly::zero(1)), Degree::Homogeneous(0));
        assert_eq!(serde_json::to_string(&Degree::Inhomogeneous).unwrap(), "\"inhomogeneous\"");
    }

    #[test]
    fn spectral_components() {
        assert_eq!(spectral_component(&p("z0 + z0s", 1), 1), p("z0", 1));
        assert_eq!(spectral_component(&NCPoly::one(1), 0), NCPoly::one(1));
        assert!(spectral_component(&p("z0*z1s", 1), -1).is_zero());
        let x = p("z0 + z0s*z1 + 2 - q*z1s", 1);
        let parts = spectral_decomposition(&x);
        assert_eq!(parts.keys().copied().collect::<Vec<_>>(), vec![-1, 0, 1]);
        let total = parts.values().fold(NCPoly::zero(1), |acc, c| &acc + c);
        assert_eq!(total, x);
    }

    #[test]
    fn phi_examples() {
        assert!(phi(&p("z2*z0", 2)).unwrap().is_zero());
        assert_eq!(phi(&p("z1*z0", 3)).unwrap(), NCPoly::term(1, LaurentQ::q_pow(-1), Word(vec![Generator::z(0), Generator::z(1)])));
        for n in 1..5 {
            let sum: Vec<String> = (0..=n).map(|m| format!("z{m}*z{m}s")).collect();
            assert_eq!(phi(&p(&sum.join(" + "), n)).unwrap(), NCPoly::one(1));
        }
        assert!(phi(&NCPoly::one(0)).is_err());
    }
}
