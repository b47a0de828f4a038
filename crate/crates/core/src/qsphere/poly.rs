use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::word::{Generator, Word};
use crate::laurent::LaurentQ;

/// An element of the free `*`-algebra on `z_0..z_n, z*_0..z*_n` over
/// `Z[q, q^-1]`.
///
/// Terms are kept in degree-lexicographic word order with no zero
/// coefficients. Arithmetic does not reduce modulo the sphere relations;
/// see [`normal_form`](super::normal_form).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NCPoly {
    n: usize,
    terms: BTreeMap<Word, LaurentQ>,
}

impl NCPoly {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, LaurentQ::one())
    }

    pub fn scalar(n: usize, c: LaurentQ) -> Self {
        Self::term(n, c, Word::empty())
    }

    pub fn term(n: usize, c: LaurentQ, w: Word) -> Self {
        let mut p = Self::zero(n);
        p.add_term(w, &c);
        p
    }

    pub fn word(n: usize, letters: impl IntoIterator<Item = Generator>) -> Self {
        Self::term(n, LaurentQ::one(), Word(letters.into_iter().collect()))
    }

    pub fn generator(n: usize, g: Generator) -> Self {
        Self::word(n, [g])
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Word, LaurentQ)>) -> Self {
        let mut p = Self::zero(n);
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    }

    /// Ambient index bound: generators are `z_0..z_n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> LaurentQ {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub(crate) fn into_terms(self) -> BTreeMap<Word, LaurentQ> {
        self.terms
    }

    pub fn add_term(&mut self, w: Word, c: &LaurentQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &LaurentQ) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(w, v)| (w.clone(), c * v)))
    }

    /// Same terms, reinterpreted over a different ambient `n`.
    pub fn with_ambient(&self, n: usize) -> Self {
        Self {
            n,
            terms: self.terms.clone(),
        }
    }

    /// Keeps the terms whose word satisfies `keep`.
    pub fn filter_words(&self, mut keep: impl FnMut(&Word) -> bool) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Specialization `q = 1`: word -> integer coefficient.
    pub fn eval_at_one(&self) -> BTreeMap<Word, num_bigint::BigInt> {
        self.terms
            .iter()
            .map(|(w, c)| (w.clone(), c.eval_at_one()))
            .filter(|(_, c)| *c != num_bigint::BigInt::from(0))
            .collect()
    }

    fn assert_same_ambient(&self, other: &Self) {
        assert_eq!(self.n, other.n, "NCPoly ambient dimensions differ");
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        self.assert_same_ambient(rhs);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Add for NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: NCPoly) -> NCPoly {
        &self + &rhs
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&LaurentQ::constant(-1))
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        self + &(-rhs)
    }
}

impl Sub for NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: NCPoly) -> NCPoly {
        &self - &rhs
    }
}

/// Free (concatenation) product.
impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        self.assert_same_ambient(rhs);
        let mut out = NCPoly::zero(self.n);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                out.add_term(wa.concat(wb), &(ca * cb));
            }
        }
        out
    }
}

impl Mul for NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: NCPoly) -> NCPoly {
        &self * &rhs
    }
}

/// Canonical text, parseable back by [`parse_nc`](super::parse_nc): terms in
/// degree-lexicographic order, e.g. `1 - z1s*z1` or `(q^-2 - 1)*z1*z1s`.
impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        if self.terms.len() == 1 {
            if let Some((w, c)) = self.terms.iter().next() {
                if w.is_empty() {
                    return write!(f, "{c}");
                }
            }
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.as_monomial().is_some_and(|(v, _)| v.is_negative());
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let shown = if negative { -c } else { c.clone() };
            match (shown.num_terms(), w.is_empty()) {
                (1, true) => write!(f, "{shown}")?,
                (1, false) if shown.is_one() => write!(f, "{w}")?,
                (1, false) => write!(f, "{shown}*{w}")?,
                (_, true) => write!(f, "({shown})")?,
                (_, false) => write!(f, "({shown})*{w}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly(n={}: {})", self.n, self)
    }
}
