//! Oriented rewriting for the sphere relations.
//!
//! Normal words put every starred generator to the left of every unstarred
//! one, each block sorted by ascending index, and never contain both `z*_0`
//! and `z_0`. The rules, for `i < j`:
//!
//! ```text
//! R1   z_j z_i    -> q^-1 z_i z_j          z*_j z*_i -> q z*_i z*_j
//! R2   z_i z*_j   -> q z*_j z_i            (any i != j)
//! R3   z_i z*_i   -> z*_i z_i + (q^-2 - 1) sum_{m > i} z_m z*_m
//! R4   z*_0 S z_0 -> q^-|S| S (1 - sum_{k >= 1} q^-2k z*_k z_k)
//! ```
//!
//! In R4, `S` is any (possibly empty) run of starred generators of index
//! `>= 1`. With `S` empty this is the sphere relation written in normal
//! order; the run lets the rule see through the starred block, which R1
//! would otherwise leave between `z*_0` and `z_0`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::poly::NCPoly;
use super::word::{Generator, Word};
use crate::error::{Error, Result};
use crate::laurent::LaurentQ;

pub const DEFAULT_STEP_CAP: u64 = 1_000_000;

/// How the sphere relation `sum_m z_m z*_m = 1` enters the rule set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SphereRule {
    /// Only R1-R3: the quantum Euclidean space, no sphere relation.
    None,
    /// R4 applied to adjacent `z*_0 z_0` only.
    Adjacent,
    /// R4 applied across a run of higher-index starred generators.
    Completed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RuleSet {
    pub n: usize,
    pub sphere: SphereRule,
}

impl RuleSet {
    pub fn new(n: usize, sphere: SphereRule) -> Self {
        Self { n, sphere }
    }

    /// R1-R4 with the completed sphere rule.
    pub fn standard(n: usize) -> Self {
        Self::new(n, SphereRule::Completed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RuleKind {
    SwapUnstarred,
    SwapStarred,
    Cross,
    Deform,
    Sphere,
}

/// A match of a rule on `word[start..end]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Redex {
    start: usize,
    end: usize,
    kind: RuleKind,
}

/// Redex selection policy.
#[derive(Debug, Clone)]
pub enum Strategy {
    /// Redex ending first; among those, the one starting last.
    LeftmostInnermost,
    /// Redex starting last.
    Rightmost,
    /// Uniformly random among all redexes.
    Random(Box<ChaCha8Rng>),
}

impl Strategy {
    fn pick(&mut self, redexes: &[Redex]) -> Option<Redex> {
        match self {
            Strategy::LeftmostInnermost => redexes
                .iter()
                .min_by_key(|r| (r.end, std::cmp::Reverse(r.start)))
                .copied(),
            Strategy::Rightmost => redexes.iter().max_by_key(|r| (r.start, r.end)).copied(),
            Strategy::Random(rng) => {
                if redexes.is_empty() {
                    None
                } else {
                    Some(redexes[rng.gen_range(0..redexes.len())])
                }
            }
        }
    }
}

fn pair_kind(a: Generator, b: Generator) -> Option<RuleKind> {
    match (a.starred, b.starred) {
        (false, false) if a.index > b.index => Some(RuleKind::SwapUnstarred),
        (true, true) if a.index > b.index => Some(RuleKind::SwapStarred),
        (false, true) if a.index != b.index => Some(RuleKind::Cross),
        (false, true) => Some(RuleKind::Deform),
        _ => None,
    }
}

impl RuleSet {
    /// Every redex in `w`.
    pub fn redexes(&self, w: &[Generator]) -> Vec<Redex> {
        let mut out = Vec::new();
        for i in 0..w.len().saturating_sub(1) {
            if let Some(kind) = pair_kind(w[i], w[i + 1]) {
                out.push(Redex {
                    start: i,
                    end: i + 2,
                    kind,
                });
            }
        }
        for i in 0..w.len() {
            if w[i] != Generator::zs(0) {
                continue;
            }
            let end = match self.sphere {
                SphereRule::None => None,
                SphereRule::Adjacent => (w.get(i + 1) == Some(&Generator::z(0))).then_some(i + 2),
                SphereRule::Completed => {
                    let mut j = i + 1;
                    while j < w.len() && w[j].starred && w[j].index >= 1 {
                        j += 1;
                    }
                    (w.get(j) == Some(&Generator::z(0))).then_some(j + 1)
                }
            };
            if let Some(end) = end {
                out.push(Redex {
                    start: i,
                    end,
                    kind: RuleKind::Sphere,
                });
            }
        }
        out
    }

    pub fn is_normal(&self, w: &[Generator]) -> bool {
        self.redexes(w).is_empty()
    }

    /// Right-hand side of the rule at `r`, as `(middle word, coefficient)`
    /// pairs replacing `w[r.start..r.end]`.
    fn rhs(&self, w: &[Generator], r: Redex) -> Vec<(Vec<Generator>, LaurentQ)> {
        let a = w[r.start];
        let b = w[r.end - 1];
        match r.kind {
            RuleKind::SwapUnstarred => vec![(vec![b, a], LaurentQ::q_pow(-1))],
            RuleKind::SwapStarred | RuleKind::Cross => vec![(vec![b, a], LaurentQ::q_pow(1))],
            RuleKind::Deform => {
                let deform = LaurentQ::from_terms([(-2, 1), (0, -1)]);
                let mut out = vec![(vec![b, a], LaurentQ::one())];
                for m in a.index as usize + 1..=self.n {
                    let m = m as u16;
                    out.push((vec![Generator::z(m), Generator::zs(m)], deform.clone()));
                }
                out
            }
            RuleKind::Sphere => {
                let run = &w[r.start + 1..r.end - 1];
                let shift = -(run.len() as i32);
                let mut out = vec![(run.to_vec(), LaurentQ::q_pow(shift))];
                for k in 1..=self.n {
                    let mut mid = run.to_vec();
                    mid.push(Generator::zs(k as u16));
                    mid.push(Generator::z(k as u16));
                    out.push((mid, LaurentQ::monomial(-1, shift - 2 * k as i32)));
                }
                out
            }
        }
    }

    fn rewrite(&self, w: &Word, r: Redex) -> Vec<(Word, LaurentQ)> {
        let letters = w.letters();
        self.rhs(letters, r)
            .into_iter()
            .map(|(mid, c)| {
                let mut v = Vec::with_capacity(letters.len() - (r.end - r.start) + mid.len());
                v.extend_from_slice(&letters[..r.start]);
                v.extend(mid);
                v.extend_from_slice(&letters[r.end..]);
                (Word(v), c)
            })
            .collect()
    }
}

/// Outcome of a reduction: the normal form and the number of rule
/// applications it took.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub poly: NCPoly,
    pub steps: u64,
}

/// Rewrites `p` to a fixed point of `rules`, choosing redexes by `strategy`.
///
/// Like terms are merged as they appear, so cancellations happen before
/// further rewriting.
pub fn reduce(p: &NCPoly, rules: &RuleSet, strategy: &mut Strategy, cap: u64) -> Result<Reduction> {
    let mut pending = p.clone().into_terms();
    let mut done = NCPoly::zero(rules.n);
    let mut steps = 0u64;
    while let Some((w, c)) = pending.pop_last() {
        let redexes = rules.redexes(w.letters());
        let Some(r) = strategy.pick(&redexes) else {
            done.add_term(w, &c);
            continue;
        };
        steps += 1;
        if steps > cap {
            return Err(Error::StepCapExceeded { cap });
        }
        for (w2, c2) in rules.rewrite(&w, r) {
            let coeff = &c * &c2;
            match pending.get_mut(&w2) {
                Some(slot) => {
                    *slot += &coeff;
                    if slot.is_zero() {
                        pending.remove(&w2);
                    }
                }
                None => {
                    pending.insert(w2, coeff);
                }
            }
        }
    }
    Ok(Reduction { poly: done, steps })
}

/// Normal form under the standard rules, leftmost-innermost, with the
/// default step budget.
pub fn normal_form(p: &NCPoly) -> Result<NCPoly> {
    normal_form_with(p, &RuleSet::standard(p.n()), DEFAULT_STEP_CAP)
}

pub fn normal_form_with(p: &NCPoly, rules: &RuleSet, cap: u64) -> Result<NCPoly> {
    reduce(p, rules, &mut Strategy::LeftmostInnermost, cap).map(|r| r.poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsphere::parse_nc;

    fn nf(text: &str, n: usize) -> NCPoly {
        normal_form(&parse_nc(text, n).unwrap()).unwrap()
    }

    fn p(text: &str, n: usize) -> NCPoly {
        parse_nc(text, n).unwrap()
    }

    #[test]
    fn q_commutation() {
        assert_eq!(nf("z1*z0", 1), p("q^-1*z0*z1", 1));
        assert_eq!(nf("z1s*z0s", 1), p("q*z0s*z1s", 1));
        assert_eq!(nf("z0*z1s", 1), p("q*z1s*z0", 1));
    }

    #[test]
    fn top_index_deformation_is_plain_commutation() {
        for n in 1..4 {
            let text = format!("z{n}*z{n}s");
            assert_eq!(nf(&text, n), p(&format!("z{n}s*z{n}"), n));
        }
    }

    #[test]
    fn sphere_relation_in_low_dimension() {
        assert_eq!(nf("z0*z0s", 1), p("1 - z1s*z1", 1));
        assert_eq!(nf("z0s*z0", 1), p("1 - q^-2*z1s*z1", 1));
        for n in 1..5 {
            let sum: Vec<String> = (0..=n).map(|m| format!("z{m}*z{m}s")).collect();
            assert_eq!(nf(&sum.join(" + "), n), NCPoly::one(n));
        }
    }

    #[test]
    fn completed_rule_sees_through_star_run() {
        // z*_1 z*_0 z_0 has two redexes; both orders must agree.
        let w = p("z1s*z0s*z0", 1);
        let rules = RuleSet::standard(1);
        let a = reduce(&w, &rules, &mut Strategy::LeftmostInnermost, 1000).unwrap();
        let b = reduce(&w, &rules, &mut Strategy::Rightmost, 1000).unwrap();
        assert_eq!(a.poly, b.poly);
        assert_eq!(a.poly, p("z1s - q^-2*z1s*z1s*z1", 1));
    }

    #[test]
    fn adjacent_rule_is_not_confluent() {
        let w = p("z1s*z0s*z0", 1);
        let rules = RuleSet::new(1, SphereRule::Adjacent);
        let a = reduce(&w, &rules, &mut Strategy::LeftmostInnermost, 1000).unwrap();
        let b = reduce(&w, &rules, &mut Strategy::Rightmost, 1000).unwrap();
        assert_ne!(a.poly, b.poly);
        // z*_1 z*_0 z_0 -> q z*_0 z*_1 z_0 gets stuck without the run.
        assert_eq!(a.poly, p("q*z0s*z1s*z0", 1));
    }

    #[test]
    fn step_cap_is_enforced() {
        let w = p("z2*z1*z0*z2s*z1s*z0s", 2);
        let err = normal_form_with(&w, &RuleSet::standard(2), 3).unwrap_err();
        assert_eq!(err, Error::StepCapExceeded { cap: 3 });
    }

    #[test]
    fn normal_words_are_fixed() {
        let rules = RuleSet::standard(2);
        let w = vec![Generator::zs(1), Generator::zs(2), Generator::z(0), Generator::z(2)];
        assert!(rules.is_normal(&w));
        let w = vec![Generator::zs(0), Generator::zs(1), Generator::z(0)];
        assert!(!rules.is_normal(&w));
        assert!(RuleSet::new(2, SphereRule::Adjacent).is_normal(&w));
    }
}
