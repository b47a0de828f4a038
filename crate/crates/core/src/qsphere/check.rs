//! Consistency checks for the rewriting system: the defining relations must
//! reduce to zero, and different redex choices must agree.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::poly::NCPoly;
use super::rewrite::{reduce, RuleSet, SphereRule, Strategy, DEFAULT_STEP_CAP};
use super::word::{Generator, Word};
use super::{phi_with_cap, u1_degree, Degree};
use crate::error::{Error, Result};
use crate::laurent::LaurentQ;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MismatchKind {
    /// Two strategies produced different normal forms.
    NormalForm,
    /// A defining relation did not reduce to zero.
    Relation,
    /// A relation's image under `phi` did not reduce to zero.
    PhiImage,
    /// A normal form left the spectral subspace of its input.
    Degree,
    /// The rewrite-step budget ran out.
    StepCap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub kind: MismatchKind,
    pub input: String,
    pub left: String,
    pub right: String,
}

/// Summary of a batch of reductions; passes iff `mismatches` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub inputs: usize,
    pub max_steps: u64,
    pub mismatches: Vec<Mismatch>,
}

impl ReductionReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn count(&self, kind: MismatchKind) -> usize {
        self.mismatches.iter().filter(|m| m.kind == kind).count()
    }

    fn merge(&mut self, other: TrialOutcome) {
        self.inputs += 1;
        self.max_steps = self.max_steps.max(other.max_steps);
        self.mismatches.extend(other.mismatches);
    }
}

fn gens(n: usize) -> Vec<Generator> {
    (0..=n as u16)
        .flat_map(|i| [Generator::zs(i), Generator::z(i)])
        .collect()
}

fn word_poly(n: usize, c: LaurentQ, letters: &[Generator]) -> NCPoly {
    NCPoly::term(n, c, Word(letters.to_vec()))
}

/// The defining relations as `(label, lhs - rhs)`, including the adjoints
/// of the `z_i z_j` relations.
pub fn defining_relations(n: usize) -> Vec<(String, NCPoly)> {
    let z = |i: usize| Generator::z(i as u16);
    let zs = |i: usize| Generator::zs(i as u16);
    let q = LaurentQ::q_pow(1);
    let one = LaurentQ::one();
    let mut out = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            out.push((
                format!("z{i} z{j} = q z{j} z{i}"),
                &word_poly(n, one.clone(), &[z(i), z(j)]) - &word_poly(n, q.clone(), &[z(j), z(i)]),
            ));
            out.push((
                format!("z{j}s z{i}s = q z{i}s z{j}s"),
                &word_poly(n, one.clone(), &[zs(j), zs(i)]) - &word_poly(n, q.clone(), &[zs(i), zs(j)]),
            ));
        }
    }
    for i in 0..=n {
        for j in (0..=n).filter(|&j| j != i) {
            out.push((
                format!("z{i} z{j}s = q z{j}s z{i}"),
                &word_poly(n, one.clone(), &[z(i), zs(j)]) - &word_poly(n, q.clone(), &[zs(j), z(i)]),
            ));
        }
    }
    let deform = LaurentQ::from_terms([(-2, 1), (0, -1)]);
    for i in 0..=n {
        let mut rel = &word_poly(n, one.clone(), &[z(i), zs(i)]) - &word_poly(n, one.clone(), &[zs(i), z(i)]);
        for m in i + 1..=n {
            rel = &rel - &word_poly(n, deform.clone(), &[z(m), zs(m)]);
        }
        out.push((format!("z{i} z{i}s = z{i}s z{i} + (q^-2 - 1) sum_(m>{i}) zm zms"), rel));
    }
    let mut sphere = -NCPoly::one(n);
    for m in 0..=n {
        sphere = &sphere + &word_poly(n, one.clone(), &[z(m), zs(m)]);
    }
    out.push(("sum_m zm zms = 1".to_string(), sphere));
    out
}

/// Every defining relation must normal-order to zero, and so must its image
/// under `phi`.
pub fn verify_defining_relations(n: usize) -> ReductionReport {
    let rules = RuleSet::standard(n);
    let mut report = ReductionReport {
        inputs: 0,
        max_steps: 0,
        mismatches: Vec::new(),
    };
    for (label, rel) in defining_relations(n) {
        let mut outcome = TrialOutcome::default();
        match reduce(&rel, &rules, &mut Strategy::LeftmostInnermost, DEFAULT_STEP_CAP) {
            Ok(r) => {
                outcome.max_steps = r.steps;
                if !r.poly.is_zero() {
                    outcome.push(MismatchKind::Relation, &label, r.poly.to_string(), "0".into());
                }
            }
            Err(e) => outcome.push(MismatchKind::StepCap, &label, e.to_string(), String::new()),
        }
        if n >= 1 {
            match phi_with_cap(&rel, DEFAULT_STEP_CAP) {
                Ok(img) if !img.is_zero() => {
                    outcome.push(MismatchKind::PhiImage, &label, img.to_string(), "0".into())
                }
                Ok(_) => {}
                Err(e) => outcome.push(MismatchKind::StepCap, &label, e.to_string(), String::new()),
            }
        }
        report.merge(outcome);
    }
    report
}

/// `sum_m z_m z*_m` normal-ordered with R1-R3 only. The sphere rule R4 is
/// this element set equal to 1 and solved for `z*_0 z_0`.
pub fn ordered_sphere_relation(n: usize) -> Result<NCPoly> {
    let mut sum = NCPoly::zero(n);
    for m in 0..=n as u16 {
        sum = &sum + &NCPoly::word(n, [Generator::z(m), Generator::zs(m)]);
    }
    reduce(&sum, &RuleSet::new(n, SphereRule::None), &mut Strategy::LeftmostInnermost, DEFAULT_STEP_CAP)
        .map(|r| r.poly)
}

#[derive(Debug, Default)]
struct TrialOutcome {
    max_steps: u64,
    mismatches: Vec<Mismatch>,
}

impl TrialOutcome {
    fn push(&mut self, kind: MismatchKind, input: &str, left: String, right: String) {
        self.mismatches.push(Mismatch {
            kind,
            input: input.to_string(),
            left,
            right,
        });
    }
}

/// Reduces `w` under each strategy and compares against the first.
fn compare_strategies(rules: &RuleSet, w: &Word, strategies: Vec<Strategy>, cap: u64) -> TrialOutcome {
    let input = NCPoly::term(rules.n, LaurentQ::one(), w.clone());
    let label = w.to_string();
    let degree = w.degree();
    let mut outcome = TrialOutcome::default();
    let mut reference: Option<NCPoly> = None;
    for mut strategy in strategies {
        let r = match reduce(&input, rules, &mut strategy, cap) {
            Ok(r) => r,
            Err(e) => {
                outcome.push(MismatchKind::StepCap, &label, e.to_string(), String::new());
                continue;
            }
        };
        outcome.max_steps = outcome.max_steps.max(r.steps);
        if !r.poly.is_zero() && u1_degree(&r.poly) != Degree::Homogeneous(degree) {
            outcome.push(MismatchKind::Degree, &label, r.poly.to_string(), degree.to_string());
        }
        match &reference {
            None => reference = Some(r.poly),
            Some(a) if *a != r.poly => {
                outcome.push(MismatchKind::NormalForm, &label, a.to_string(), r.poly.to_string())
            }
            Some(_) => {}
        }
    }
    outcome
}

fn random_word(rng: &mut ChaCha8Rng, alphabet: &[Generator], max_len: usize) -> Word {
    let len = rng.gen_range(2..=max_len);
    Word((0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect())
}

/// Seeded random-word confluence test with the standard rules: each word is
/// reduced leftmost-innermost and by uniformly random redex choice.
pub fn fuzz_confluence(n: usize, max_len: usize, trials: usize, seed: u64) -> Result<ReductionReport> {
    fuzz_confluence_with(&RuleSet::standard(n), max_len, trials, seed, DEFAULT_STEP_CAP)
}

/// Trial `i` draws from its own ChaCha stream, so the report is a function
/// of the arguments alone even though trials run in parallel.
pub fn fuzz_confluence_with(
    rules: &RuleSet,
    max_len: usize,
    trials: usize,
    seed: u64,
    cap: u64,
) -> Result<ReductionReport> {
    if max_len < 2 {
        return Err(Error::out_of_range("max_len", max_len as i64, ">= 2"));
    }
    let alphabet = gens(rules.n);
    let outcomes: Vec<TrialOutcome> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let w = random_word(&mut rng, &alphabet, max_len);
            let chooser = ChaCha8Rng::seed_from_u64(rng.gen());
            compare_strategies(rules, &w, vec![Strategy::LeftmostInnermost, Strategy::Random(Box::new(chooser))], cap)
        })
        .collect();
    let mut report = ReductionReport {
        inputs: 0,
        max_steps: 0,
        mismatches: Vec::new(),
    };
    for o in outcomes {
        report.merge(o);
    }
    Ok(report)
}

/// Every word of length `1..=max_len`, reduced leftmost-innermost,
/// rightmost, and randomly (seeded by the word's position).
pub fn exhaustive_confluence(rules: &RuleSet, max_len: usize, cap: u64) -> ReductionReport {
    let alphabet = gens(rules.n);
    let mut words: Vec<Word> = Vec::new();
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| alphabet.iter().map(move |g| w.concat(&Word(vec![*g]))))
            .collect();
        words.extend(layer.iter().cloned());
    }
    let outcomes: Vec<TrialOutcome> = words
        .par_iter()
        .enumerate()
        .map(|(i, w)| {
            let strategies = vec![
                Strategy::LeftmostInnermost,
                Strategy::Rightmost,
                Strategy::Random(Box::new(ChaCha8Rng::seed_from_u64(i as u64))),
            ];
            compare_strategies(rules, w, strategies, cap)
        })
        .collect();
    let mut report = ReductionReport {
        inputs: 0,
        max_steps: 0,
        mismatches: Vec::new(),
    };
    for o in outcomes {
        report.merge(o);
    }
    report
}
