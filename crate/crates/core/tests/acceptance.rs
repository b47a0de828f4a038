//! Acceptance suite: one line per criterion, all exact.
//!
//! Run with `cargo test -p qcpn-core --test acceptance -- --nocapture` to see
//! the per-criterion report.

mod oracle;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use qcpn_core::qsphere::{exhaustive_confluence, ordered_sphere_relation, MismatchKind, DEFAULT_STEP_CAP};
use qcpn_core::{
    basis_matrix, certify_basis, e_class, e_class_formula, fundamental_decomposition, fuzz_confluence,
    line_class, nesting_check, normal_form, pair_mu, pairing_matrix, parse_nc, Decomposition, Generator,
    IntMatrix, KClass, LaurentQ, NCPoly, RuleSet, Word,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn unimodularity() -> Outcome {
    let start = Instant::now();
    for n in 1..=64 {
        let cert = certify_basis(n).map_err(|e| format!("n = {n}: {e}"))?;
        ensure(cert.det.abs().is_one(), || format!("n = {n}: det = {}", cert.det))?;
        let product = cert.matrix.mul(&cert.inverse).map_err(|e| e.to_string())?;
        ensure(product == IntMatrix::identity(n + 1), || format!("n = {n}: M * inverse != I"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))
}

fn closed_form_matches_decomposition() -> Outcome {
    for n in 2..=32 {
        for m in 2..=n {
            let direct = e_class(n, m).map_err(|e| e.to_string())?;
            let formula = e_class_formula(n, m).map_err(|e| e.to_string())?;
            ensure(direct == formula, || format!("n = {n}, m = {m}: {direct} vs {formula}"))?;
        }
    }
    Ok(())
}

fn projective_plane() -> Outcome {
    let d = fundamental_decomposition(2, 2).map_err(|e| e.to_string())?;
    ensure(d == Decomposition::from_parts([(-1, 1), (1, 1)]), || format!("F^2_2 = {d}"))?;
    let e22 = e_class(2, 2).map_err(|e| e.to_string())?;
    ensure(e22 == KClass::t_pow(2, 2), || format!("E^2_2 = {e22}"))?;
    let m = basis_matrix(2).map_err(|e| e.to_string())?;
    let expected = IntMatrix::from_rows([[1, 0, 0], [0, -1, 0], [0, 0, 1]]).unwrap();
    ensure(m == expected, || format!("M_2 = {m}"))?;
    let det = m.det().map_err(|e| e.to_string())?;
    ensure(det == BigInt::from(-1), || format!("det M_2 = {det}"))
}

fn pairing_identities() -> Outcome {
    let pascal = oracle::pascal(30);
    for n in 1..=16 {
        for m in 0..=30i64 {
            let l = line_class(n, m);
            for k in 0..=n {
                let expected = pascal[m as usize].get(k).cloned().unwrap_or_default();
                let got = pair_mu(k, &l).map_err(|e| e.to_string())?;
                ensure(got == expected, || format!("<mu_{k}, L^{n}_{m}> = {got}, expected {expected}"))?;
            }
        }
        let taut = line_class(n, -1);
        for k in 0..=n {
            let got = pair_mu(k, &taut).map_err(|e| e.to_string())?;
            ensure(got == oracle::sign(k), || format!("<mu_{k}, L^{n}_-1> = {got}"))?;
            for j in 0..=n {
                let got = pair_mu(k, &KClass::t_pow(n, j)).map_err(|e| e.to_string())?;
                let expected = if j == k { oracle::sign(j) } else { BigInt::zero() };
                ensure(got == expected, || format!("<mu_{k}, t^{j}> = {got} (n = {n})"))?;
            }
        }
    }
    Ok(())
}

fn sign_relation() -> Outcome {
    for n in 1..=16 {
        let classes = (0..=n).map(|j| e_class(n, j)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
        let pairing = pairing_matrix(&classes).map_err(|e| e.to_string())?;
        let m = basis_matrix(n).map_err(|e| e.to_string())?;
        for k in 0..=n {
            for j in 0..=n {
                let expected = oracle::sign(k) * m.get(j, k);
                ensure(*pairing.get(k, j) == expected, || format!("n = {n}, (k, j) = ({k}, {j})"))?;
            }
        }
    }
    Ok(())
}

fn line_bundle_distinctness() -> Outcome {
    for n in 1..=16 {
        let classes: Vec<_> = (-20..=20).map(|m| (m, line_class(n, m))).collect();
        for (m, a) in &classes {
            for (k, b) in &classes {
                ensure((a == b) == (m == k), || format!("n = {n}: [L_{m}] vs [L_{k}]"))?;
            }
        }
    }
    Ok(())
}

fn nesting() -> Outcome {
    for n in 1..=32 {
        let ok = nesting_check(n).map_err(|e| e.to_string())?;
        ensure(ok, || format!("M_{n} is not the upper-left block of M_{}", n + 1))?;
    }
    Ok(())
}

fn sphere_sum(n: usize) -> NCPoly {
    let text: Vec<String> = (0..=n).map(|m| format!("z{m}*z{m}s")).collect();
    parse_nc(&text.join(" + "), n).unwrap()
}

fn algebra_relations() -> Outcome {
    for n in 1..=4 {
        let report = qcpn_core::verify_defining_relations(n);
        ensure(report.passed(), || format!("n = {n}: {:?}", report.mismatches))?;
        ensure(report.count(MismatchKind::PhiImage) == 0, || format!("n = {n}: phi image"))?;
        let nf = normal_form(&sphere_sum(n)).map_err(|e| e.to_string())?;
        ensure(nf == NCPoly::one(n), || format!("n = {n}: sphere relation reduces to {nf}"))?;
    }
    Ok(())
}

fn confluence_evidence() -> Outcome {
    for n in 1..=2 {
        let report = exhaustive_confluence(&RuleSet::standard(n), 2, DEFAULT_STEP_CAP);
        ensure(report.passed(), || format!("two-letter words, n = {n}: {:?}", report.mismatches))?;
    }
    for n in 1..=4 {
        let report = fuzz_confluence(n, 6, 10_000, 42).map_err(|e| e.to_string())?;
        ensure(report.inputs == 10_000, || format!("n = {n}: {} trials", report.inputs))?;
        ensure(report.count(MismatchKind::StepCap) == 0, || format!("n = {n}: step cap hit"))?;
        ensure(report.count(MismatchKind::Degree) == 0, || format!("n = {n}: degree not preserved"))?;
        ensure(report.passed(), || {
            let first = &report.mismatches[0];
            format!("n = {n}: {} mismatches, first {first:?}", report.mismatches.len())
        })?;
    }
    Ok(())
}

fn sphere_rule_coefficients() -> Outcome {
    for n in 1..=6 {
        let got = ordered_sphere_relation(n).map_err(|e| e.to_string())?;
        let expected = NCPoly::from_terms(
            n,
            (0..=n).map(|k| {
                let w = Word(vec![Generator::zs(k as u16), Generator::z(k as u16)]);
                (w, LaurentQ::q_pow(-2 * k as i32))
            }),
        );
        ensure(got == expected, || format!("n = {n}: {got}"))?;
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("unimodularity of M_n for n = 1..64 (< 10 s)", unimodularity),
        ("closed form of E^n_m equals decomposition route, 2 <= m <= n <= 32", closed_form_matches_decomposition),
        ("n = 2 ground truth", projective_plane),
        ("pairing identities", pairing_identities),
        ("pairing matrix equals signed transpose of M_n, n <= 16", sign_relation),
        ("line bundles pairwise distinct, |m| <= 20, n <= 16", line_bundle_distinctness),
        ("nesting of M_n in M_(n+1), n <= 32", nesting),
        ("defining relations, phi images and sphere relation, n <= 4", algebra_relations),
        ("confluence evidence: exhaustive and 10k-word fuzz", confluence_evidence),
        ("sphere rule coefficients q^-2k from R1-R3, n <= 6", sphere_rule_coefficients),
    ];
    let mut failures = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(()) => println!("PASS [{:>2}] {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                println!("FAIL [{:>2}] {name} ({secs:.2}s): {e}", i + 1);
                failures.push(i + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
