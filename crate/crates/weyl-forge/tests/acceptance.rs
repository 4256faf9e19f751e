//! Acceptance gate: every graded criterion as one test with a PASS/FAIL line.
//!
//! Each test runs its full-size seeded suite (or frozen worked example),
//! prints `criterion N (<label>): PASS|FAIL`, and then asserts, so the
//! verdict for every criterion is visible in one place and a red test names
//! the criterion it belongs to.

use std::time::Instant;

use weyl_forge::linalg::{sym_eigen, SymMatrix};
use weyl_forge::poly::RootedPoly;
use weyl_forge::realize::{realize_bordered, realize_weyl_converse};
use weyl_forge::suites::{
    bordered_suite, common_factor_suite, degenerate_suite, derivative_suite, equivalence_suite,
    fault_injection_suite, realization_suite, relation_properties_suite, split_soundness_suite,
    weyl_forward_suite, SuiteReport,
};

fn conclude(criterion: usize, label: &str, reports: &[SuiteReport]) {
    let passed = reports.iter().all(|r| r.passed());
    println!(
        "criterion {criterion} ({label}): {}",
        if passed { "PASS" } else { "FAIL" }
    );
    for r in reports {
        assert!(r.passed(), "{}; examples: {:#?}", r.summary(), r.examples);
    }
}

fn conclude_flag(criterion: usize, label: &str, passed: bool, detail: &str) {
    println!(
        "criterion {criterion} ({label}): {}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "{detail}");
}

#[test]
fn criterion_1_bulk_realizations() {
    let start = Instant::now();
    let report = realization_suite(500);
    let elapsed = start.elapsed();
    let in_time = elapsed.as_secs_f64() < 30.0;
    println!(
        "criterion 1 (500 seeded realizations, {:.2}s): {}",
        elapsed.as_secs_f64(),
        if report.passed() && in_time {
            "PASS"
        } else {
            "FAIL"
        }
    );
    assert!(
        report.passed(),
        "{}; examples: {:#?}",
        report.summary(),
        report.examples
    );
    assert!(in_time, "suite took {elapsed:?}, budget is 30s");
}

#[test]
fn criterion_2_exact_two_by_two_example() {
    let f = RootedPoly::new(vec![1.0, -1.0]).unwrap();
    let g = RootedPoly::new(vec![2.0, 0.0]).unwrap();
    let r = realize_weyl_converse(&f, &g, 1, 0, 1e-9).unwrap();

    let mut ok = r.a == SymMatrix::diag(&[1.0, -1.0]) && r.plus.len() == 1 && r.minus.is_empty();
    let mut detail = String::new();
    if ok {
        let alpha = &r.plus[0];
        let outer = [
            alpha[0] * alpha[0],
            alpha[0] * alpha[1],
            alpha[1] * alpha[1],
        ];
        let expected = [0.5, 0.75f64.sqrt(), 1.5];
        for (got, want) in outer.iter().zip(&expected) {
            if (got - want).abs() > 1e-12 {
                ok = false;
                detail = format!("outer product entries {outer:?}, expected {expected:?}");
            }
        }
        let eig = sym_eigen(&r.b).unwrap();
        for (got, want) in eig.values.iter().zip(&[2.0, 0.0]) {
            if (got - want).abs() > 1e-12 {
                ok = false;
                detail = format!("eigenvalues {:?}, expected [2, 0]", eig.values);
            }
        }
    } else {
        detail = format!("unexpected certificate shape: A = {:?}", r.a.rows());
    }
    conclude_flag(2, "exact 2x2 worked example", ok, &detail);
}

#[test]
fn criterion_3_predicate_equivalence() {
    conclude(
        3,
        "predicate vs root-count equivalence, 10000 instances",
        &[equivalence_suite(10_000)],
    );
}

#[test]
fn criterion_4_relation_algebra() {
    conclude(
        4,
        "relation algebra, common factors, derivative: 5000 each",
        &[
            relation_properties_suite(5_000),
            common_factor_suite(5_000),
            derivative_suite(5_000),
        ],
    );
}

#[test]
fn criterion_5_split_soundness() {
    conclude(
        5,
        "split postconditions over all admissible (s,t,d)",
        &[split_soundness_suite(1_000)],
    );
}

#[test]
fn criterion_6_bordered_extensions() {
    let suite = bordered_suite(200);

    // frozen worked example: border (1,-1) into (2,0,-2)
    let f = RootedPoly::new(vec![1.0, -1.0]).unwrap();
    let g = RootedPoly::new(vec![2.0, 0.0, -2.0]).unwrap();
    let r = realize_bordered(&f, &g, 1e-9).unwrap();
    let mut ok = r.m.leading_block(2) == SymMatrix::diag(&[1.0, -1.0]);
    let mut detail = String::from("leading block is not exactly diag(1, -1)");
    if ok {
        let eig = sym_eigen(&r.m).unwrap();
        for (got, want) in eig.values.iter().zip(&[2.0, 0.0, -2.0]) {
            if (got - want).abs() > 1e-10 {
                ok = false;
                detail = format!("eigenvalues {:?}, expected [2, 0, -2]", eig.values);
            }
        }
    }

    let passed = suite.passed() && ok;
    println!(
        "criterion 6 (200 bordered extensions + worked example): {}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(
        suite.passed(),
        "{}; examples: {:#?}",
        suite.summary(),
        suite.examples
    );
    assert!(ok, "{detail}");
}

#[test]
fn criterion_7_forward_inequality() {
    conclude(
        7,
        "forward eigenvalue bounds on 1000 random perturbations",
        &[weyl_forward_suite(1_000)],
    );
}

#[test]
fn criterion_8_degenerate_coverage() {
    conclude(8, "degenerate inputs", &[degenerate_suite()]);
}

#[test]
fn criterion_9_fault_injection() {
    conclude(
        9,
        "certificate corruptions flip exactly their check",
        &[fault_injection_suite()],
    );
}
