//! One test per acceptance criterion. Run with `--nocapture` to see the
//! pass/fail line of every criterion.

use detbetti::acceptance::{self, CriterionResult, Options};

fn report(result: CriterionResult) {
    println!("{result}");
    assert!(result.passed, "{result}");
}

#[test]
fn criterion_1_veronese_golden() {
    report(acceptance::veronese_golden(&Options::default()));
}

#[test]
fn criterion_2_closed_form_oracle() {
    report(acceptance::closed_form_oracle(&Options::default()));
}

#[test]
fn criterion_3_bound_scan() {
    report(acceptance::bound_scan(&Options::default()));
}

#[test]
fn criterion_4_erratum_detection() {
    report(acceptance::erratum_detection(&Options::default()));
}

#[test]
fn criterion_5_tightness_purity_constant() {
    report(acceptance::tightness_purity(&Options::default()));
}

#[test]
fn criterion_5a_mixed_tightness() {
    report(acceptance::mixed_tightness(&Options::default()));
}

#[test]
fn criterion_5b_factorial_tightness() {
    report(acceptance::factorial_tightness(&Options::default()));
}

#[test]
fn criterion_6_hilbert_consistency() {
    report(acceptance::hilbert_consistency(&Options::default()));
}

#[test]
fn criterion_7_divisor_degree() {
    report(acceptance::divisor_degree(&Options::default()));
}

#[test]
fn criterion_8_ci_powers() {
    report(acceptance::ci_powers(&Options::default()));
}
