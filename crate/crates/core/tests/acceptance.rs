//! Acceptance suite: one test per criterion, each printing its pass/fail
//! line. Run with `cargo test -p oramsey-core --test acceptance` (add
//! `-- --nocapture` to see the lines for passing criteria too).

use oramsey_core::verify;

fn check(id: usize) {
    let outcome = verify::run(id).expect("known criterion id");
    println!("{}", outcome.line());
    assert!(outcome.pass, "{}", outcome.line());
}

#[test]
fn criterion_01_erdos_szekeres_exactness() {
    check(1);
}

#[test]
fn criterion_02_es_extractor_totality() {
    check(2);
}

#[test]
fn criterion_03_position_selection_suite() {
    check(3);
}

#[test]
fn criterion_04_chain_oracle_equivalence() {
    check(4);
}

#[test]
fn criterion_05_kst_soundness() {
    check(5);
}

#[test]
fn criterion_06_chain_inequality_sweep() {
    check(6);
}

#[test]
fn criterion_07_cnf_cross_validation() {
    check(7);
}

#[test]
fn criterion_08_bound_evaluator() {
    check(8);
}

#[test]
fn criterion_09_blowup_certification() {
    check(9);
}

#[test]
fn criterion_10_pipeline_validity() {
    check(10);
}

#[test]
fn criterion_11_tournament_suite() {
    check(11);
}
