//! Acceptance suite: one test per criterion; each prints its pass/fail line
//! (visible with --nocapture) and asserts the criterion holds at the stated
//! tolerance (all criteria here are exact).

use maxab_core::verify;

fn run(id: usize) {
    let r = verify::run_criterion(id);
    println!("{}", r.line());
    assert!(r.pass, "{}", r.line());
}

#[test]
fn criterion_01_heisenberg_decomposition() {
    run(1);
}

#[test]
fn criterion_02_quotient_existence_vs_oracle() {
    run(2);
}

#[test]
fn criterion_03_spin_search_and_fixtures() {
    run(3);
}

#[test]
fn criterion_04_half_spin_fixtures() {
    run(4);
}

#[test]
fn criterion_05_bd_invariants_family() {
    run(5);
}

#[test]
fn criterion_06_f2_classification_counts() {
    run(6);
}

#[test]
fn criterion_07_root_fixed_types() {
    run(7);
}

#[test]
fn criterion_08_e7_levi_criterion() {
    run(8);
}

#[test]
fn criterion_09_matrix_fixtures() {
    run(9);
}

#[test]
fn criterion_10_property_suites() {
    run(10);
}

#[test]
fn catalog_regression_suite() {
    let r = verify::catalog_regression();
    println!("{}", r.line());
    assert!(r.pass, "{}", r.line());
}
