//! Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

use std::sync::OnceLock;

use hyperarr::builtin::*;
use hyperarr::oracle::{default_cutoff, psi_truncated_from_table, LogOracle, ZERO_TAIL};
use hyperarr::reference::{self, CriterionOutcome};

fn oracle() -> &'static LogOracle {
    static ORACLE: OnceLock<LogOracle> = OnceLock::new();
    ORACLE.get_or_init(LogOracle::new)
}

fn check(outcome: CriterionOutcome) {
    println!("{outcome}");
    assert!(outcome.passed, "{outcome}");
}

#[test]
fn criterion_01_x3_delete_y() {
    check(reference::criterion_1());
}

#[test]
fn criterion_02_x3_delete_x() {
    check(reference::criterion_2());
}

#[test]
fn criterion_03_three_generic() {
    check(reference::criterion_3());
}

#[test]
fn criterion_04_chi_specialization() {
    check(reference::criterion_4());
}

#[test]
fn criterion_05_oracle_vs_engine() {
    check(reference::criterion_5(oracle()));
}

#[test]
fn criterion_06_exact_sequences() {
    check(reference::criterion_6(oracle()));
}

#[test]
fn criterion_07_restricted_hilbert_series() {
    check(reference::criterion_7(oracle()));
}

#[test]
fn criterion_08_b_membership() {
    check(reference::criterion_8());
}

#[test]
fn criterion_09_reduced_polynomial_checks() {
    check(reference::criterion_9());
}

#[test]
fn criterion_10_property_suite() {
    check(reference::criterion_10(oracle()));
}

/// The deletion rule applied to the stated inputs, cross-checked against the
/// oracle truncation of `Ψ(X3 ∖ {x = 0})`.
#[test]
fn x3_delete_x_derived_values() {
    let r = reference::psi_of_deletion(&x3(), X3_X);
    assert!(r.chi_check);
    assert_eq!(r.psi, Some(reference::x3_deleted_x_derived()));
    assert_eq!(r.reduced, Some(reference::x3_deleted_x_reduced_derived()));
    let a = x3_h_x();
    let table = oracle().hilbert_table(&a, default_cutoff(&a)).unwrap();
    let truncated = psi_truncated_from_table(&table);
    assert_eq!(truncated.to_polynomial(ZERO_TAIL), Some(reference::x3_deleted_x_derived()));
    println!("x3 minus x: engine and oracle agree on the derived Ψ");
}

/// Right exactness of the Euler sequence where the deletion is free, and its
/// failure on the non-free deletion `X3 ∖ {y = 0}`.
#[test]
fn euler_sequence_on_free_deletion() {
    use hyperarr::freeness::FreenessSearch;
    use hyperarr::oracle::euler_exactness_check;
    let a = x3();
    let h = a.index_of(&hyperarr::LinearForm::from_i64s(&[1, 1, 1, 0]).unwrap()).unwrap();
    let mut search = FreenessSearch::default();
    assert_eq!(search.exponents(&a.delete(h).unwrap()), Some(vec![1, 2, 3, 3]));
    assert_eq!(search.exponents(&a.delete(X3_Y).unwrap()), None);
    for p in 1..=3 {
        let free = euler_exactness_check(oracle(), &a, h, p, 8).unwrap();
        assert!(free.iter().all(|r| r.defect == 0), "p={p}");
        let not_free = euler_exactness_check(oracle(), &a, X3_Y, p, 8).unwrap();
        assert!(not_free.iter().any(|r| r.defect != 0), "p={p}");
    }
    println!("euler sequence: exact on x3 minus x+y+z, not on x3 minus y");
}
