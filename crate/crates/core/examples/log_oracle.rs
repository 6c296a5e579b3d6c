//! Hilbert functions of logarithmic derivation modules by exact linear algebra.
//!
//!     cargo run --release --example log_oracle [NAME] [CUTOFF]

use hyperarr::builtin;
use hyperarr::oracle::{self, LogOracle};
use hyperarr::st::StEngine;

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "x3_restricted_x".into());
    let a = builtin::by_name(&name).unwrap_or_else(|e| panic!("{e}"));
    let cutoff = args.next().map(|c| c.parse().expect("integer cutoff")).unwrap_or_else(|| oracle::default_cutoff(&a));

    let lo = LogOracle::new();
    let table = lo.hilbert_table(&a, cutoff).unwrap();
    println!("dim D^p(A)_d for {name}, d = 0..{cutoff}");
    for p in 0..=a.dim() {
        println!("  p={p}: {:?}", table.row(p));
    }
    assert!(table.closed_form_violations().is_empty());

    // the alternating sum over p recovers Psi when the tail is long enough
    let truncated = oracle::psi_truncated_from_table(&table);
    let mut engine = StEngine::new(hyperarr::freeness::DEFAULT_BUDGET);
    match engine.psi(&a).psi {
        Some(psi) => println!("agrees with Psi through x^{}: {}", truncated.cutoff(), truncated.matches_polynomial(&psi)),
        None => println!("Psi unknown to the engine"),
    }
    if let Some(p) = truncated.to_polynomial(oracle::ZERO_TAIL) {
        println!("Psi from the table: {p}");
    }

    // an explicit basis in low degree
    let basis = oracle::derivation_basis(&a, 1, 1).unwrap();
    println!("basis of D^1(A)_1 ({} elements):", basis.len());
    for theta in basis.iter().take(4) {
        let terms: Vec<String> = theta.iter().map(|(i, f)| format!("({f}) d{i:?}")).collect();
        println!("  {}", terms.join(" + "));
    }
}
