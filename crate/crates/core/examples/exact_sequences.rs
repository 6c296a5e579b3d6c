//! Degree-wise defects of the Euler and B-sequences, and Terao's B membership.
//!
//!     cargo run --release --example exact_sequences

use hyperarr::builtin;
use hyperarr::oracle::{self, LogOracle};

fn defects(reports: &[oracle::DegreeReport]) -> Vec<i64> {
    reports.iter().map(|r| r.defect).collect()
}

fn main() {
    let lo = LogOracle::new();
    let x3 = builtin::x3();
    let cutoff = 9;
    // x + y + z: the deletion is free; y: it is not
    for (label, h) in [("x + y + z", 7), ("y", 1)] {
        println!("X3, H = {label}");
        for p in 1..x3.dim() {
            let euler = oracle::euler_exactness_check(&lo, &x3, h, p, cutoff).unwrap();
            let bseq = oracle::bseq_exactness_check(&lo, &x3, h, p, cutoff).unwrap();
            println!("  p={p} euler {:?}", defects(&euler));
            println!("      bseq  {:?}", defects(&bseq));
        }
    }

    let a = builtin::boolean(3);
    for r in oracle::terao_b_membership_check(&a, 0, 4).unwrap() {
        println!("boolean3, d={}: {} basis elements, {} outside B", r.d, r.basis_size, r.failures);
    }
}
