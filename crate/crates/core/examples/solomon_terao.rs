//! Solomon-Terao polynomials through the free formula, addition and deletion.
//!
//!     cargo run --example solomon_terao

use hyperarr::builtin;
use hyperarr::st::{self, PsiResult, StEngine};

fn show(label: &str, r: &PsiResult) {
    match (&r.psi, &r.reduced) {
        (Some(psi), Some(red)) => {
            println!("{label}");
            println!("  Psi(x,t)    = {psi}");
            println!("  Psi(x,-1)   = {}", red.display_in("x"));
            println!("  chi check   : {}", r.chi_check);
        }
        _ => println!("{label}: {:?}", r.status),
    }
}

fn main() {
    // closed form for a free arrangement
    let free = st::psi_free(&[1, 3, 3, 3]);
    println!("free formula, exponents (1,3,3,3):\n  {free}\n");

    let mut engine = StEngine::new(hyperarr::freeness::DEFAULT_BUDGET);
    let x3 = builtin::x3();
    show("X3", &engine.psi(&x3));
    assert_eq!(engine.psi(&x3).psi, Some(free));

    // neither deletion below is free; the engine routes through rule applications
    for (name, h) in [("X3 minus y", 1), ("X3 minus x", 0)] {
        let r = engine.psi(&x3.delete(h).unwrap());
        show(name, &r);
        for step in &r.method_trace {
            let via = step.hyperplane.as_deref().unwrap_or("");
            println!("    #{} {:?} {via} on {}", step.id, step.rule, step.arrangement);
        }
    }

    // hand-applied deletion formula: Psi(A') = Psi(A) + x^d (t(x-1) - 1) Psi(A^H)
    let res = x3.restrict(1).unwrap().arrangement;
    let d = (x3.len() - 1 - res.len()) as u32;
    let psi_res = engine.psi(&res).psi.unwrap();
    let by_hand = st::psi_deletion(&engine.psi(&x3).psi.unwrap(), &psi_res, d);
    assert_eq!(Some(by_hand), engine.psi(&x3.delete(1).unwrap()).psi);
    println!("\ndeletion formula with d = {d} agrees with the engine");

    // generic arrangements have a closed form in every dimension
    for ell in 2..=4 {
        println!("generic, ell = {ell}: {}", st::psi_generic(ell).unwrap());
    }
}
