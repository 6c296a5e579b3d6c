//! The dual series Phi and its inversion back to Psi.
//!
//!     cargo run --example dual_phi

use hyperarr::builtin;
use hyperarr::exact::TruncatedSeries;
use hyperarr::st::{self, StEngine};

fn main() {
    let mut engine = StEngine::new(hyperarr::freeness::DEFAULT_BUDGET);
    for name in ["boolean3", "x3", "x3_h_y", "three_generic"] {
        let a = builtin::by_name(name).unwrap();
        let Some(psi) = engine.psi(&a).psi else {
            println!("{name}: Psi unknown");
            continue;
        };
        let (n, ell) = (a.len(), a.dim());
        let phi = st::phi_from_psi(&psi, n, ell, 3 * n).unwrap();
        println!("{name}: Phi from x^{} through x^{}", phi.offset(), phi.cutoff());
        for e in phi.offset()..phi.offset() + 3 {
            println!("  [x^{e}] {}", phi.coefficient(e).unwrap().display_in("t"));
        }
        let back: TruncatedSeries = st::psi_from_phi(&phi, n, ell).unwrap();
        assert!(back.matches_polynomial(&psi));
        println!("  round trip recovers Psi");
    }
}
