//! Degree, monicity, palindromy and geometric splitting of reduced Psi.
//!
//!     cargo run --example conjectures

use hyperarr::corpus;
use hyperarr::st::{self, StEngine};

fn main() {
    let mut engine = StEngine::new(hyperarr::freeness::DEFAULT_BUDGET);
    println!("{:<16} {:>3} {:>6} {:>5} {:>6}  split", "arrangement", "|A|", "deg=n", "monic", "palin");
    let mut targets: Vec<(String, _)> = corpus::corpus().into_iter().map(|a| (corpus::name(&a), a)).collect();
    let x3 = hyperarr::builtin::x3();
    for h in [0, 1, 7] {
        targets.push((format!("x3 - #{h}"), x3.delete(h).unwrap()));
    }
    for (name, a) in targets {
        let r = engine.psi(&a);
        let Some(red) = r.reduced else {
            println!("{name:<16} {:>3}  unknown", a.len());
            continue;
        };
        let c = st::conjecture_checks(&red, a.len());
        let split = c.splits_as_product_of_geometric_sums.map(|d| format!("{d:?}")).unwrap_or_else(|| "-".into());
        println!("{name:<16} {:>3} {:>6} {:>5} {:>6}  {split}", a.len(), c.degree_equals_n, c.monic, c.palindromic);
    }
}
