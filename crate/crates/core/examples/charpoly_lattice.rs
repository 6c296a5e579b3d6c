//! Intersection lattice, Möbius values and the characteristic polynomial.
//!
//!     cargo run --example charpoly_lattice [NAME]

use hyperarr::builtin;
use hyperarr::lattice::FlatLattice;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "x3".into());
    let a = builtin::by_name(&name).unwrap_or_else(|e| panic!("{e}"));
    println!("{a}");

    let l = FlatLattice::build(&a);
    println!("{} flats, rank {}", l.len(), l.rank());
    for (c, level) in l.levels.iter().enumerate() {
        let mu: Vec<i64> = level.iter().map(|&i| l.mobius[i]).collect();
        println!("  codim {c}: {} flats, mobius {mu:?}", level.len());
    }
    println!("chi(t) = {}", l.char_poly().display_in("t"));
    println!("betti  = {:?}", l.betti_numbers());

    // deletion-restriction through every hyperplane
    for h in 0..a.len() {
        let del = FlatLattice::build(&a.delete(h).unwrap()).char_poly();
        let res = FlatLattice::build(&a.restrict(h).unwrap().arrangement).char_poly();
        assert_eq!(l.char_poly(), &del - &res);
    }
    println!("chi(A) = chi(A') - chi(A^H) for all {} hyperplanes", a.len());
}
