//! Inductive freeness certificates and non-freeness witnesses.
//!
//!     cargo run --example freeness_certificate

use hyperarr::builtin;
use hyperarr::freeness::{self, FreenessSearch, Split};

fn main() {
    let mut search = FreenessSearch::new(freeness::DEFAULT_BUDGET);
    for name in ["boolean3", "concurrent5", "x3", "x3_h_x", "x3_h_y", "three_generic"] {
        let a = builtin::by_name(name).unwrap();
        let split = match freeness::factorization_test(&a) {
            Split::SplitsWithExponents(e) => format!("chi splits {e:?}"),
            Split::DoesNotSplit => "chi does not split".into(),
        };
        let cert = search.certify(&a);
        print!("{name:<14} {split:<26} {:?}", cert.status);
        match (&cert.exponents, &cert.witness, &cert.unknown_reason) {
            (Some(e), _, _) => println!(" exponents {e:?}, {} trace nodes", cert.trace.len()),
            (_, Some(w), _) => println!(" witness {}", serde_json::to_string(w).unwrap()),
            (_, _, Some(r)) => println!(" ({r:?})"),
            _ => println!(),
        }
        if cert.is_free() {
            freeness::replay(&a, &cert).expect("certificate replays");
        }
    }

    let cert = search.certify(&builtin::x3());
    println!("\ninduction for X3:");
    for step in &cert.trace {
        println!("  #{:<2} dim {} |A|={} {:?}  {}", step.id, step.dim, step.hyperplanes, step.exponents, step.arrangement);
    }
}
