//! Runs the reference checks and prints one line each.
//!
//!     cargo run --release --example acceptance_report [ID...]

use hyperarr::oracle::LogOracle;
use hyperarr::reference;

fn main() {
    let ids: Vec<usize> = std::env::args().skip(1).map(|s| s.parse().expect("criterion id")).collect();
    let lo = LogOracle::new();
    let outcomes = if ids.is_empty() {
        reference::run_all(&lo)
    } else {
        ids.iter().filter_map(|&i| reference::run_criterion(i, &lo)).collect()
    };
    for o in &outcomes {
        println!("{o}");
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("{} passed, {failed} failed", outcomes.len() - failed);
}
