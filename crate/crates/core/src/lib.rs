//! Exact invariants of central hyperplane arrangements.

pub mod arrangement;
pub mod cli;
pub mod corpus;
pub mod exact;
pub mod freeness;
pub mod lattice;
pub mod oracle;
pub mod reference;
pub mod st;

pub use arrangement::{builtin, Arrangement, ArrangementError, LinearForm};
