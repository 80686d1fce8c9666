//! Ordered matroids over dense element ids `0..n`.
//!
//! Everything downstream talks to a matroid through the [`Matroid`] oracle and a
//! [`ValueOrder`] ranking the elements from best to worst.

mod brute;
mod error;
mod matroid;
mod minor;
mod order;
mod tracker;

pub use brute::{brute_force_opt, verify_matroid_axioms, SetSystem, AXIOM_LIMIT, BRUTE_FORCE_LIMIT};
pub use error::MatroidError;
pub use matroid::{check_set, fundamental_circuit, greedy_opt, rank, span, Matroid, OrderedMatroid};
pub use minor::{contract, restrict, Minor};
pub use order::ValueOrder;
pub use tracker::OptTracker;
