//! Layered-MSP: bucketed selection against a visible half-sample, and the two
//! reductions that turn it into an ordinal and a probability algorithm for the
//! matroid secretary problem.
//!
//! Threshold elements are never part of the ground set. Each one is stored as
//! a cut in the value order: position `c` puts every element at position ≥ `c`
//! below it, so layer membership needs nothing but rank positions.

mod coupling;
mod error;
mod feldman;
mod instance;
mod reduction;

pub use coupling::{coupling_fidelity, coupling_procedure, sample_optimum_and_improvers, COUPLING_LIMIT};
pub use error::LayeredError;
pub use feldman::{build_buckets, feldman_bound, BucketPlan, FeldmanLayered, LayerRange, LayeredAlgorithm, Parity};
pub use instance::{LayerEstimate, LayeredFixture, LayeredInstance};
pub use reduction::{geometric_thresholds, OrdinalReduction, ProbabilityReduction};
