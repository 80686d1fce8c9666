//! Online selection rules for the ordinal matroid secretary problem.
//!
//! Every rule implements [`OnlineEngine`]: it draws an [`ArrivalTrial`] and
//! then runs on it, taking any further coin flips from the same
//! [`Randomness`]. Rules whose guarantee comes from forbidden sets also
//! implement [`ForbiddenSetEngine`], which the exhaustive verifier consumes.

mod engine;
mod error;
mod forbidden;
mod greedy;
mod key_lemma;
pub mod line_sets;
mod random;
mod trial;
mod uniform;
mod verify;

pub use engine::{ForbiddenSetEngine, OnlineEngine};
pub use error::EngineError;
pub use forbidden::{
    ClassicalSecretary, FramedEngine, ForestEngine, GammoidEngine, LaminarEngine, MatchingRule, PackingEngine,
    SemiplanarEngine, TransversalEngine,
};
pub use greedy::{improving_count, ImprovingGreedy, OfflineGreedy, OnlineGreedy, ThresholdPrice};
pub use key_lemma::{discrete_product_bound, key_lemma_bound, key_lemma_values, KeyLemmaParams};
pub use random::{binomial_pmf, enumerate_outcomes, mix64, trial_seed, ChaChaSource, Randomness, ScriptedSource};
pub use trial::{draw_permutation, draw_sample_size, ArrivalTrial, SampleRule, SelectionOutcome, TraceStep};
pub use uniform::{time_class, KleinbergOriginal, UniformVariant};
pub use verify::{
    verify_forbidden_property, verify_forbidden_sampled, Counterexample, ForbiddenReport, Violation, VERIFY_LIMIT,
};
