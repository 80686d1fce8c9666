//! Monte Carlo and exact evaluation of online selection rules.
//!
//! A [`TrialPlan`] binds an engine to an instance; [`estimate_measures`] runs
//! it and reports the utility, ordinal, intersection and probability ratios
//! with 95% intervals. [`exhaustive_run`] computes the same report exactly on
//! small ground sets and is the reference the estimators are checked against.

mod engines;
mod error;
mod generate;
mod measures;
mod output;
mod plan;
mod suite;
mod weights;

pub use engines::{build_engine, forbidden_engine, improving_greedy_bound, Bounds, BuiltEngine, EngineSpec};
pub use error::HarnessError;
pub use generate::{describe, generate_instance, GeneratorSpec};
pub use measures::{
    dominance_check, CompetitivenessReport, Dominance, Measure, MeasureEstimate, OrdinalPoint, SUCCESS_FLOOR, Z95,
};
pub use output::{csv_rows, report_json, write_csv, CSV_HEADER};
pub use plan::{estimate_measures, exhaustive_run, TrialPlan, CHUNK, EXHAUSTIVE_LIMIT};
pub use suite::{
    describe_counterexample, fixture, fixture_generators, history_dependent_mutant, verify_suite, verify_suite_with,
    CheckResult, SuiteReport, VerifyLevel, FIXTURE_SEEDS,
};
pub use weights::{is_compatible, WeightPreset};
