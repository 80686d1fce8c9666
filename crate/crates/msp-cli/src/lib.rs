//! Batch driver for the online selection experiments: reads a JSON config,
//! runs each plan, writes one CSV and one JSON report per plan and prints a
//! summary against the α(k) guarantees.

mod bounds;
mod config;
mod run;
mod verify;

pub use bounds::{render_table, table_rows, BoundExpr, TableRow};
pub use config::{load_config, parse_config, plan_id, ExperimentConfig, InstanceSource, PlanConfig};
pub use run::{run_experiments, RunOptions, RunOutcome, SummaryRow, DEFAULT_OUT};
pub use verify::run_verify;

pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_INSTANCE: i32 = 3;
pub const EXIT_ACCEPTANCE: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("instance invariant violated: {0}")]
    Instance(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Instance(_) => EXIT_INSTANCE,
        }
    }
}
