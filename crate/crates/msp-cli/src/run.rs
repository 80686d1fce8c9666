use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use matroid_zoo::{Instance, SpecError};
use sim_harness::{
    build_engine, csv_rows, estimate_measures, exhaustive_run, fixture, report_json, CompetitivenessReport,
    EngineSpec, HarnessError, TrialPlan, CSV_HEADER,
};

use crate::bounds::BoundExpr;
use crate::config::{plan_id, ExperimentConfig, InstanceSource};
use crate::CliError;

pub const DEFAULT_OUT: &str = "msp-out";

/// Command-line overrides; each wins over the config file.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub out_dir: Option<PathBuf>,
    pub width: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub plan: String,
    pub family: String,
    pub engine: String,
    pub measure: &'static str,
    /// Table expression when the bound is α(k) at its optimal p.
    pub expression: Option<String>,
    pub bound: f64,
    pub estimate: f64,
    pub ci95: f64,
    pub insufficient: bool,
}

impl SummaryRow {
    /// The estimate may exceed the bound by at most three half-widths.
    pub fn passed(&self) -> bool {
        !self.insufficient && self.estimate <= self.bound + 3.0 * self.ci95
    }
}

#[derive(Debug, Clone, Default)]
pub struct RunOutcome {
    pub rows: Vec<SummaryRow>,
    pub written: Vec<PathBuf>,
}

impl RunOutcome {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(SummaryRow::passed)
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<16} {:<12} {:<22} {:<13} {:<20} {:>10} {:>9}  verdict",
            "plan", "family", "engine", "measure", "α-bound", "estimate", "±ci95"
        );
        for r in &self.rows {
            let bound = match &r.expression {
                Some(e) if r.bound.fract() == 0.0 => e.clone(),
                Some(e) => format!("{e} ≈ {:.5}", r.bound),
                None => format!("{:.5}", r.bound),
            };
            let verdict = match (r.passed(), r.insufficient) {
                (true, _) => "pass",
                (false, true) => "fail (too few successes)",
                (false, false) => "fail",
            };
            let _ = writeln!(
                out,
                "{:<16} {:<12} {:<22} {:<13} {:<20} {:>10.5} {:>9.5}  {verdict}",
                r.plan, r.family, r.engine, r.measure, bound, r.estimate, r.ci95
            );
        }
        out
    }
}

fn instance_error(e: HarnessError) -> CliError {
    match e {
        HarnessError::Mismatch { .. } | HarnessError::Plan(_) | HarnessError::Generator(_) | HarnessError::TooLarge { .. } => {
            CliError::Config(e.to_string())
        }
        other => CliError::Instance(other.to_string()),
    }
}

fn load_instance(source: &InstanceSource, seed: u64) -> Result<Instance, CliError> {
    match source {
        InstanceSource::Inline(spec) => spec.build().map_err(|e| CliError::Instance(e.to_string())),
        InstanceSource::Generated(g) => fixture(g, seed).map_err(instance_error),
        InstanceSource::File(path) => Instance::load(path).map_err(|e| match e {
            SpecError::Invalid(z) => CliError::Instance(format!("{}: {z}", path.display())),
            other => CliError::Config(other.to_string()),
        }),
    }
}

fn expression(inst: &Instance, engine: &EngineSpec) -> Result<Option<String>, CliError> {
    if !matches!(engine, EngineSpec::ForbiddenSet { p: None }) {
        return Ok(None);
    }
    let built = build_engine(inst, engine).map_err(instance_error)?;
    Ok(built.forbidden_size.map(|k| BoundExpr::Alpha(k).expression()))
}

fn write_report(dir: &Path, id: &str, report: &CompetitivenessReport) -> Result<Vec<PathBuf>, CliError> {
    let io = |p: &Path, e: std::io::Error| CliError::Config(format!("cannot write {}: {e}", p.display()));
    let csv = dir.join(format!("{id}.csv"));
    let mut text = format!("{CSV_HEADER}\n");
    for row in csv_rows(report) {
        text.push_str(&row);
        text.push('\n');
    }
    fs::write(&csv, text).map_err(|e| io(&csv, e))?;
    let json = dir.join(format!("{id}.json"));
    fs::write(&json, report_json(report) + "\n").map_err(|e| io(&json, e))?;
    Ok(vec![csv, json])
}

/// Runs every plan in order and writes `<id>.csv` and `<id>.json` for each.
/// A seed override replaces every plan seed with `seed + index`.
pub fn run_experiments(config: &ExperimentConfig, opts: &RunOptions) -> Result<RunOutcome, CliError> {
    let out_dir = opts.out_dir.clone().or_else(|| config.out_dir.clone()).unwrap_or_else(|| DEFAULT_OUT.into());
    let width = opts.width.or(config.width).unwrap_or(1);
    if width == 0 {
        return Err(CliError::Config("width must be at least 1".into()));
    }
    let mut outcome = RunOutcome::default();
    if config.plans.is_empty() {
        return Ok(outcome);
    }
    fs::create_dir_all(&out_dir).map_err(|e| CliError::Config(format!("cannot create {}: {e}", out_dir.display())))?;
    let base = config.seed.unwrap_or(0);
    for (i, plan) in config.plans.iter().enumerate() {
        let id = plan_id(plan, i);
        let seed = match opts.seed {
            Some(s) => s.wrapping_add(i as u64),
            None => plan.seed.unwrap_or(base.wrapping_add(i as u64)),
        };
        let inst = load_instance(&plan.source(i)?, seed)?;
        let report = if plan.exact {
            exhaustive_run(&id, &inst, &plan.engine, plan.weights)
        } else {
            estimate_measures(&TrialPlan::new(id.clone(), &inst, plan.engine, plan.trials, seed).with_width(width).with_weights(plan.weights))
        }
        .map_err(instance_error)?;
        outcome.written.extend(write_report(&out_dir, &id, &report)?);
        let expression = expression(&inst, &plan.engine)?;
        for m in &report.measures {
            if let Some(bound) = m.bound {
                outcome.rows.push(SummaryRow {
                    plan: id.clone(),
                    family: report.family.to_string(),
                    engine: report.engine.to_string(),
                    measure: m.measure.name(),
                    expression: expression.clone(),
                    bound,
                    estimate: m.estimate,
                    ci95: m.ci95,
                    insufficient: m.insufficient,
                });
            }
        }
    }
    Ok(outcome)
}
