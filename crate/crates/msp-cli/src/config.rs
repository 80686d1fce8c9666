use std::path::{Path, PathBuf};

use matroid_zoo::InstanceSpec;
use serde::Deserialize;
use sim_harness::{EngineSpec, GeneratorSpec, WeightPreset};

use crate::CliError;

/// A batch of plans. Fields left out fall back to the command line or to
/// defaults: output under `msp-out`, one worker, base seed 0.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub plans: Vec<PlanConfig>,
    #[serde(default)]
    pub out_dir: Option<PathBuf>,
    #[serde(default)]
    pub width: Option<usize>,
    /// Base seed; plan `i` without its own seed uses `seed + i`.
    #[serde(default)]
    pub seed: Option<u64>,
}

/// One (instance, engine, trials, seed) tuple. Exactly one of `instance`,
/// `generate` and `path` names the instance.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanConfig {
    #[serde(default)]
    pub id: Option<String>,
    #[serde(default)]
    pub instance: Option<InstanceSpec>,
    #[serde(default)]
    pub generate: Option<GeneratorSpec>,
    #[serde(default)]
    pub path: Option<PathBuf>,
    pub engine: EngineSpec,
    pub trials: u64,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub weights: WeightPreset,
    /// Enumerate every outcome instead of sampling; `trials` is ignored.
    #[serde(default)]
    pub exact: bool,
}

#[derive(Debug, Clone)]
pub enum InstanceSource {
    Inline(InstanceSpec),
    Generated(GeneratorSpec),
    File(PathBuf),
}

impl PlanConfig {
    pub fn source(&self, index: usize) -> Result<InstanceSource, CliError> {
        match (&self.instance, &self.generate, &self.path) {
            (Some(spec), None, None) => Ok(InstanceSource::Inline(spec.clone())),
            (None, Some(g), None) => Ok(InstanceSource::Generated(g.clone())),
            (None, None, Some(p)) => Ok(InstanceSource::File(p.clone())),
            _ => Err(CliError::Config(format!(
                "plan {index}: give exactly one of \"instance\", \"generate\" or \"path\""
            ))),
        }
    }
}

/// Parses and checks a config; `base` resolves relative instance paths.
/// Syntax and schema errors carry the line and column serde reports.
pub fn parse_config(text: &str, base: &Path) -> Result<ExperimentConfig, CliError> {
    // serde_json errors already end in "at line L column C"
    let mut config: ExperimentConfig = serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
    if config.width == Some(0) {
        return Err(CliError::Config("width must be at least 1".into()));
    }
    let mut seen = std::collections::BTreeSet::new();
    for (i, plan) in config.plans.iter_mut().enumerate() {
        plan.source(i)?;
        if let Some(p) = &plan.path {
            if p.is_relative() {
                plan.path = Some(base.join(p));
            }
        }
        let id = plan_id(plan, i);
        if id.is_empty() || !id.chars().all(|c| c.is_ascii_alphanumeric() || "-_.".contains(c)) || id.starts_with('.') {
            return Err(CliError::Config(format!("plan {i}: id {id:?} is not a usable file name")));
        }
        if !seen.insert(id.clone()) {
            return Err(CliError::Config(format!("plan {i}: id {id:?} is used twice")));
        }
    }
    Ok(config)
}

pub fn load_config(path: &Path) -> Result<ExperimentConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    let base = path.parent().unwrap_or(Path::new("."));
    parse_config(&text, base).map_err(|e| match e {
        CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn plan_id(plan: &PlanConfig, index: usize) -> String {
    plan.id.clone().unwrap_or_else(|| format!("plan-{index}"))
}
