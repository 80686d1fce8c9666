use matroid_core::Matroid;
use matroid_zoo::Instance;
use rayon::prelude::*;
use secretary_engines::{enumerate_outcomes, ChaChaSource, OnlineEngine, SelectionOutcome};

use crate::measures::{finish, Context, Meta, Tally};
use crate::{build_engine, BuiltEngine, CompetitivenessReport, EngineSpec, HarnessError, WeightPreset};

/// Trials per work unit. Fixed so the partition of the trial range, and
/// with it the floating-point summation order, never depends on the width.
pub const CHUNK: u64 = 256;

/// Largest ground set [`exhaustive_run`] enumerates.
pub const EXHAUSTIVE_LIMIT: usize = 7;

#[derive(Debug, Clone)]
pub struct TrialPlan<'a> {
    pub instance_id: String,
    pub instance: &'a Instance,
    pub engine: EngineSpec,
    pub trials: u64,
    pub seed: u64,
    /// Worker threads.
    pub width: usize,
    /// Weights behind the utility measure.
    pub weights: WeightPreset,
}

impl<'a> TrialPlan<'a> {
    pub fn new(instance_id: impl Into<String>, instance: &'a Instance, engine: EngineSpec, trials: u64, seed: u64) -> Self {
        TrialPlan {
            instance_id: instance_id.into(),
            instance,
            engine,
            trials,
            seed,
            width: 1,
            weights: WeightPreset::Linear,
        }
    }

    pub fn with_width(mut self, width: usize) -> Self {
        self.width = width;
        self
    }

    pub fn with_weights(mut self, weights: WeightPreset) -> Self {
        self.weights = weights;
        self
    }
}

fn checked_weights(inst: &Instance, preset: WeightPreset) -> Result<Vec<f64>, HarnessError> {
    if let WeightPreset::Geometric { ratio } = preset {
        if !(ratio > 0.0 && ratio <= 1.0) {
            return Err(HarnessError::Plan(format!("geometric ratio {ratio} outside (0, 1]")));
        }
    }
    let w = preset.weights(&inst.order);
    if !crate::is_compatible(&inst.order, &w) {
        return Err(HarnessError::Plan(format!("{} weights increase along the value order", preset.name())));
    }
    Ok(w)
}

fn meta(id: &str, inst: &Instance, built: &BuiltEngine, seed: u64, weights: WeightPreset) -> Meta {
    Meta {
        instance_id: id.to_string(),
        family: inst.family.name().to_string(),
        engine: built.engine.name().to_string(),
        param_p: built.param_p,
        seed,
        weights: weights.name().to_string(),
        bounds: built.bounds,
    }
}

fn check_outcome(m: &dyn Matroid, out: &SelectionOutcome, trial: u64) -> Result<(), HarnessError> {
    if !m.is_independent(&out.selected) {
        return Err(HarnessError::Invariant { trial, what: format!("dependent selection {:?}", out.selected) });
    }
    Ok(())
}

/// Monte Carlo estimates of all four measures.
///
/// Trial `i` draws everything from the stream seeded by (seed, i), so the
/// report is the same at every width.
pub fn estimate_measures(plan: &TrialPlan) -> Result<CompetitivenessReport, HarnessError> {
    if plan.trials == 0 {
        return Err(HarnessError::Plan("at least one trial is needed".into()));
    }
    if plan.width == 0 {
        return Err(HarnessError::Plan("parallelism width must be positive".into()));
    }
    let inst = plan.instance;
    let weights = checked_weights(inst, plan.weights)?;
    let built = build_engine(inst, &plan.engine)?;
    let ctx = Context::new(inst, weights);
    let engine: &dyn OnlineEngine = built.engine.as_ref();
    let run_chunk = |c: u64| -> Result<Tally, HarnessError> {
        let mut tally = Tally::new(ctx.n);
        for i in c * CHUNK..((c + 1) * CHUNK).min(plan.trials) {
            let mut rng = ChaChaSource::for_trial(plan.seed, i);
            let trial = engine.draw_trial(&mut rng);
            let out = engine.run(&trial, &mut rng, false)?;
            check_outcome(&inst.family, &out, i)?;
            tally.record(1.0, &out, &ctx);
        }
        Ok(tally)
    };
    let chunks = plan.trials.div_ceil(CHUNK);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(plan.width)
        .build()
        .map_err(|e| HarnessError::Plan(format!("cannot start {} workers: {e}", plan.width)))?;
    let parts: Vec<Tally> = pool.install(|| (0..chunks).into_par_iter().map(run_chunk).collect::<Result<_, _>>())?;
    let mut total = Tally::new(ctx.n);
    parts.iter().for_each(|t| total.merge(t));
    Ok(finish(&total, &ctx, meta(&plan.instance_id, inst, &built, plan.seed, plan.weights), false))
}

/// Exact measures: every arrival order, every sample size with its binomial
/// weight and every internal coin flip of the engine.
pub fn exhaustive_run(
    instance_id: &str,
    inst: &Instance,
    engine: &EngineSpec,
    weights: WeightPreset,
) -> Result<CompetitivenessReport, HarnessError> {
    if inst.n() > EXHAUSTIVE_LIMIT {
        return Err(HarnessError::TooLarge { size: inst.n(), limit: EXHAUSTIVE_LIMIT });
    }
    let w = checked_weights(inst, weights)?;
    let built = build_engine(inst, engine)?;
    let ctx = Context::new(inst, w);
    let mut tally = Tally::new(ctx.n);
    let mut failure = None;
    let mut branch = 0u64;
    enumerate_outcomes(
        |rng| {
            let trial = built.engine.draw_trial(rng);
            built.engine.run(&trial, rng, false)
        },
        |p, out| {
            branch += 1;
            if failure.is_some() {
                return;
            }
            match out.map_err(HarnessError::from).and_then(|o| check_outcome(&inst.family, &o, branch).map(|_| o)) {
                Ok(o) => tally.record(p, &o, &ctx),
                Err(e) => failure = Some(e),
            }
        },
    );
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(finish(&tally, &ctx, meta(instance_id, inst, &built, 0, weights), true))
}
