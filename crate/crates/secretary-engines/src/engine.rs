use matroid_core::{Matroid, OptTracker, ValueOrder};

use crate::trial::Recorder;
use crate::{ArrivalTrial, EngineError, Randomness, SampleRule, SelectionOutcome};

/// An online selection rule bound to one instance.
///
/// Engines are immutable; every run owns its state, so one engine can serve
/// many concurrent runs.
pub trait OnlineEngine: Sync {
    fn name(&self) -> &'static str;

    fn ground_size(&self) -> usize;

    /// Arrival order, sample size and (for engines that use them) arrival times.
    fn draw_trial(&self, rng: &mut dyn Randomness) -> ArrivalTrial;

    /// Runs on `trial`. Engines with internal coin flips draw them from `rng`.
    fn run(&self, trial: &ArrivalTrial, rng: &mut dyn Randomness, trace: bool)
        -> Result<SelectionOutcome, EngineError>;

    fn sample_rule(&self) -> Option<SampleRule> {
        None
    }
}

/// An engine together with its forbidden sets 𝓕(X, Y, r*).
pub trait ForbiddenSetEngine: OnlineEngine {
    /// Declared bound k on |𝓕|.
    fn forbidden_size(&self) -> usize;

    fn matroid(&self) -> &dyn Matroid;

    fn order(&self) -> &ValueOrder;

    /// 𝓕(X, Y, r*) for r* ∈ OPT(Y). Every rule here depends on X and Y only
    /// through their optima, so callers pass OPT(X) and OPT(Y) (best first).
    fn forbidden(&self, opt_x: &[usize], opt_y: &[usize], r_star: usize) -> Result<Vec<usize>, EngineError>;
}

/// The loop shared by the rules that only look at arrivals in the current
/// optimum: `admit` is asked about r_i for i > s with r_i ∈ OPT(R_i), sees
/// OPT(R_i) best first, and commits its own state when it accepts.
pub(crate) fn scan_optimum(
    m: &dyn Matroid,
    order: &ValueOrder,
    trial: &ArrivalTrial,
    trace: bool,
    mut admit: impl FnMut(usize, &[usize]) -> Result<bool, EngineError>,
) -> Result<SelectionOutcome, EngineError> {
    let mut rec = Recorder::new(trial.n(), trace);
    let mut tracker = OptTracker::new();
    for (idx, &r) in trial.arrivals.iter().enumerate() {
        let in_opt = tracker.insert(m, order, r);
        if idx < trial.sample || !in_opt {
            rec.step(idx + 1, r, in_opt, false, false);
            continue;
        }
        let ok = admit(r, tracker.members())?;
        rec.step(idx + 1, r, in_opt, ok, ok);
    }
    Ok(rec.finish())
}

pub(crate) fn index_in(set: &[usize], e: usize) -> usize {
    set.iter().position(|&x| x == e).expect("element belongs to the optimum it is looked up in")
}
