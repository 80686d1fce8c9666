//! Greedy-style baselines and the threshold-price rule.

use matroid_core::{greedy_opt, Matroid, OptTracker, ValueOrder};

use crate::trial::{draw_permutation, Recorder};
use crate::{ArrivalTrial, EngineError, OnlineEngine, Randomness, SampleRule, SelectionOutcome};

/// After the sample, take r_i when r_i ∈ OPT(R_i) and ALG + r_i stays independent.
///
/// Steps with `in_opt` set and index above the sample form the set B of
/// arrivals that improved the running optimum.
#[derive(Clone, Copy)]
pub struct ImprovingGreedy<'a> {
    m: &'a dyn Matroid,
    order: &'a ValueOrder,
    rule: SampleRule,
}

impl<'a> ImprovingGreedy<'a> {
    pub fn new(m: &'a dyn Matroid, order: &'a ValueOrder, rule: SampleRule) -> Self {
        ImprovingGreedy { m, order, rule }
    }
}

impl OnlineEngine for ImprovingGreedy<'_> {
    fn name(&self) -> &'static str {
        "improving_greedy"
    }

    fn ground_size(&self) -> usize {
        self.order.len()
    }

    fn draw_trial(&self, rng: &mut dyn Randomness) -> ArrivalTrial {
        ArrivalTrial::draw(self.order.len(), self.rule, rng)
    }

    fn sample_rule(&self) -> Option<SampleRule> {
        Some(self.rule)
    }

    fn run(&self, trial: &ArrivalTrial, _: &mut dyn Randomness, trace: bool) -> Result<SelectionOutcome, EngineError> {
        let mut rec = Recorder::new(trial.n(), trace);
        let mut tracker = OptTracker::new();
        let mut alg = Vec::new();
        for (idx, &r) in trial.arrivals.iter().enumerate() {
            let in_opt = tracker.insert(self.m, self.order, r);
            let mut check = false;
            if idx >= trial.sample && in_opt {
                alg.push(r);
                check = self.m.is_independent(&alg);
                if !check {
                    alg.pop();
                }
            }
            rec.step(idx + 1, r, in_opt, check, check);
        }
        Ok(rec.finish())
    }
}

/// |B| for a traced improving-greedy run: arrivals after the sample that
/// entered the running optimum.
pub fn improving_count(outcome: &SelectionOutcome, sample: usize) -> usize {
    outcome.trace.as_ref().map_or(0, |t| t.iter().filter(|s| s.step > sample && s.in_opt).count())
}

/// Takes every arrival that keeps the selection independent. No sample.
#[derive(Clone, Copy)]
pub struct OnlineGreedy<'a> {
    m: &'a dyn Matroid,
    order: &'a ValueOrder,
}

impl<'a> OnlineGreedy<'a> {
    pub fn new(m: &'a dyn Matroid, order: &'a ValueOrder) -> Self {
        OnlineGreedy { m, order }
    }
}

impl OnlineEngine for OnlineGreedy<'_> {
    fn name(&self) -> &'static str {
        "online_greedy"
    }

    fn ground_size(&self) -> usize {
        self.order.len()
    }

    fn draw_trial(&self, rng: &mut dyn Randomness) -> ArrivalTrial {
        ArrivalTrial::new(draw_permutation(self.order.len(), rng), 0)
    }

    fn run(&self, trial: &ArrivalTrial, _: &mut dyn Randomness, trace: bool) -> Result<SelectionOutcome, EngineError> {
        let mut rec = Recorder::new(trial.n(), trace);
        let mut alg = Vec::new();
        for (idx, &r) in trial.arrivals.iter().enumerate() {
            alg.push(r);
            let ok = self.m.is_independent(&alg);
            if !ok {
                alg.pop();
            }
            rec.step(idx + 1, r, false, ok, ok);
        }
        Ok(rec.finish())
    }
}

/// Sees the whole order and returns OPT; every ratio against it is 1.
#[derive(Clone, Copy)]
pub struct OfflineGreedy<'a> {
    m: &'a dyn Matroid,
    order: &'a ValueOrder,
}

impl<'a> OfflineGreedy<'a> {
    pub fn new(m: &'a dyn Matroid, order: &'a ValueOrder) -> Self {
        OfflineGreedy { m, order }
    }
}

impl OnlineEngine for OfflineGreedy<'_> {
    fn name(&self) -> &'static str {
        "offline_greedy"
    }

    fn ground_size(&self) -> usize {
        self.order.len()
    }

    fn draw_trial(&self, rng: &mut dyn Randomness) -> ArrivalTrial {
        ArrivalTrial::new(draw_permutation(self.order.len(), rng), 0)
    }

    fn run(&self, trial: &ArrivalTrial, _: &mut dyn Randomness, _: bool) -> Result<SelectionOutcome, EngineError> {
        Ok(SelectionOutcome::from_selected(trial.n(), greedy_opt(self.m, self.order, &trial.arrivals)))
    }
}

/// Threshold-price rule: sample s ∼ Bin(n, ½), let w* be the top sampled
/// non-loop weight, draw τ uniform on {0, …, ⌈log₂ρ⌉} and greedily take later
/// arrivals with weight at least w*/2^τ. With no sampled non-loop nothing is taken.
#[derive(Clone)]
pub struct ThresholdPrice<'a> {
    m: &'a dyn Matroid,
    order: &'a ValueOrder,
    weights: Vec<f64>,
    rho: usize,
}

impl<'a> ThresholdPrice<'a> {
    /// `weights[e]` is the weight of element `e`; it must not increase along the order.
    pub fn new(m: &'a dyn Matroid, order: &'a ValueOrder, weights: Vec<f64>, rho: usize) -> Result<Self, EngineError> {
        if weights.len() != order.len() {
            return Err(EngineError::Domain(format!("{} weights for {} elements", weights.len(), order.len())));
        }
        if order.ranking().windows(2).any(|w| weights[w[0]] < weights[w[1]]) {
            return Err(EngineError::Domain("weights increase somewhere along the value order".into()));
        }
        if rho == 0 {
            return Err(EngineError::Domain("rank must be positive".into()));
        }
        Ok(ThresholdPrice { m, order, weights, rho })
    }

    /// ⌈log₂ρ⌉ + 1 choices for τ.
    pub fn tau_choices(&self) -> usize {
        (usize::BITS - (self.rho - 1).leading_zeros()) as usize + 1
    }
}

impl OnlineEngine for ThresholdPrice<'_> {
    fn name(&self) -> &'static str {
        "tpa"
    }

    fn ground_size(&self) -> usize {
        self.order.len()
    }

    fn draw_trial(&self, rng: &mut dyn Randomness) -> ArrivalTrial {
        ArrivalTrial::draw(self.order.len(), SampleRule::Binomial(0.5), rng)
    }

    fn sample_rule(&self) -> Option<SampleRule> {
        Some(SampleRule::Binomial(0.5))
    }

    fn run(&self, trial: &ArrivalTrial, rng: &mut dyn Randomness, trace: bool) -> Result<SelectionOutcome, EngineError> {
        let tau = rng.below(self.tau_choices());
        let top = trial
            .prefix(trial.sample)
            .iter()
            .filter(|&&e| self.m.is_independent(&[e]))
            .map(|&e| self.weights[e])
            .max_by(f64::total_cmp);
        let mut rec = Recorder::new(trial.n(), trace);
        let bar = top.map(|w| w / 2f64.powi(tau as i32));
        let mut alg = Vec::new();
        for (idx, &r) in trial.arrivals.iter().enumerate() {
            let check = idx >= trial.sample && bar.is_some_and(|b| self.weights[r] >= b);
            let mut ok = false;
            if check {
                alg.push(r);
                ok = self.m.is_independent(&alg);
                if !ok {
                    alg.pop();
                }
            }
            rec.step(idx + 1, r, false, check, ok);
        }
        Ok(rec.finish())
    }
}
