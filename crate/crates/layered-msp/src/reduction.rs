use matroid_core::{greedy_opt, Matroid, ValueOrder};
use secretary_engines::{ArrivalTrial, EngineError, OnlineEngine, Randomness, SampleRule, SelectionOutcome};

use crate::{sample_optimum_and_improvers, LayeredAlgorithm, LayeredError, LayeredInstance};

/// s(1), s(2), s(4), …, s(2^{k−1}) with k = ⌊log₂ ℓ⌋ + 1, from OPT(R_s) best
/// first. Empty when ℓ = 0.
pub fn geometric_thresholds(opt_sample: &[usize]) -> Vec<usize> {
    (0..)
        .map(|i| 1usize << i)
        .take_while(|&p| p <= opt_sample.len())
        .map(|p| opt_sample[p - 1])
        .collect()
}

fn layered_failure(e: LayeredError) -> EngineError {
    EngineError::Domain(e.to_string())
}

/// Ordinal reduction: sample s ∼ Bin(n, ½), use the geometric subsequence of
/// OPT(R_s) as thresholds and hand R ∖ R_s to the layered algorithm with the
/// next Bin(n − s, ½) arrivals as F.
pub struct OrdinalReduction<'a, A> {
    m: &'a dyn Matroid,
    order: &'a ValueOrder,
    layered: A,
}

impl<'a, A: LayeredAlgorithm> OrdinalReduction<'a, A> {
    pub fn new(m: &'a dyn Matroid, order: &'a ValueOrder, layered: A) -> Self {
        OrdinalReduction { m, order, layered }
    }
}

impl<A: LayeredAlgorithm> OnlineEngine for OrdinalReduction<'_, A> {
    fn name(&self) -> &'static str {
        "ordinal_reduction"
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

    fn run(&self, trial: &ArrivalTrial, rng: &mut dyn Randomness, _: bool) -> Result<SelectionOutcome, EngineError> {
        let opt_sample = greedy_opt(self.m, self.order, trial.prefix(trial.sample));
        let cuts = geometric_thresholds(&opt_sample).iter().map(|&c| self.order.position(c)).collect();
        let rest = trial.arrivals[trial.sample..].to_vec();
        let visible = rng.binomial(rest.len(), 0.5);
        let inst = LayeredInstance::new(self.m, self.order, rest, visible, cuts).map_err(layered_failure)?;
        let chosen = self.layered.select(&inst, rng).map_err(layered_failure)?;
        Ok(SelectionOutcome::from_selected(trial.n(), chosen))
    }
}

/// Probability reduction: thresholds are all of OPT(R_s) and the ground set
/// shrinks to R_s⁺ = {r ∉ R_s : r ∈ OPT(R_s + r)}.
pub struct ProbabilityReduction<'a, A> {
    m: &'a dyn Matroid,
    order: &'a ValueOrder,
    layered: A,
}

impl<'a, A: LayeredAlgorithm> ProbabilityReduction<'a, A> {
    pub fn new(m: &'a dyn Matroid, order: &'a ValueOrder, layered: A) -> Self {
        ProbabilityReduction { m, order, layered }
    }

    /// The layered instance this reduction builds for `trial` and F-size `visible`
    /// (counted over R ∖ R_s before intersecting with R_s⁺).
    pub fn layered_instance(&self, trial: &ArrivalTrial, visible: usize) -> Result<LayeredInstance<'_>, LayeredError> {
        let rest = &trial.arrivals[trial.sample..];
        let (opt_sample, plus) = sample_optimum_and_improvers(self.m, self.order, trial.prefix(trial.sample), rest);
        let kept: Vec<usize> = rest.iter().copied().filter(|r| plus.contains(r)).collect();
        let shown = rest[..visible].iter().filter(|r| plus.contains(r)).count();
        let cuts = opt_sample.iter().map(|&c| self.order.position(c)).collect();
        LayeredInstance::new(self.m, self.order, kept, shown, cuts)
    }
}

impl<A: LayeredAlgorithm> OnlineEngine for ProbabilityReduction<'_, A> {
    fn name(&self) -> &'static str {
        "probability_reduction"
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

    fn run(&self, trial: &ArrivalTrial, rng: &mut dyn Randomness, _: bool) -> Result<SelectionOutcome, EngineError> {
        let visible = rng.binomial(trial.n() - trial.sample, 0.5);
        let inst = self.layered_instance(trial, visible).map_err(layered_failure)?;
        let chosen = self.layered.select(&inst, rng).map_err(layered_failure)?;
        Ok(SelectionOutcome::from_selected(trial.n(), chosen))
    }
}
