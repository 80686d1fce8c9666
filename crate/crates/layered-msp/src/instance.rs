use matroid_core::{check_set, greedy_opt, Matroid, ValueOrder};
use secretary_engines::{draw_permutation, enumerate_outcomes, ChaChaSource, Randomness};

use crate::{LayeredAlgorithm, LayeredError};

/// One realisation (𝓜, F, C, ≻): the ground set in arrival order with the
/// first `visible` arrivals forming F, and the thresholds as cuts.
#[derive(Clone)]
pub struct LayeredInstance<'a> {
    matroid: &'a dyn Matroid,
    order: &'a ValueOrder,
    arrivals: Vec<usize>,
    visible: usize,
    cuts: Vec<usize>,
}

impl<'a> LayeredInstance<'a> {
    /// `cuts` must be strictly increasing value positions; element `r` lies
    /// below threshold `j` when `position(r) ≥ cuts[j]`.
    pub fn new(
        matroid: &'a dyn Matroid,
        order: &'a ValueOrder,
        arrivals: Vec<usize>,
        visible: usize,
        cuts: Vec<usize>,
    ) -> Result<Self, LayeredError> {
        check_set(order.len(), &arrivals)?;
        if matroid.ground_size() != order.len() {
            return Err(LayeredError::Malformed(format!(
                "matroid on {} elements, order on {}",
                matroid.ground_size(),
                order.len()
            )));
        }
        if visible > arrivals.len() {
            return Err(LayeredError::Malformed(format!("{visible} visible of {} elements", arrivals.len())));
        }
        if cuts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(LayeredError::Malformed(format!("thresholds {cuts:?} are not strictly decreasing in value")));
        }
        Ok(LayeredInstance { matroid, order, arrivals, visible, cuts })
    }

    pub fn matroid(&self) -> &'a dyn Matroid {
        self.matroid
    }

    pub fn order(&self) -> &'a ValueOrder {
        self.order
    }

    /// The ground set R in arrival order.
    pub fn arrivals(&self) -> &[usize] {
        &self.arrivals
    }

    /// F.
    pub fn visible(&self) -> &[usize] {
        &self.arrivals[..self.visible]
    }

    /// R ∖ F in arrival order.
    pub fn hidden(&self) -> &[usize] {
        &self.arrivals[self.visible..]
    }

    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    /// |C|.
    pub fn threshold_count(&self) -> usize {
        self.cuts.len()
    }

    /// j with r ∈ C_j.
    pub fn layer(&self, r: usize) -> usize {
        let pos = self.order.position(r);
        self.cuts.partition_point(|&c| c <= pos)
    }

    /// C_0, …, C_|C| with members best first.
    pub fn layers(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.cuts.len() + 1];
        for &r in &self.order.sorted(&self.arrivals) {
            out[self.layer(r)].push(r);
        }
        out
    }

    /// OPT of the layered matroid 𝓜|_R.
    pub fn optimum(&self) -> Vec<usize> {
        greedy_opt(self.matroid, self.order, &self.arrivals)
    }
}

/// A layered instance with F and the arrival order left random: F holds each
/// element independently with probability ½ and the rest arrive uniformly.
#[derive(Clone)]
pub struct LayeredFixture<'a> {
    matroid: &'a dyn Matroid,
    order: &'a ValueOrder,
    ground: Vec<usize>,
    cuts: Vec<usize>,
}

/// E|ALG ∩ C_j| against |OPT ∩ C_j| for one layer.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerEstimate {
    pub layer: usize,
    pub opt: usize,
    pub mean: f64,
    /// 95% normal half-width; zero for exact values.
    pub ci95: f64,
    pub trials: u64,
}

impl LayerEstimate {
    /// E|ALG ∩ C_j| ≥ |OPT ∩ C_j| / α, allowing `slack` CI half-widths.
    pub fn meets(&self, alpha: f64, slack: f64) -> bool {
        self.mean + slack * self.ci95 >= self.opt as f64 / alpha
    }
}

impl<'a> LayeredFixture<'a> {
    pub fn new(
        matroid: &'a dyn Matroid,
        order: &'a ValueOrder,
        ground: Vec<usize>,
        cuts: Vec<usize>,
    ) -> Result<Self, LayeredError> {
        // validates everything once
        LayeredInstance::new(matroid, order, ground.clone(), 0, cuts.clone())?;
        Ok(LayeredFixture { matroid, order, ground, cuts })
    }

    /// A uniform arrival order with F the first Bin(|R|, ½) of it, which puts
    /// each element in F independently with probability ½.
    pub fn draw(&self, rng: &mut dyn Randomness) -> LayeredInstance<'a> {
        let perm = draw_permutation(self.ground.len(), rng);
        let visible = rng.binomial(self.ground.len(), 0.5);
        LayeredInstance {
            matroid: self.matroid,
            order: self.order,
            arrivals: perm.iter().map(|&i| self.ground[i]).collect(),
            visible,
            cuts: self.cuts.clone(),
        }
    }

    fn opt_per_layer(&self) -> Vec<usize> {
        let inst = self.draw_fixed();
        let mut counts = vec![0; self.cuts.len() + 1];
        inst.optimum().iter().for_each(|&r| counts[inst.layer(r)] += 1);
        counts
    }

    fn draw_fixed(&self) -> LayeredInstance<'a> {
        LayeredInstance {
            matroid: self.matroid,
            order: self.order,
            arrivals: self.ground.clone(),
            visible: 0,
            cuts: self.cuts.clone(),
        }
    }

    fn run_once(
        &self,
        alg: &dyn LayeredAlgorithm,
        rng: &mut dyn Randomness,
    ) -> Result<Vec<usize>, LayeredError> {
        let inst = self.draw(rng);
        let chosen = alg.select(&inst, rng)?;
        if !self.matroid.is_independent(&chosen) || chosen.iter().any(|r| inst.visible().contains(r)) {
            return Err(LayeredError::Dependent(chosen));
        }
        let mut per_layer = vec![0; self.cuts.len() + 1];
        chosen.iter().for_each(|&r| per_layer[inst.layer(r)] += 1);
        Ok(per_layer)
    }

    /// Monte Carlo per-layer means over `trials` draws of (F, order, coins).
    pub fn estimate(&self, alg: &dyn LayeredAlgorithm, trials: u64, seed: u64) -> Result<Vec<LayerEstimate>, LayeredError> {
        let width = self.cuts.len() + 1;
        let (mut sum, mut sq) = (vec![0.0; width], vec![0.0; width]);
        for i in 0..trials {
            let mut rng = ChaChaSource::for_trial(seed, i);
            for (j, c) in self.run_once(alg, &mut rng)?.into_iter().enumerate() {
                sum[j] += c as f64;
                sq[j] += (c * c) as f64;
            }
        }
        let t = trials as f64;
        Ok(self
            .opt_per_layer()
            .into_iter()
            .enumerate()
            .map(|(j, opt)| {
                let mean = sum[j] / t;
                let var = (sq[j] / t - mean * mean).max(0.0);
                LayerEstimate { layer: j, opt, mean, ci95: 1.96 * (var / t).sqrt(), trials }
            })
            .collect())
    }

    /// Exact per-layer means by enumerating every F, order and coin flip.
    pub fn exact(&self, alg: &dyn LayeredAlgorithm) -> Result<Vec<LayerEstimate>, LayeredError> {
        let width = self.cuts.len() + 1;
        let mut mean = vec![0.0; width];
        let mut failure = None;
        enumerate_outcomes(
            |rng| self.run_once(alg, rng),
            |w, out| match out {
                Ok(per_layer) => per_layer.iter().enumerate().for_each(|(j, &c)| mean[j] += w * c as f64),
                Err(e) => failure = failure.take().or(Some(e)),
            },
        );
        if let Some(e) = failure {
            return Err(e);
        }
        Ok(self
            .opt_per_layer()
            .into_iter()
            .enumerate()
            .map(|(j, opt)| LayerEstimate { layer: j, opt, mean: mean[j], ci95: 0.0, trials: 0 })
            .collect())
    }
}
