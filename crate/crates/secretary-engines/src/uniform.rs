//! Rules for uniform matroids U(n, ρ), where OPT is simply the top ρ.

use matroid_core::ValueOrder;

use crate::trial::{draw_permutation, Recorder};
use crate::{ArrivalTrial, EngineError, OnlineEngine, Randomness, SelectionOutcome};

/// Interval-doubling rule on arrival times in [0, 1).
///
/// J_j = [2^{-j-1}, 2^{-j}) gets budget ⌊ρ/2^{j+1}⌋ and threshold f_j, the
/// ⌈2^{-j-1}(1+ε_j)ρ⌉-th best element that arrived before J_j, with
/// ε_j = √(12·2^j·ln ρ / ρ). An arrival in J_j is taken while the budget lasts
/// and it beats f_j. When fewer elements than the threshold index arrived
/// before J_j nothing in J_j is taken.
#[derive(Debug, Clone)]
pub struct UniformVariant<'a> {
    order: &'a ValueOrder,
    rho: usize,
}

impl<'a> UniformVariant<'a> {
    pub fn new(order: &'a ValueOrder, rho: usize) -> Result<Self, EngineError> {
        if rho < 2 || rho > order.len() {
            return Err(EngineError::Domain(format!("rank {rho} needs 2 ≤ ρ ≤ n = {}", order.len())));
        }
        Ok(UniformVariant { order, rho })
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    /// ⌊ρ/2^{j+1}⌋.
    pub fn budget(&self, j: usize) -> usize {
        if j >= usize::BITS as usize - 1 {
            0
        } else {
            self.rho >> (j + 1)
        }
    }

    pub fn epsilon(&self, j: usize) -> f64 {
        let rho = self.rho as f64;
        (12.0 * 2f64.powi(j as i32) * rho.ln() / rho).sqrt()
    }

    /// ⌈2^{-j-1}(1+ε_j)ρ⌉.
    pub fn threshold_index(&self, j: usize) -> usize {
        (0.5f64.powi(j as i32 + 1) * (1.0 + self.epsilon(j)) * self.rho as f64).ceil() as usize
    }

    /// Largest j with a positive budget.
    fn last_class(&self) -> usize {
        (0..).take_while(|&j| self.budget(j) >= 1).last().expect("ρ ≥ 2 gives J_0 a budget")
    }
}

/// j with t ∈ [2^{-j-1}, 2^{-j}).
pub fn time_class(t: f64) -> usize {
    if t <= 0.0 {
        return usize::MAX;
    }
    let mut j = (-t.log2()).floor() as usize;
    // guard the rounding of log2 at interval ends
    while t < 0.5f64.powi(j as i32 + 1) {
        j += 1;
    }
    while j > 0 && t >= 0.5f64.powi(j as i32) {
        j -= 1;
    }
    j
}

impl OnlineEngine for UniformVariant<'_> {
    fn name(&self) -> &'static str {
        "uniform_variant"
    }

    fn ground_size(&self) -> usize {
        self.order.len()
    }

    /// Continuous sources draw real times. Discrete ones draw each element's
    /// interval (probability 2^{-j-1}, every interval past the last one with
    /// a budget lumped together) plus a uniform order inside intervals, and
    /// place times evenly inside each interval. The lumped elements can never
    /// be selected and lie before every interval with a budget, so outcomes
    /// have the same law either way.
    fn draw_trial(&self, rng: &mut dyn Randomness) -> ArrivalTrial {
        let n = self.order.len();
        if rng.continuous() {
            let mut timed: Vec<(f64, usize)> = (0..n).map(|e| (rng.unit(), e)).collect();
            timed.sort_by(|a, b| a.0.total_cmp(&b.0));
            let mut trial = ArrivalTrial::new(timed.iter().map(|&(_, e)| e).collect(), 0);
            trial.times = Some(timed.iter().map(|&(t, _)| t).collect());
            return trial;
        }
        let lump = self.last_class() + 1;
        let mut weights: Vec<f64> = (0..lump).map(|j| 0.5f64.powi(j as i32 + 1)).collect();
        weights.push(0.5f64.powi(lump as i32));
        let perm = draw_permutation(n, rng);
        let class: Vec<usize> = (0..n).map(|_| rng.weighted(&weights)).collect();
        let mut slots: Vec<(usize, usize)> = perm.iter().enumerate().map(|(i, &e)| (class[i], e)).collect();
        // later intervals come first in time
        slots.sort_by(|a, b| b.0.cmp(&a.0));
        let mut times = Vec::with_capacity(n);
        let mut start = 0;
        while start < n {
            let j = slots[start].0;
            let end = start + slots[start..].iter().take_while(|s| s.0 == j).count();
            let count = (end - start) as f64;
            let (lo, width) = if j == lump {
                (0.0, 0.5f64.powi(lump as i32))
            } else {
                (0.5f64.powi(j as i32 + 1), 0.5f64.powi(j as i32 + 1))
            };
            for k in 0..end - start {
                times.push(lo + width * (k as f64 + 0.5) / count);
            }
            start = end;
        }
        let mut trial = ArrivalTrial::new(slots.iter().map(|&(_, e)| e).collect(), 0);
        trial.times = Some(times);
        trial
    }

    fn run(&self, trial: &ArrivalTrial, _: &mut dyn Randomness, trace: bool) -> Result<SelectionOutcome, EngineError> {
        let times = trial
            .times
            .as_ref()
            .ok_or_else(|| EngineError::Domain("the uniform variant needs arrival times".into()))?;
        let mut rec = Recorder::new(trial.n(), trace);
        // (class, threshold element or None, selections so far)
        let mut current: Option<(usize, Option<usize>, usize)> = None;
        for (idx, (&r, &t)) in trial.arrivals.iter().zip(times).enumerate() {
            let j = time_class(t);
            if current.is_none_or(|c| c.0 != j) {
                let q = if self.budget(j) == 0 { 0 } else { self.threshold_index(j) };
                let threshold = if q == 0 || q > idx {
                    None
                } else {
                    let mut earlier = trial.arrivals[..idx].to_vec();
                    let (_, nth, _) = earlier.select_nth_unstable_by_key(q - 1, |&e| self.order.position(e));
                    Some(*nth)
                };
                current = Some((j, threshold, 0));
            }
            let (_, threshold, taken) = current.as_mut().expect("set above");
            let check = threshold.is_some_and(|f| self.order.better(r, f));
            let ok = check && *taken < self.budget(j);
            *taken += ok as usize;
            rec.step(idx + 1, r, self.order.position(r) < self.rho, check, ok);
        }
        Ok(rec.finish())
    }
}

/// The original interval rule for ρ = 2^κ and n = 2^N.
///
/// I_i is the first n/2^i arrivals and J_i = I_i ∖ I_{i+1}. The first arrival
/// (start of J_κ = I_κ) is always taken. In J_i for i < κ the rule takes
/// arrivals beating the (ρ/2^i)-th best of I_{i+1}, at most ρ/2^{i+1} of them;
/// when I_{i+1} is too small to define that threshold every arrival passes it.
#[derive(Debug, Clone)]
pub struct KleinbergOriginal<'a> {
    order: &'a ValueOrder,
    rho: usize,
    kappa: u32,
}

impl<'a> KleinbergOriginal<'a> {
    pub fn new(order: &'a ValueOrder, rho: usize) -> Result<Self, EngineError> {
        let n = order.len();
        if !rho.is_power_of_two() || !n.is_power_of_two() || rho > n {
            return Err(EngineError::Domain(format!("need ρ = 2^κ ≤ n = 2^N, got ρ = {rho}, n = {n}")));
        }
        Ok(KleinbergOriginal { order, rho, kappa: rho.trailing_zeros() })
    }
}

impl OnlineEngine for KleinbergOriginal<'_> {
    fn name(&self) -> &'static str {
        "kleinberg"
    }

    fn ground_size(&self) -> usize {
        self.order.len()
    }

    fn draw_trial(&self, rng: &mut dyn Randomness) -> ArrivalTrial {
        ArrivalTrial::new(draw_permutation(self.order.len(), rng), 0)
    }

    fn run(&self, trial: &ArrivalTrial, _: &mut dyn Randomness, trace: bool) -> Result<SelectionOutcome, EngineError> {
        let n = trial.n();
        let mut rec = Recorder::new(n, trace);
        let innermost = n >> self.kappa;
        let mut state: Option<(u32, Option<usize>, usize)> = None;
        for (idx, &r) in trial.arrivals.iter().enumerate() {
            let in_opt = self.order.position(r) < self.rho;
            let p = idx + 1;
            if p <= innermost {
                rec.step(p, r, in_opt, p == 1, p == 1);
                continue;
            }
            // n/2^{i+1} < p ≤ n/2^i
            let i = (0..self.kappa).rev().find(|&i| p <= n >> i).expect("p exceeds n/2^κ");
            if state.is_none_or(|s| s.0 != i) {
                let rank = self.rho >> i;
                let before = n >> (i + 1);
                let threshold = if rank > before {
                    None
                } else {
                    let mut earlier = trial.arrivals[..before].to_vec();
                    let (_, nth, _) = earlier.select_nth_unstable_by_key(rank - 1, |&e| self.order.position(e));
                    Some(*nth)
                };
                state = Some((i, threshold, 0));
            }
            let (_, threshold, taken) = state.as_mut().expect("set above");
            let check = threshold.is_none_or(|f| self.order.better(r, f));
            let ok = check && *taken < self.rho >> (i + 1);
            *taken += ok as usize;
            rec.step(p, r, in_opt, check, ok);
        }
        Ok(rec.finish())
    }
}
