use matroid_core::{Matroid, Minor};
use secretary_engines::Randomness;

use crate::{LayeredError, LayeredInstance};

/// An algorithm for the layered problem: sees F, then the hidden elements in
/// arrival order, and returns an independent subset of them.
pub trait LayeredAlgorithm: Sync {
    fn name(&self) -> &'static str;

    fn select(&self, inst: &LayeredInstance, rng: &mut dyn Randomness) -> Result<Vec<usize>, LayeredError>;
}

/// Layers `first..=last`; empty when `first > last`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LayerRange {
    pub first: usize,
    pub last: usize,
}

impl LayerRange {
    pub fn is_empty(&self) -> bool {
        self.first > self.last
    }

    pub fn contains(&self, layer: usize) -> bool {
        self.first <= layer && layer <= self.last
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

fn ceil_log2(x: usize) -> u32 {
    if x <= 1 {
        0
    } else {
        usize::BITS - (x - 1).leading_zeros()
    }
}

/// 8⌈log₂(|C|+1) + 1⌉.
pub fn feldman_bound(thresholds: usize) -> f64 {
    8.0 * (ceil_log2(thresholds + 1) + 1) as f64
}

/// B_i = C_j for j from max{0, 2^τ(i−1) − Δ + 1} to min{|C|, 2^τ·i − Δ}, for
/// i = 1..⌈(Δ + |C|)/2^τ⌉. Taken as written: some choices of (τ, Δ) leave
/// C_0 outside every bucket, and |C| = 0 yields no bucket at all.
pub fn build_buckets(thresholds: usize, tau: u32, delta: usize) -> Vec<LayerRange> {
    let width = 1usize << tau;
    let count = (delta + thresholds).div_ceil(width);
    (1..=count)
        .map(|i| LayerRange {
            first: (width * (i - 1) + 1).saturating_sub(delta),
            last: thresholds.min(width * i - delta),
        })
        .collect()
}

/// The random choices of one bucketed run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BucketPlan {
    pub tau: u32,
    pub delta: usize,
    pub buckets: Vec<LayerRange>,
    pub parity: Parity,
}

impl BucketPlan {
    pub fn new(thresholds: usize, tau: u32, delta: usize, parity: Parity) -> Self {
        BucketPlan { tau, delta, buckets: build_buckets(thresholds, tau, delta), parity }
    }

    /// τ uniform on {0, …, ⌈log₂(|C|+1)⌉}, Δ uniform on {0, …, 2^τ − 1}, H odd or even.
    pub fn draw(thresholds: usize, rng: &mut dyn Randomness) -> Self {
        let tau = rng.below(ceil_log2(thresholds + 1) as usize + 1) as u32;
        let delta = rng.below(1 << tau);
        let parity = if rng.below(2) == 0 { Parity::Odd } else { Parity::Even };
        Self::new(thresholds, tau, delta, parity)
    }

    /// 1-based index of the bucket holding `layer`.
    pub fn bucket_of(&self, layer: usize) -> Option<usize> {
        self.buckets.iter().position(|b| b.contains(layer)).map(|i| i + 1)
    }

    /// i ∈ H.
    pub fn is_active(&self, i: usize) -> bool {
        (i % 2 == 1) == (self.parity == Parity::Odd)
    }
}

/// Bucketed greedy: in each bucket of the chosen parity, keep arrivals that
/// stay independent in the bucket matroid M_i.
#[derive(Debug, Clone, Copy, Default)]
pub struct FeldmanLayered;

impl FeldmanLayered {
    /// M_1 = (𝓜 / (F ∩ B_{≥2}))|_{B_1}; for i > 1,
    /// M_i = (𝓜 / (F ∩ B_{≥i+1}))|_{B_i ∩ span(F ∩ B_{≥i−1})}.
    pub fn bucket_matroid<'b>(
        &self,
        inst: &LayeredInstance<'b>,
        plan: &BucketPlan,
        i: usize,
    ) -> Result<Minor<'b, dyn Matroid + 'b>, LayeredError> {
        let m = inst.matroid();
        let bucket = |r: usize| plan.bucket_of(inst.layer(r));
        let at_least = |r: usize, lo: usize| bucket(r).is_some_and(|b| b >= lo);
        let contracted: Vec<usize> = inst.visible().iter().copied().filter(|&r| at_least(r, i + 1)).collect();
        let mut ground: Vec<usize> = inst.arrivals().iter().copied().filter(|&r| bucket(r) == Some(i)).collect();
        if i > 1 {
            let spanning: Vec<usize> = inst.visible().iter().copied().filter(|&r| at_least(r, i - 1)).collect();
            let basis = m.greedy(&spanning);
            ground.retain(|&r| {
                let mut probe = basis.clone();
                probe.push(r);
                spanning.contains(&r) || !m.is_independent(&probe)
            });
        }
        Ok(Minor::whole(m).contract(&contracted)?.restrict(&ground)?)
    }

    pub fn select_with_plan(&self, inst: &LayeredInstance, plan: &BucketPlan) -> Result<Vec<usize>, LayeredError> {
        let mut parts: Vec<Option<(Minor<'_, dyn Matroid + '_>, Vec<usize>)>> = (0..=plan.buckets.len()).map(|_| None).collect();
        for &r in inst.hidden() {
            let Some(i) = plan.bucket_of(inst.layer(r)) else { continue };
            if !plan.is_active(i) {
                continue;
            }
            if parts[i].is_none() {
                parts[i] = Some((self.bucket_matroid(inst, plan, i)?, Vec::new()));
            }
            let (mi, taken) = parts[i].as_mut().expect("built above");
            if mi.contains(r) {
                taken.push(r);
                if !mi.is_independent(taken) {
                    taken.pop();
                }
            }
        }
        Ok(parts.into_iter().flatten().flat_map(|(_, t)| t).collect())
    }
}

impl LayeredAlgorithm for FeldmanLayered {
    fn name(&self) -> &'static str {
        "feldman"
    }

    fn select(&self, inst: &LayeredInstance, rng: &mut dyn Randomness) -> Result<Vec<usize>, LayeredError> {
        let plan = BucketPlan::draw(inst.threshold_count(), rng);
        self.select_with_plan(inst, &plan)
    }
}
