use matroid_core::ValueOrder;
use serde::{Deserialize, Serialize};

/// Weights compatible with the value order: w(r¹) ≥ w(r²) ≥ ….
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(tag = "preset", rename_all = "snake_case", deny_unknown_fields)]
pub enum WeightPreset {
    /// w(r^k) = n − k + 1.
    #[default]
    Linear,
    /// w(r^k) = 1/k.
    Harmonic,
    /// w(r^k) = ratio^{k−1}.
    Geometric { ratio: f64 },
    /// w(r^k) = 8 − εk for k ≤ split and 7 − εk after it, with ε = 1/(n+1):
    /// every top element outweighs every later one by less than a factor 8/6.
    TwoTier { split: usize },
}

impl WeightPreset {
    pub fn name(&self) -> &'static str {
        match self {
            WeightPreset::Linear => "linear",
            WeightPreset::Harmonic => "harmonic",
            WeightPreset::Geometric { .. } => "geometric",
            WeightPreset::TwoTier { .. } => "two_tier",
        }
    }

    /// Weight of each element id.
    pub fn weights(&self, order: &ValueOrder) -> Vec<f64> {
        let n = order.len();
        let by_rank = |k: usize| -> f64 {
            match *self {
                WeightPreset::Linear => (n - k + 1) as f64,
                WeightPreset::Harmonic => 1.0 / k as f64,
                WeightPreset::Geometric { ratio } => ratio.powi(k as i32 - 1),
                WeightPreset::TwoTier { split } => {
                    let eps = 1.0 / (n as f64 + 1.0);
                    let top = if k <= split { 8.0 } else { 7.0 };
                    top - eps * k as f64
                }
            }
        };
        let mut w = vec![0.0; n];
        for (pos, &e) in order.ranking().iter().enumerate() {
            w[e] = by_rank(pos + 1);
        }
        w
    }
}

/// Whether `weights` never increases along the order.
pub fn is_compatible(order: &ValueOrder, weights: &[f64]) -> bool {
    weights.len() == order.len() && order.ranking().windows(2).all(|p| weights[p[0]] >= weights[p[1]])
}
