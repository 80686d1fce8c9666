use std::f64::consts::E;

use crate::EngineError;

/// Sampling probability p(k) and ratio α(k) for forbidden sets of size k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeyLemmaParams {
    pub k: usize,
    pub p: f64,
    pub alpha: f64,
}

pub fn key_lemma_values(k: usize) -> Result<KeyLemmaParams, EngineError> {
    match k {
        0 => Err(EngineError::Domain("forbidden-set size must be at least 1".into())),
        1 => Ok(KeyLemmaParams { k, p: 1.0 / E, alpha: E }),
        _ => {
            let kf = k as f64;
            let e = 1.0 / (kf - 1.0);
            Ok(KeyLemmaParams { k, p: kf.powf(-e), alpha: kf.powf(kf * e) })
        }
    }
}

/// ∫_p^1 (p/τ)^k dτ, the guaranteed selection probability of every optimal element.
pub fn key_lemma_bound(k: usize, p: f64) -> Result<f64, EngineError> {
    if k == 0 {
        return Err(EngineError::Domain("forbidden-set size must be at least 1".into()));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(EngineError::Domain(format!("sampling probability {p} outside (0, 1)")));
    }
    if k == 1 {
        Ok(-p * p.ln())
    } else {
        Ok((p - p.powi(k as i32)) / (k as f64 - 1.0))
    }
}

/// E_{s∼Bin(n,p)} (1/n) Σ_{t=s+1}^{n} Π_{j=s+1}^{t-1} (1 − k/j)_+ evaluated in
/// double precision.
pub fn discrete_product_bound(n: usize, k: usize, p: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let pmf = crate::random::binomial_pmf(n, p);
    let mut total = 0.0;
    for (s, &ps) in pmf.iter().enumerate() {
        if ps == 0.0 {
            continue;
        }
        let mut sum = 0.0;
        let mut prod = 1.0;
        for t in s + 1..=n {
            // prod = Π_{j=s+1}^{t-1}
            sum += prod;
            let j = t as f64;
            prod *= (1.0 - k as f64 / j).max(0.0);
        }
        total += ps * sum / n as f64;
    }
    total
}
