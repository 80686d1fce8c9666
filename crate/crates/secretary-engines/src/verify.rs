use matroid_core::OptTracker;
use serde::Serialize;

use crate::{ArrivalTrial, ChaChaSource, EngineError, ForbiddenSetEngine, Randomness};

/// Largest ground set the exhaustive verifier accepts.
pub const VERIFY_LIMIT: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// |𝓕(R_j, R_t, r_t)| exceeded the declared bound.
    Oversized { j: usize, size: usize },
    /// No r_j with s < j < t was forbidden, yet r_t was not selected.
    NotSelected,
}

/// A replay that breaks the forbidden-set property, with 1-based `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub arrivals: Vec<usize>,
    pub sample: usize,
    pub t: usize,
    pub violation: Violation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenReport {
    pub engine: String,
    pub n: usize,
    pub k: usize,
    pub permutations: u64,
    /// (s, t) pairs where the implication had to be checked.
    pub implications: u64,
    pub largest_forbidden: usize,
    pub counterexample: Option<Counterexample>,
}

impl ForbiddenReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks one arrival order against every sample size. Returns the first
/// violation found.
fn check_order(
    engine: &dyn ForbiddenSetEngine,
    arrivals: &[usize],
    report: &mut ForbiddenReport,
) -> Result<Option<Counterexample>, EngineError> {
    let n = arrivals.len();
    let (m, order) = (engine.matroid(), engine.order());
    let mut tracker = OptTracker::new();
    let mut opts = Vec::with_capacity(n);
    let mut record = Vec::with_capacity(n);
    for &r in arrivals {
        record.push(tracker.insert(m, order, r));
        opts.push(tracker.members().to_vec());
    }
    // blocked[t][j]: r_j ∈ 𝓕(R_j, R_t, r_t), 0-based indices
    let mut blocked = vec![Vec::new(); n];
    for t in 0..n {
        if !record[t] {
            continue;
        }
        blocked[t] = vec![false; t];
        for j in 0..t {
            let f = engine.forbidden(&opts[j], &opts[t], arrivals[t])?;
            report.largest_forbidden = report.largest_forbidden.max(f.len());
            if f.len() > engine.forbidden_size() {
                return Ok(Some(Counterexample {
                    arrivals: arrivals.to_vec(),
                    sample: 0,
                    t: t + 1,
                    violation: Violation::Oversized { j: j + 1, size: f.len() },
                }));
            }
            blocked[t][j] = f.contains(&arrivals[j]);
        }
    }
    let mut unused = ChaChaSource::new(0);
    for s in 0..=n {
        let trial = ArrivalTrial::new(arrivals.to_vec(), s);
        let out = engine.run(&trial, &mut unused as &mut dyn Randomness, false)?;
        for t in s..n {
            if !record[t] || blocked[t][s..].iter().any(|&b| b) {
                continue;
            }
            report.implications += 1;
            if !out.flags[arrivals[t]] {
                return Ok(Some(Counterexample {
                    arrivals: arrivals.to_vec(),
                    sample: s,
                    t: t + 1,
                    violation: Violation::NotSelected,
                }));
            }
        }
    }
    Ok(None)
}

fn empty_report(engine: &dyn ForbiddenSetEngine) -> ForbiddenReport {
    ForbiddenReport {
        engine: engine.name().to_string(),
        n: engine.ground_size(),
        k: engine.forbidden_size(),
        permutations: 0,
        implications: 0,
        largest_forbidden: 0,
        counterexample: None,
    }
}

/// Lexicographic successor; false after the last permutation.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).expect("p[i+1] exceeds p[i]");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Every arrival order × every sample size: |𝓕(R_j, R_t, r_t)| ≤ k, and r_t
/// is selected whenever r_t ∈ OPT(R_t) and no r_j with s < j < t lies in its
/// forbidden set. Stops at the first counterexample.
pub fn verify_forbidden_property(engine: &dyn ForbiddenSetEngine) -> Result<ForbiddenReport, EngineError> {
    let n = engine.ground_size();
    if n > VERIFY_LIMIT {
        return Err(EngineError::Domain(format!("exhaustive verification needs n ≤ {VERIFY_LIMIT}, got {n}")));
    }
    let mut report = empty_report(engine);
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        report.permutations += 1;
        if let Some(c) = check_order(engine, &perm, &mut report)? {
            report.counterexample = Some(c);
            break;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(report)
}

/// The same checks on `orders` random arrival orders.
pub fn verify_forbidden_sampled(
    engine: &dyn ForbiddenSetEngine,
    orders: u64,
    rng: &mut dyn Randomness,
) -> Result<ForbiddenReport, EngineError> {
    let mut report = empty_report(engine);
    for _ in 0..orders {
        let perm = crate::trial::draw_permutation(engine.ground_size(), rng);
        report.permutations += 1;
        if let Some(c) = check_order(engine, &perm, &mut report)? {
            report.counterexample = Some(c);
            break;
        }
    }
    Ok(report)
}
