use serde::{Deserialize, Serialize};

use crate::Randomness;

/// How the sample size `s` is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleRule {
    /// s ∼ Bin(n, p).
    Binomial(f64),
    Fixed(usize),
    /// s = ⌊n/2⌋.
    Half,
}

impl SampleRule {
    pub fn draw(&self, n: usize, rng: &mut dyn Randomness) -> usize {
        match *self {
            SampleRule::Binomial(p) => draw_sample_size(n, p, rng),
            SampleRule::Fixed(s) => s.min(n),
            SampleRule::Half => n / 2,
        }
    }

    /// The Bernoulli parameter when there is one.
    pub fn probability(&self) -> Option<f64> {
        match *self {
            SampleRule::Binomial(p) => Some(p),
            _ => None,
        }
    }
}

/// s ∼ Bin(n, p).
pub fn draw_sample_size(n: usize, p: f64, rng: &mut dyn Randomness) -> usize {
    rng.binomial(n, p)
}

/// Uniform permutation of `0..n` built from `n` calls to `below`.
pub fn draw_permutation(n: usize, rng: &mut dyn Randomness) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in 0..n {
        let j = i + rng.below(n - i);
        perm.swap(i, j);
    }
    perm
}

/// One arrival sequence r_1..r_n with its sample size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArrivalTrial {
    /// `arrivals[i]` is r_{i+1}.
    pub arrivals: Vec<usize>,
    pub sample: usize,
    pub seed: u64,
    /// Arrival times, increasing along `arrivals`.
    pub times: Option<Vec<f64>>,
}

impl ArrivalTrial {
    pub fn new(arrivals: Vec<usize>, sample: usize) -> Self {
        ArrivalTrial { arrivals, sample, seed: 0, times: None }
    }

    pub fn draw(n: usize, rule: SampleRule, rng: &mut dyn Randomness) -> Self {
        let arrivals = draw_permutation(n, rng);
        let sample = rule.draw(n, rng);
        ArrivalTrial::new(arrivals, sample)
    }

    pub fn n(&self) -> usize {
        self.arrivals.len()
    }

    /// R_t as a slice.
    pub fn prefix(&self, t: usize) -> &[usize] {
        &self.arrivals[..t]
    }

    /// Permutation bijective, s ≤ n, times (when present) increasing in [0, 1).
    pub fn is_consistent(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        for &e in &self.arrivals {
            if e >= n || std::mem::replace(&mut seen[e], true) {
                return false;
            }
        }
        if self.sample > n {
            return false;
        }
        match &self.times {
            None => true,
            Some(t) => {
                t.len() == n && t.iter().all(|x| (0.0..1.0).contains(x)) && t.windows(2).all(|w| w[0] <= w[1])
            }
        }
    }
}

/// One step of an engine run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    /// 1-based arrival index i.
    pub step: usize,
    pub element: usize,
    pub in_opt: bool,
    /// Whether the engine's acceptance test passed.
    pub check: bool,
    pub accepted: bool,
}

impl TraceStep {
    /// `step element in_opt check accepted`, flags as 0/1.
    pub fn line(&self) -> String {
        format!(
            "{} {} {} {} {}",
            self.step, self.element, self.in_opt as u8, self.check as u8, self.accepted as u8
        )
    }
}

/// What one engine run selected.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SelectionOutcome {
    /// Selected elements in the order they were accepted.
    pub selected: Vec<usize>,
    /// `flags[e]` is true iff `e` was selected.
    pub flags: Vec<bool>,
    pub trace: Option<Vec<TraceStep>>,
}

impl SelectionOutcome {
    pub fn empty(n: usize) -> Self {
        SelectionOutcome { selected: Vec::new(), flags: vec![false; n], trace: None }
    }

    pub fn from_selected(n: usize, selected: Vec<usize>) -> Self {
        let mut flags = vec![false; n];
        for &e in &selected {
            flags[e] = true;
        }
        SelectionOutcome { selected, flags, trace: None }
    }

    pub fn is_selected(&self, e: usize) -> bool {
        self.flags[e]
    }
}

/// Accumulates accepted elements and, on request, the trace.
#[derive(Debug)]
pub(crate) struct Recorder {
    out: SelectionOutcome,
}

impl Recorder {
    pub fn new(n: usize, trace: bool) -> Self {
        let mut out = SelectionOutcome::empty(n);
        if trace {
            out.trace = Some(Vec::new());
        }
        Recorder { out }
    }

    pub fn step(&mut self, step: usize, element: usize, in_opt: bool, check: bool, accepted: bool) {
        if accepted {
            self.out.selected.push(element);
            self.out.flags[element] = true;
        }
        if let Some(t) = self.out.trace.as_mut() {
            t.push(TraceStep { step, element, in_opt, check, accepted });
        }
    }

    pub fn finish(self) -> SelectionOutcome {
        self.out
    }
}
