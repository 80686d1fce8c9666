use matroid_core::{Matroid, ValueOrder};
use matroid_zoo::Instance;
use secretary_engines::SelectionOutcome;
use serde::{Deserialize, Serialize};

use crate::Bounds;

/// Normal quantile for a two-sided 95% interval.
pub const Z95: f64 = 1.959_963_984_540_054;

/// Fewer successes than this and an estimate is flagged as resting on
/// insufficient trials.
pub const SUCCESS_FLOOR: f64 = 30.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    Utility,
    Ordinal,
    Intersection,
    Probability,
}

impl Measure {
    pub const ALL: [Measure; 4] = [Measure::Utility, Measure::Ordinal, Measure::Intersection, Measure::Probability];

    pub fn name(&self) -> &'static str {
        match self {
            Measure::Utility => "utility",
            Measure::Ordinal => "ordinal",
            Measure::Intersection => "intersection",
            Measure::Probability => "probability",
        }
    }
}

/// One competitive ratio. Ratios are at least 1, and infinite when the
/// quantity they divide by is zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureEstimate {
    pub measure: Measure,
    pub estimate: f64,
    /// Half-width of the 95% normal interval (delta method for the ratio).
    /// Zero for exact values.
    pub ci95: f64,
    pub bound: Option<f64>,
    pub trials: u64,
    pub insufficient: bool,
}

/// E|ALG ∩ R^k| against |OPT ∩ R^k|.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrdinalPoint {
    pub k: usize,
    pub opt: usize,
    pub expected: f64,
    pub ci95: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompetitivenessReport {
    pub instance_id: String,
    pub family: String,
    pub n: usize,
    pub rank: usize,
    pub engine: String,
    pub param_p: Option<f64>,
    pub seed: u64,
    /// Monte Carlo trial count; zero for exact reports.
    pub trials: u64,
    pub exact: bool,
    pub weights: String,
    /// Utility, ordinal, intersection, probability, in that order.
    pub measures: Vec<MeasureEstimate>,
    /// OPT, best first.
    pub opt: Vec<usize>,
    /// Pr(e ∈ ALG) by element id.
    pub frequencies: Vec<f64>,
    pub frequency_ci: Vec<f64>,
    pub ordinal_curve: Vec<OrdinalPoint>,
    pub expected_weight: f64,
    pub expected_weight_ci: f64,
    pub opt_weight: f64,
    pub expected_intersection: f64,
    pub expected_intersection_ci: f64,
    /// Largest selection seen in any run with positive probability.
    pub max_selected: usize,
    pub warnings: Vec<String>,
}

impl CompetitivenessReport {
    pub fn measure(&self, m: Measure) -> &MeasureEstimate {
        self.measures.iter().find(|e| e.measure == m).expect("every report carries all four measures")
    }

    pub fn estimate(&self, m: Measure) -> f64 {
        self.measure(m).estimate
    }

    /// min over OPT of Pr(e ∈ ALG); 1 when OPT is empty.
    pub fn min_opt_frequency(&self) -> f64 {
        self.opt.iter().map(|&e| self.frequencies[e]).fold(1.0, f64::min)
    }

    /// w(OPT)/E[w(ALG)] for another compatible weight vector, read off the
    /// per-element frequencies.
    pub fn utility_ratio_for(&self, weights: &[f64]) -> f64 {
        let opt: f64 = self.opt.iter().map(|&e| weights[e]).sum();
        let alg: f64 = weights.iter().zip(&self.frequencies).map(|(w, f)| w * f).sum();
        ratio(opt, alg)
    }
}

fn ratio(num: f64, den: f64) -> f64 {
    if num == 0.0 {
        1.0
    } else if den <= 0.0 {
        f64::INFINITY
    } else {
        num / den
    }
}

/// Outcome of [`dominance_check`].
#[derive(Debug, Clone, PartialEq)]
pub enum Dominance {
    Holds,
    Violated(Vec<String>),
    /// Too few trials for a meaningful comparison.
    Skipped(String),
}

impl Dominance {
    /// Skipped checks do not count as failures.
    pub fn holds(&self) -> bool {
        !matches!(self, Dominance::Violated(_))
    }
}

/// Probability ≥ every other measure and ordinal ≥ utility, each up to the
/// sum of the two interval half-widths.
pub fn dominance_check(report: &CompetitivenessReport) -> Dominance {
    if !report.exact && report.trials < 2 {
        return Dominance::Skipped(format!("{} trial(s) give no interval", report.trials));
    }
    let mut broken = Vec::new();
    let mut compare = |strong: Measure, weak: Measure| {
        let (s, w) = (report.measure(strong), report.measure(weak));
        let slack = s.ci95 + w.ci95 + 1e-9 * w.estimate.abs().min(1e12);
        if s.estimate.is_finite() && !(s.estimate + slack >= w.estimate) {
            broken.push(format!("{} {} < {} {}", strong.name(), s.estimate, weak.name(), w.estimate));
        }
    };
    for weak in [Measure::Utility, Measure::Ordinal, Measure::Intersection] {
        compare(Measure::Probability, weak);
    }
    compare(Measure::Ordinal, Measure::Utility);
    if broken.is_empty() {
        Dominance::Holds
    } else {
        Dominance::Violated(broken)
    }
}

/// Everything fixed about an instance that the tallies need.
pub(crate) struct Context {
    pub n: usize,
    pub order: ValueOrder,
    pub opt: Vec<usize>,
    in_opt: Vec<bool>,
    pub weights: Vec<f64>,
}

impl Context {
    pub fn new(inst: &Instance, weights: Vec<f64>) -> Self {
        let opt = inst.family.greedy(inst.order.ranking());
        let mut in_opt = vec![false; inst.n()];
        opt.iter().for_each(|&e| in_opt[e] = true);
        Context { n: inst.n(), order: inst.order.clone(), opt, in_opt, weights }
    }
}

/// Probability-weighted sums over runs. Monte Carlo runs carry weight 1, so
/// every field but `weight` and `weight_sq` holds an integer and sums in any
/// order to the same value.
#[derive(Debug, Clone)]
pub(crate) struct Tally {
    mass: f64,
    selected: Vec<f64>,
    /// Difference arrays over value positions of |ALG ∩ R^k| and its square.
    d1: Vec<f64>,
    d2: Vec<f64>,
    inter: f64,
    inter_sq: f64,
    weight: f64,
    weight_sq: f64,
    max_selected: usize,
}

impl Tally {
    pub fn new(n: usize) -> Self {
        Tally {
            mass: 0.0,
            selected: vec![0.0; n],
            d1: vec![0.0; n],
            d2: vec![0.0; n],
            inter: 0.0,
            inter_sq: 0.0,
            weight: 0.0,
            weight_sq: 0.0,
            max_selected: 0,
        }
    }

    pub fn record(&mut self, mass: f64, out: &SelectionOutcome, ctx: &Context) {
        self.mass += mass;
        if mass > 0.0 {
            self.max_selected = self.max_selected.max(out.selected.len());
        }
        let mut positions: Vec<usize> = out.selected.iter().map(|&e| ctx.order.position(e)).collect();
        positions.sort_unstable();
        for (j, &p) in positions.iter().enumerate() {
            let j = j as f64 + 1.0;
            self.d1[p] += mass;
            self.d2[p] += mass * (2.0 * j - 1.0);
        }
        let mut hits = 0.0;
        let mut w = 0.0;
        for &e in &out.selected {
            self.selected[e] += mass;
            hits += ctx.in_opt[e] as u8 as f64;
            w += ctx.weights[e];
        }
        self.inter += mass * hits;
        self.inter_sq += mass * hits * hits;
        self.weight += mass * w;
        self.weight_sq += mass * w * w;
    }

    pub fn merge(&mut self, other: &Tally) {
        self.mass += other.mass;
        let add = |a: &mut Vec<f64>, b: &[f64]| a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        add(&mut self.selected, &other.selected);
        add(&mut self.d1, &other.d1);
        add(&mut self.d2, &other.d2);
        self.inter += other.inter;
        self.inter_sq += other.inter_sq;
        self.weight += other.weight;
        self.weight_sq += other.weight_sq;
        self.max_selected = self.max_selected.max(other.max_selected);
    }
}

pub(crate) struct Meta {
    pub instance_id: String,
    pub family: String,
    pub engine: String,
    pub param_p: Option<f64>,
    pub seed: u64,
    pub weights: String,
    pub bounds: Bounds,
}

/// Mean and CI half-width from a sum and a sum of squares.
struct Moments {
    trials: f64,
    exact: bool,
}

impl Moments {
    fn mean_ci(&self, sum: f64, sum_sq: f64) -> (f64, f64) {
        if self.exact {
            return (sum, 0.0);
        }
        let t = self.trials;
        let mean = sum / t;
        if t < 2.0 {
            return (mean, f64::INFINITY);
        }
        let var = ((sum_sq - t * mean * mean) / (t - 1.0)).max(0.0);
        (mean, Z95 * (var / t).sqrt())
    }

    /// num/mean with its delta-method half-width.
    fn ratio(&self, num: f64, mean: f64, ci: f64) -> (f64, f64) {
        let r = ratio(num, mean);
        if num == 0.0 {
            (1.0, 0.0)
        } else if r.is_infinite() {
            (r, if self.exact { 0.0 } else { f64::INFINITY })
        } else {
            (r, num * ci / (mean * mean))
        }
    }

    fn insufficient(&self, successes: f64) -> bool {
        !self.exact && (self.trials < 2.0 || successes < SUCCESS_FLOOR)
    }
}

pub(crate) fn finish(tally: &Tally, ctx: &Context, meta: Meta, exact: bool) -> CompetitivenessReport {
    let trials = if exact { 0 } else { tally.mass as u64 };
    let mom = Moments { trials: tally.mass, exact };
    let n = ctx.n;
    let (frequencies, frequency_ci): (Vec<f64>, Vec<f64>) =
        tally.selected.iter().map(|&c| mom.mean_ci(c, c)).unzip();

    let mut curve = Vec::with_capacity(n);
    let (mut c1, mut c2, mut opt_k) = (0.0, 0.0, 0);
    for p in 0..n {
        c1 += tally.d1[p];
        c2 += tally.d2[p];
        opt_k += ctx.in_opt[ctx.order.element_at(p)] as usize;
        let (expected, ci95) = mom.mean_ci(c1, c2);
        curve.push(OrdinalPoint { k: p + 1, opt: opt_k, expected, ci95 });
    }

    let mut warnings = Vec::new();
    let mut estimate = |measure: Measure, (value, ci): (f64, f64), successes: f64| {
        let insufficient = mom.insufficient(successes);
        if insufficient {
            warnings.push(format!("insufficient trials for the {} estimate", measure.name()));
        }
        MeasureEstimate { measure, estimate: value, ci95: ci, bound: meta.bounds.get(measure), trials, insufficient }
    };

    let opt_weight: f64 = ctx.opt.iter().map(|&e| ctx.weights[e]).sum();
    let (w_mean, w_ci) = mom.mean_ci(tally.weight, tally.weight_sq);
    let total_selected: f64 = tally.selected.iter().sum();
    let utility = estimate(Measure::Utility, mom.ratio(opt_weight, w_mean, w_ci), total_selected);

    // worst k by point estimate; the first one on ties
    let worst = curve
        .iter()
        .filter(|pt| pt.opt > 0)
        .map(|pt| (mom.ratio(pt.opt as f64, pt.expected, pt.ci95), pt.expected))
        .fold(None, |best: Option<((f64, f64), f64)>, cur| match best {
            Some(b) if b.0 .0 >= cur.0 .0 => Some(b),
            _ => Some(cur),
        });
    let ordinal = match worst {
        Some((r, expected)) => estimate(Measure::Ordinal, r, expected * tally.mass),
        None => estimate(Measure::Ordinal, (1.0, 0.0), f64::INFINITY),
    };

    let (i_mean, i_ci) = mom.mean_ci(tally.inter, tally.inter_sq);
    let intersection = estimate(Measure::Intersection, mom.ratio(ctx.opt.len() as f64, i_mean, i_ci), tally.inter);

    let weakest = ctx.opt.iter().copied().min_by(|&a, &b| frequencies[a].total_cmp(&frequencies[b]).then(a.cmp(&b)));
    let probability = match weakest {
        Some(e) => estimate(Measure::Probability, mom.ratio(1.0, frequencies[e], frequency_ci[e]), tally.selected[e]),
        None => estimate(Measure::Probability, (1.0, 0.0), f64::INFINITY),
    };

    CompetitivenessReport {
        instance_id: meta.instance_id,
        family: meta.family,
        n,
        rank: ctx.opt.len(),
        engine: meta.engine,
        param_p: meta.param_p,
        seed: meta.seed,
        trials,
        exact,
        weights: meta.weights,
        measures: vec![utility, ordinal, intersection, probability],
        opt: ctx.opt.clone(),
        frequencies,
        frequency_ci,
        ordinal_curve: curve,
        expected_weight: w_mean,
        expected_weight_ci: w_ci,
        opt_weight,
        expected_intersection: i_mean,
        expected_intersection_ci: i_ci,
        max_selected: tally.max_selected,
        warnings,
    }
}
