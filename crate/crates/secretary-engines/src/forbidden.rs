//! Rules with forbidden sets: each keeps a marking state and accepts r_i when
//! r_i ∈ OPT(R_i) and its canonical witness avoids the marks.

use matroid_core::{greedy_opt, Matroid, ValueOrder};
use matroid_zoo::{
    pre_nex, ArcGammoidInstance, GammoidInstance, GraphicInstance, HypergraphicInstance, LaminarInstance,
    LineOrder, MatchingInstance, SparseLinearInstance, TransversalInstance, UniformMatroid,
};

use crate::engine::{index_in, scan_optimum};
use crate::line_sets::{forbidden_four, forbidden_three};
use crate::trial::Recorder;
use crate::{ArrivalTrial, EngineError, ForbiddenSetEngine, OnlineEngine, Randomness, SampleRule, SelectionOutcome};

macro_rules! online_boilerplate {
    ($name:expr) => {
        fn name(&self) -> &'static str {
            $name
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
    };
}

/// Sample, then take the first arrival beating every sampled element.
#[derive(Debug, Clone)]
pub struct ClassicalSecretary<'a> {
    order: &'a ValueOrder,
    single: UniformMatroid,
    rule: SampleRule,
}

impl<'a> ClassicalSecretary<'a> {
    pub fn new(order: &'a ValueOrder, rule: SampleRule) -> Self {
        ClassicalSecretary { order, single: UniformMatroid::new(order.len(), 1), rule }
    }
}

impl OnlineEngine for ClassicalSecretary<'_> {
    online_boilerplate!("classical");

    fn run(&self, trial: &ArrivalTrial, _: &mut dyn Randomness, trace: bool) -> Result<SelectionOutcome, EngineError> {
        let mut rec = Recorder::new(trial.n(), trace);
        let mut best: Option<usize> = None;
        let mut done = false;
        for (idx, &r) in trial.arrivals.iter().enumerate() {
            let record = best.is_none_or(|b| self.order.better(r, b));
            if record {
                best = Some(r);
            }
            let ok = idx >= trial.sample && record && !done;
            done |= ok;
            rec.step(idx + 1, r, record, idx >= trial.sample && record, ok);
        }
        Ok(rec.finish())
    }
}

impl ForbiddenSetEngine for ClassicalSecretary<'_> {
    fn forbidden_size(&self) -> usize {
        1
    }

    fn matroid(&self) -> &dyn Matroid {
        &self.single
    }

    fn order(&self) -> &ValueOrder {
        self.order
    }

    fn forbidden(&self, opt_x: &[usize], _: &[usize], _: usize) -> Result<Vec<usize>, EngineError> {
        Ok(opt_x.to_vec())
    }
}

/// How the transversal rule picks its matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchingRule {
    Canonical,
    /// Deliberately wrong: matches OPT(R_i) in arrival order, so the witness
    /// depends on history. Exists to show the verifier catches it.
    ArrivalOrder,
}

/// Accept r_i ∈ OPT(R_i) when its canonical partner M_{OPT(R_i)}(r_i) is still free.
#[derive(Debug, Clone)]
pub struct TransversalEngine<'a> {
    inst: &'a TransversalInstance,
    order: &'a ValueOrder,
    rule: SampleRule,
    matching: MatchingRule,
}

impl<'a> TransversalEngine<'a> {
    pub fn new(inst: &'a TransversalInstance, order: &'a ValueOrder, rule: SampleRule) -> Self {
        TransversalEngine { inst, order, rule, matching: MatchingRule::Canonical }
    }

    pub fn with_matching_rule(mut self, matching: MatchingRule) -> Self {
        self.matching = matching;
        self
    }
}

impl OnlineEngine for TransversalEngine<'_> {
    online_boilerplate!("transversal");

    fn run(&self, trial: &ArrivalTrial, _: &mut dyn Randomness, trace: bool) -> Result<SelectionOutcome, EngineError> {
        let arrival_rank;
        let witness_order = match self.matching {
            MatchingRule::Canonical => self.order,
            MatchingRule::ArrivalOrder => {
                arrival_rank = ValueOrder::from_ranking(trial.arrivals.clone()).map_err(|_| {
                    EngineError::Domain("arrival sequence is not a permutation".into())
                })?;
                &arrival_rank
            }
        };
        let mut covered = vec![false; self.inst.left_size()];
        scan_optimum(self.inst, self.order, trial, trace, |r, opt| {
            let partner = self.inst.canonical_matching(witness_order, opt)?[index_in(opt, r)];
            if covered[partner] {
                return Ok(false);
            }
            covered[partner] = true;
            Ok(true)
        })
    }
}

impl ForbiddenSetEngine for TransversalEngine<'_> {
    fn forbidden_size(&self) -> usize {
        1
    }

    fn matroid(&self) -> &dyn Matroid {
        self.inst
    }

    fn order(&self) -> &ValueOrder {
        self.order
    }

    fn forbidden(&self, opt_x: &[usize], opt_y: &[usize], r_star: usize) -> Result<Vec<usize>, EngineError> {
        let target = self.inst.canonical_matching(self.order, opt_y)?[index_in(opt_y, r_star)];
        let partners = self.inst.canonical_matching(self.order, opt_x)?;
        Ok(opt_x.iter().zip(partners).filter(|&(_, l)| l == target).map(|(&v, _)| v).collect())
    }
}

/// Accept r_i ∈ OPT(R_i) when its canonical path misses every marked vertex.
#[derive(Debug, Clone)]
pub struct GammoidEngine<'a> {
    inst: &'a GammoidInstance,
    order: &'a ValueOrder,
    rule: SampleRule,
    vertices: usize,
}

impl<'a> GammoidEngine<'a> {
    /// `vertices` bounds the vertex ids used by the digraph.
    pub fn new(inst: &'a GammoidInstance, order: &'a ValueOrder, rule: SampleRule, vertices: usize) -> Self {
        GammoidEngine { inst, order, rule, vertices }
    }
}

impl OnlineEngine for GammoidEngine<'_> {
    online_boilerplate!("gammoid");

    fn run(&self, trial: &ArrivalTrial, _: &mut dyn Randomness, trace: bool) -> Result<SelectionOutcome, EngineError> {
        let mut used = vec![false; self.vertices];
        scan_optimum(self.inst, self.order, trial, trace, |r, opt| {
            let paths = self.inst.canonical_path_system(self.order, opt)?;
            let path = &paths[index_in(opt, r)];
            if path.iter().any(|&v| used[v]) {
                return Ok(false);
            }
            path.iter().for_each(|&v| used[v] = true);
            Ok(true)
        })
    }
}

impl ForbiddenSetEngine for GammoidEngine<'_> {
    fn forbidden_size(&self) -> usize {
        self.inst.mu()
    }

    fn matroid(&self) -> &dyn Matroid {
        self.inst
    }

    fn order(&self) -> &ValueOrder {
        self.order
    }

    fn forbidden(&self, opt_x: &[usize], opt_y: &[usize], r_star: usize) -> Result<Vec<usize>, EngineError> {
        let target = &self.inst.canonical_path_system(self.order, opt_y)?[index_in(opt_y, r_star)];
        let paths = self.inst.canonical_path_system(self.order, opt_x)?;
        Ok(opt_x
            .iter()
            .zip(&paths)
            .filter(|(_, p)| p.iter().any(|v| target.contains(v)))
            .map(|(&v, _)| v)
            .collect())
    }
}

/// Matching-matroid packing rule: accept a terminal already covered by the
/// packing, or one whose canonical matching edge is vertex-disjoint from it.
#[derive(Debug, Clone)]
pub struct PackingEngine<'a> {
    inst: &'a MatchingInstance,
    order: &'a ValueOrder,
    rule: SampleRule,
    vertices: usize,
}

impl<'a> PackingEngine<'a> {
    pub fn new(inst: &'a MatchingInstance, order: &'a ValueOrder, rule: SampleRule, vertices: usize) -> Self {
        PackingEngine { inst, order, rule, vertices }
    }
}

impl OnlineEngine for PackingEngine<'_> {
    online_boilerplate!("packing");

    fn run(&self, trial: &ArrivalTrial, _: &mut dyn Randomness, trace: bool) -> Result<SelectionOutcome, EngineError> {
        let mut covered = vec![false; self.vertices];
        scan_optimum(self.inst, self.order, trial, trace, |r, opt| {
            if covered[self.inst.terminal(r)] {
                return Ok(true);
            }
            let (a, b) = self.inst.canonical_packing(opt)?[index_in(opt, r)];
            if covered[a] || covered[b] {
                return Ok(false);
            }
            covered[a] = true;
            covered[b] = true;
            Ok(true)
        })
    }
}

impl ForbiddenSetEngine for PackingEngine<'_> {
    fn forbidden_size(&self) -> usize {
        2
    }

    fn matroid(&self) -> &dyn Matroid {
        self.inst
    }

    fn order(&self) -> &ValueOrder {
        self.order
    }

    fn forbidden(&self, opt_x: &[usize], opt_y: &[usize], r_star: usize) -> Result<Vec<usize>, EngineError> {
        let (own, other) = self.inst.canonical_packing(opt_y)?[index_in(opt_y, r_star)];
        debug_assert_eq!(own, self.inst.terminal(r_star));
        let edges = self.inst.canonical_packing(opt_x)?;
        Ok(opt_x.iter().zip(edges).filter(|&(_, (a, b))| a == other || b == other).map(|(&v, _)| v).collect())
    }
}

#[derive(Debug, Clone, Copy)]
enum ForestSource<'a> {
    Graph(&'a GraphicInstance),
    Hyper(&'a HypergraphicInstance),
}

/// Orients the optimum forest canonically and accepts r_i when neither end
/// of its arc already has an incoming arc. Serves graphic and hypergraphic
/// instances alike.
#[derive(Debug, Clone)]
pub struct ForestEngine<'a> {
    source: ForestSource<'a>,
    order: &'a ValueOrder,
    rule: SampleRule,
}

impl<'a> ForestEngine<'a> {
    pub fn graphic(inst: &'a GraphicInstance, order: &'a ValueOrder, rule: SampleRule) -> Self {
        ForestEngine { source: ForestSource::Graph(inst), order, rule }
    }

    pub fn hypergraphic(inst: &'a HypergraphicInstance, order: &'a ValueOrder, rule: SampleRule) -> Self {
        ForestEngine { source: ForestSource::Hyper(inst), order, rule }
    }

    fn vertices(&self) -> usize {
        match self.source {
            ForestSource::Graph(g) => g.vertices(),
            ForestSource::Hyper(h) => h.vertices(),
        }
    }

    /// arc(X) aligned with `x`.
    pub fn arcs(&self, x: &[usize]) -> Result<Vec<(usize, usize)>, EngineError> {
        Ok(match self.source {
            ForestSource::Graph(g) => g.orientation(x)?,
            ForestSource::Hyper(h) => h.orientation(self.order, x)?,
        })
    }
}

impl OnlineEngine for ForestEngine<'_> {
    fn name(&self) -> &'static str {
        match self.source {
            ForestSource::Graph(_) => "graphic",
            ForestSource::Hyper(_) => "hypergraphic",
        }
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
        let mut indeg = vec![0u8; self.vertices()];
        scan_optimum(self.matroid(), self.order, trial, trace, |r, opt| {
            let (u, v) = self.arcs(opt)?[index_in(opt, r)];
            if indeg[u] != 0 || indeg[v] != 0 {
                return Ok(false);
            }
            indeg[v] = 1;
            Ok(true)
        })
    }
}

impl ForbiddenSetEngine for ForestEngine<'_> {
    fn forbidden_size(&self) -> usize {
        2
    }

    fn matroid(&self) -> &dyn Matroid {
        match self.source {
            ForestSource::Graph(g) => g,
            ForestSource::Hyper(h) => h,
        }
    }

    fn order(&self) -> &ValueOrder {
        self.order
    }

    /// Elements of OPT(X) whose arc points at an endpoint of edge(r*, OPT(Y)).
    fn forbidden(&self, opt_x: &[usize], opt_y: &[usize], r_star: usize) -> Result<Vec<usize>, EngineError> {
        let (a, b) = self.arcs(opt_y)?[index_in(opt_y, r_star)];
        let arcs = self.arcs(opt_x)?;
        Ok(opt_x.iter().zip(arcs).filter(|&(_, (_, h))| h == a || h == b).map(|(&f, _)| f).collect())
    }
}

/// k-framed rule: accept r_i ∈ OPT(R_i) when no frame element of C(B, r_i) is
/// marked, then mark π_{OPT(R_i)}(r_i).
#[derive(Debug, Clone)]
pub struct FramedEngine<'a> {
    inst: &'a SparseLinearInstance,
    order: &'a ValueOrder,
    rule: SampleRule,
}

impl<'a> FramedEngine<'a> {
    pub fn new(inst: &'a SparseLinearInstance, order: &'a ValueOrder, rule: SampleRule) -> Self {
        FramedEngine { inst, order, rule }
    }
}

impl OnlineEngine for FramedEngine<'_> {
    online_boilerplate!("framed");

    fn run(&self, trial: &ArrivalTrial, _: &mut dyn Randomness, trace: bool) -> Result<SelectionOutcome, EngineError> {
        let mut marked = vec![false; self.inst.rows()];
        scan_optimum(self.inst, self.order, trial, trace, |r, opt| {
            if self.inst.frame_circuit(r).iter().any(|&b| marked[b]) {
                return Ok(false);
            }
            let row = self.inst.frame_injection(self.order, opt)?[index_in(opt, r)];
            marked[row] = true;
            Ok(true)
        })
    }
}

impl ForbiddenSetEngine for FramedEngine<'_> {
    fn forbidden_size(&self) -> usize {
        self.inst.k()
    }

    fn matroid(&self) -> &dyn Matroid {
        self.inst
    }

    fn order(&self) -> &ValueOrder {
        self.order
    }

    fn forbidden(&self, opt_x: &[usize], _: &[usize], r_star: usize) -> Result<Vec<usize>, EngineError> {
        let circuit = self.inst.frame_circuit(r_star);
        let rows = self.inst.frame_injection(self.order, opt_x)?;
        Ok(opt_x.iter().zip(rows).filter(|&(_, b)| circuit.contains(&b)).map(|(&f, _)| f).collect())
    }
}

/// Shared driver for the two line-based rules: with s = 0 take r_1 alone,
/// otherwise freeze J = OPT(R_s) as positions on the line and let `admit`
/// decide each later arrival in the current optimum by its position.
fn scan_line(
    m: &dyn Matroid,
    order: &ValueOrder,
    trial: &ArrivalTrial,
    trace: bool,
    mut admit: impl FnMut(&[usize], usize) -> Result<bool, EngineError>,
    line: &LineOrder,
) -> Result<SelectionOutcome, EngineError> {
    if trial.sample == 0 {
        let mut rec = Recorder::new(trial.n(), trace);
        for (idx, &r) in trial.arrivals.iter().enumerate() {
            rec.step(idx + 1, r, idx == 0, idx == 0, idx == 0);
        }
        return Ok(rec.finish());
    }
    let j = line.positions(&greedy_opt(m, order, trial.prefix(trial.sample)));
    scan_optimum(m, order, trial, trace, |r, _| admit(&j, line.position(r)))
}

/// Semiplanar rule: accept r_i ∈ OPT(R_i) when both neighbours of r_i in
/// OPT(R_s) + r_i (sentinels included) are unmarked, then mark them.
#[derive(Debug, Clone)]
pub struct SemiplanarEngine<'a> {
    inst: &'a ArcGammoidInstance,
    order: &'a ValueOrder,
    rule: SampleRule,
}

impl<'a> SemiplanarEngine<'a> {
    pub fn new(inst: &'a ArcGammoidInstance, order: &'a ValueOrder, rule: SampleRule) -> Self {
        SemiplanarEngine { inst, order, rule }
    }
}

impl OnlineEngine for SemiplanarEngine<'_> {
    online_boilerplate!("semiplanar");

    fn run(&self, trial: &ArrivalTrial, _: &mut dyn Randomness, trace: bool) -> Result<SelectionOutcome, EngineError> {
        let n = self.order.len();
        let mut marked = vec![false; n + 2];
        let admit = |j: &[usize], y: usize| {
            let (pre, nex) = pre_nex(j, n, y);
            if marked[pre] || marked[nex] {
                return Ok(false);
            }
            marked[pre] = true;
            marked[nex] = true;
            Ok(true)
        };
        scan_line(self.inst, self.order, trial, trace, admit, self.inst.line())
    }
}

impl ForbiddenSetEngine for SemiplanarEngine<'_> {
    fn forbidden_size(&self) -> usize {
        4
    }

    fn matroid(&self) -> &dyn Matroid {
        self.inst
    }

    fn order(&self) -> &ValueOrder {
        self.order
    }

    /// 𝓕_4(OPT(X), r*) ∩ [n].
    fn forbidden(&self, opt_x: &[usize], _: &[usize], r_star: usize) -> Result<Vec<usize>, EngineError> {
        let line = self.inst.line();
        let x = line.positions(opt_x);
        Ok(on_line(line, &forbidden_four(&x, line.len(), line.position(r_star))))
    }
}

/// Laminar rule: accept r_i ∈ OPT(R_i) when its representative π_{OPT(R_s)}(r_i)
/// is unmarked, then mark it.
#[derive(Debug, Clone)]
pub struct LaminarEngine<'a> {
    inst: &'a LaminarInstance,
    order: &'a ValueOrder,
    rule: SampleRule,
}

impl<'a> LaminarEngine<'a> {
    pub fn new(inst: &'a LaminarInstance, order: &'a ValueOrder, rule: SampleRule) -> Self {
        LaminarEngine { inst, order, rule }
    }
}

impl OnlineEngine for LaminarEngine<'_> {
    online_boilerplate!("laminar");

    fn run(&self, trial: &ArrivalTrial, _: &mut dyn Randomness, trace: bool) -> Result<SelectionOutcome, EngineError> {
        let mut marked = vec![false; self.order.len() + 2];
        let admit = |j: &[usize], y: usize| {
            let rep = self.inst.representative(j, y)?;
            if marked[rep] {
                return Ok(false);
            }
            marked[rep] = true;
            Ok(true)
        };
        scan_line(self.inst, self.order, trial, trace, admit, self.inst.line())
    }
}

impl ForbiddenSetEngine for LaminarEngine<'_> {
    fn forbidden_size(&self) -> usize {
        3
    }

    fn matroid(&self) -> &dyn Matroid {
        self.inst
    }

    fn order(&self) -> &ValueOrder {
        self.order
    }

    /// 𝓕_3(OPT(X), r*) ∩ [n]; empty when OPT(X) is.
    fn forbidden(&self, opt_x: &[usize], _: &[usize], r_star: usize) -> Result<Vec<usize>, EngineError> {
        if opt_x.is_empty() {
            return Ok(Vec::new());
        }
        let line = self.inst.line();
        let x = line.positions(opt_x);
        Ok(on_line(line, &forbidden_three(self.inst, &x, line.position(r_star))?))
    }
}

/// Elements at the non-sentinel positions among `positions`.
fn on_line(line: &LineOrder, positions: &[usize]) -> Vec<usize> {
    positions.iter().filter_map(|&p| line.element(p)).collect()
}
