use layered_msp::coupling_fidelity;
use matroid_core::{verify_matroid_axioms, ValueOrder};
use matroid_zoo::{Instance, TransversalInstance};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use secretary_engines::{
    verify_forbidden_property, Counterexample, ForbiddenReport, ForbiddenSetEngine, MatchingRule, SampleRule,
    TransversalEngine,
};
use serde::{Deserialize, Serialize};

use crate::{forbidden_engine, generate_instance, GeneratorSpec, HarnessError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyLevel {
    /// Ground sets up to 5 elements.
    Quick,
    /// Ground sets up to 7 elements.
    Full,
}

impl VerifyLevel {
    pub fn max_n(self) -> usize {
        match self {
            VerifyLevel::Quick => 5,
            VerifyLevel::Full => 7,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub subject: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub level: VerifyLevel,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Seeds of the shipped fixtures at each size.
pub const FIXTURE_SEEDS: [u64; 2] = [11, 29];

/// One small generator per family with a forbidden-set rule, sized for `n`
/// elements.
pub fn fixture_generators(n: usize) -> Vec<GeneratorSpec> {
    vec![
        GeneratorSpec::Uniform { n, rank: 1 },
        GeneratorSpec::Transversal { n, left: 3, edge_prob: 0.5 },
        GeneratorSpec::Gammoid { vertices: n + 3, sources: 2, n, arc_prob: 0.25 },
        GeneratorSpec::Matching { vertices: n + 2, edges: n + 4, n },
        GeneratorSpec::Graphic { vertices: 5, edges: n, connected: false },
        GeneratorSpec::Hypergraphic { vertices: 4, n, max_edge: 3 },
        GeneratorSpec::Sparse { rows: 4, cols: n, k: 3, field_p: 2 },
        GeneratorSpec::Semiplanar { n },
        GeneratorSpec::Laminar { n },
    ]
}

/// The shipped fixture for (`spec`, `seed`).
pub fn fixture(spec: &GeneratorSpec, seed: u64) -> Result<Instance, HarnessError> {
    generate_instance(spec, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn describe_counterexample(c: &Counterexample) -> String {
    format!("arrivals {:?}, sample {}, t {}: {:?}", c.arrivals, c.sample, c.t, c.violation)
}

fn forbidden_check(subject: String, report: &ForbiddenReport) -> CheckResult {
    let detail = match &report.counterexample {
        Some(c) => format!("counterexample: {}", describe_counterexample(c)),
        None => format!(
            "{} orders, {} implications, largest set {} of {}",
            report.permutations, report.implications, report.largest_forbidden, report.k
        ),
    };
    CheckResult { suite: "forbidden_sets", subject, passed: report.passed(), detail }
}

/// The transversal rule with matchings grown in arrival order: its witness
/// depends on history, so the verifier must reject it.
pub fn history_dependent_mutant() -> Result<ForbiddenReport, HarnessError> {
    let inst = TransversalInstance::new(2, vec![vec![0, 1], vec![0], vec![0, 1]])?;
    let order = ValueOrder::identity(3);
    let engine = TransversalEngine::new(&inst, &order, SampleRule::Half).with_matching_rule(MatchingRule::ArrivalOrder);
    Ok(verify_forbidden_property(&engine)?)
}

pub fn verify_suite(level: VerifyLevel) -> Result<SuiteReport, HarnessError> {
    verify_suite_with(level, false)
}

/// Matroid axioms and forbidden sets on every fixture up to the level's size,
/// and coupling fidelity at the largest size. `inject_mutant` adds
/// [`history_dependent_mutant`], which must fail.
pub fn verify_suite_with(level: VerifyLevel, inject_mutant: bool) -> Result<SuiteReport, HarnessError> {
    let mut checks = Vec::new();
    let top = level.max_n();
    for n in 1..=top {
        for spec in fixture_generators(n) {
            for seed in FIXTURE_SEEDS {
                let inst = fixture(&spec, seed)?;
                let subject = format!("{} n={n} seed={seed}", spec.label());
                let axioms = verify_matroid_axioms(&inst.family)?;
                checks.push(CheckResult {
                    suite: "axioms",
                    subject: subject.clone(),
                    passed: axioms,
                    detail: if axioms { "ok".into() } else { "independence oracle breaks an axiom".into() },
                });
                let engine: Box<dyn ForbiddenSetEngine + '_> = forbidden_engine(&inst, SampleRule::Half)?;
                let report = verify_forbidden_property(engine.as_ref())?;
                checks.push(forbidden_check(format!("{} {subject}", engine.name()), &report));
            }
        }
    }
    for spec in [
        GeneratorSpec::Uniform { n: top, rank: 2 },
        GeneratorSpec::Graphic { vertices: 4, edges: top.min(6), connected: false },
        GeneratorSpec::Laminar { n: top },
        GeneratorSpec::Transversal { n: top, left: 3, edge_prob: 0.5 },
    ] {
        for seed in FIXTURE_SEEDS {
            let inst = fixture(&spec, seed)?;
            let outcome = coupling_fidelity(&inst.family, &inst.order)?;
            checks.push(CheckResult {
                suite: "coupling",
                subject: format!("{} n={} seed={seed}", spec.label(), inst.n()),
                passed: outcome.is_some(),
                detail: match outcome {
                    Some(pairs) => format!("{pairs} distinct (V, W) pairs, identical histograms"),
                    None => "histograms differ".into(),
                },
            });
        }
    }
    if inject_mutant {
        checks.push(forbidden_check("transversal arrival-order mutant".into(), &history_dependent_mutant()?));
    }
    Ok(SuiteReport { level, checks })
}
