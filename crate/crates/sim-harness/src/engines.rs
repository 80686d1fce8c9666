use layered_msp::{FeldmanLayered, OrdinalReduction, ProbabilityReduction};
use matroid_core::Matroid;
use matroid_zoo::{Family, Instance, InstanceSpec};
use secretary_engines::{
    key_lemma_bound, key_lemma_values, ClassicalSecretary, ForbiddenSetEngine, ForestEngine, FramedEngine,
    GammoidEngine, ImprovingGreedy, KleinbergOriginal, LaminarEngine, OfflineGreedy, OnlineEngine, OnlineGreedy,
    PackingEngine, SampleRule, SemiplanarEngine, ThresholdPrice, TransversalEngine, UniformVariant,
};
use serde::{Deserialize, Serialize};

use crate::{HarnessError, Measure, WeightPreset};

/// Engine choice and its parameters, as written in plans and configs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "engine", rename_all = "snake_case", deny_unknown_fields)]
pub enum EngineSpec {
    /// The forbidden-set rule of the instance's family. Without `p` the
    /// sampling probability is p(k) for the family's k.
    ForbiddenSet {
        #[serde(default)]
        p: Option<f64>,
    },
    ImprovingGreedy {
        #[serde(default = "half")]
        sample: SampleRule,
    },
    /// Accept whatever keeps the selection independent.
    Greedy,
    /// Sees the whole order up front; selects OPT.
    OfflineGreedy,
    /// Threshold-price rule with weights from `weights`; ρ is the rank.
    Tpa {
        #[serde(default)]
        weights: WeightPreset,
    },
    /// Uniform matroids only; ρ is the rank.
    Kleinberg,
    /// Uniform matroids only; ρ is the rank.
    UniformVariant,
    OrdinalReduction,
    ProbabilityReduction,
}

fn half() -> SampleRule {
    SampleRule::Half
}

impl EngineSpec {
    pub fn name(&self) -> &'static str {
        match self {
            EngineSpec::ForbiddenSet { .. } => "forbidden_set",
            EngineSpec::ImprovingGreedy { .. } => "improving_greedy",
            EngineSpec::Greedy => "greedy",
            EngineSpec::OfflineGreedy => "offline_greedy",
            EngineSpec::Tpa { .. } => "tpa",
            EngineSpec::Kleinberg => "kleinberg",
            EngineSpec::UniformVariant => "uniform_variant",
            EngineSpec::OrdinalReduction => "ordinal_reduction",
            EngineSpec::ProbabilityReduction => "probability_reduction",
        }
    }
}

/// Proven ratio per measure, where one applies to the engine at these
/// parameters.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Bounds {
    pub utility: Option<f64>,
    pub ordinal: Option<f64>,
    pub intersection: Option<f64>,
    pub probability: Option<f64>,
}

impl Bounds {
    /// A probability guarantee carries over to every other measure.
    pub fn all(alpha: f64) -> Self {
        Bounds { utility: Some(alpha), ordinal: Some(alpha), intersection: Some(alpha), probability: Some(alpha) }
    }

    pub fn get(&self, m: Measure) -> Option<f64> {
        match m {
            Measure::Utility => self.utility,
            Measure::Ordinal => self.ordinal,
            Measure::Intersection => self.intersection,
            Measure::Probability => self.probability,
        }
    }
}

/// An engine bound to an instance, with its proven ratios.
pub struct BuiltEngine<'a> {
    pub engine: Box<dyn OnlineEngine + 'a>,
    pub bounds: Bounds,
    /// Sampling probability, when the engine has one.
    pub param_p: Option<f64>,
    /// Declared |𝓕| bound for forbidden-set rules.
    pub forbidden_size: Option<usize>,
}

/// 1/(1 − ln 2), the intersection guarantee of Improving Greedy with s = ⌊n/2⌋.
pub fn improving_greedy_bound() -> f64 {
    1.0 / (1.0 - std::f64::consts::LN_2)
}

/// The forbidden-set engine for the instance's family, if it has one.
pub fn forbidden_engine<'a>(
    inst: &'a Instance,
    rule: SampleRule,
) -> Result<Box<dyn ForbiddenSetEngine + 'a>, HarnessError> {
    let order = &inst.order;
    let mismatch = |why: &str| HarnessError::Mismatch {
        engine: "forbidden_set",
        family: inst.family.name(),
        why: why.to_string(),
    };
    let engine: Box<dyn ForbiddenSetEngine + 'a> = match (&inst.family, inst.spec()) {
        (Family::Uniform(u), _) if u.rank() == 1 => Box::new(ClassicalSecretary::new(order, rule)),
        (Family::Uniform(_), _) => return Err(mismatch("only rank-one uniform matroids have a forbidden-set rule")),
        (Family::Partition(_), _) => return Err(mismatch("no forbidden-set rule for partition matroids")),
        (Family::Graphic(g), _) => Box::new(ForestEngine::graphic(g, order, rule)),
        (Family::Hypergraphic(h), _) => Box::new(ForestEngine::hypergraphic(h, order, rule)),
        (Family::Laminar(l), _) => Box::new(LaminarEngine::new(l, order, rule)),
        (Family::Transversal(t), _) => Box::new(TransversalEngine::new(t, order, rule)),
        (Family::Gammoid(g), InstanceSpec::Gammoid { vertices, .. }) => {
            Box::new(GammoidEngine::new(g, order, rule, *vertices))
        }
        (Family::Semiplanar(s), _) => Box::new(SemiplanarEngine::new(s, order, rule)),
        (Family::Matching(m), InstanceSpec::Matching { vertices, .. }) => {
            Box::new(PackingEngine::new(m, order, rule, *vertices))
        }
        (Family::Linear(l), _) => Box::new(FramedEngine::new(l, order, rule)),
        _ => unreachable!("instance families always match their descriptions"),
    };
    Ok(engine)
}

fn uniform_rank(inst: &Instance, engine: &'static str) -> Result<usize, HarnessError> {
    match &inst.family {
        Family::Uniform(u) => Ok(u.rank()),
        other => Err(HarnessError::Mismatch {
            engine,
            family: other.name(),
            why: "the rule is defined for uniform matroids only".into(),
        }),
    }
}

/// Binds `spec` to `inst`.
pub fn build_engine<'a>(inst: &'a Instance, spec: &EngineSpec) -> Result<BuiltEngine<'a>, HarnessError> {
    let m: &'a dyn Matroid = &inst.family;
    let order = &inst.order;
    let built = |engine: Box<dyn OnlineEngine + 'a>, bounds| BuiltEngine {
        engine,
        bounds,
        param_p: None,
        forbidden_size: None,
    };
    Ok(match *spec {
        EngineSpec::ForbiddenSet { p } => {
            // k does not depend on p, so probe with the rule we may replace
            let k = forbidden_engine(inst, SampleRule::Half)?.forbidden_size();
            let p = match p {
                Some(p) if !(p > 0.0 && p < 1.0) => {
                    return Err(HarnessError::Plan(format!("sampling probability {p} outside (0, 1)")))
                }
                Some(p) => p,
                None => key_lemma_values(k)?.p,
            };
            let engine = forbidden_engine(inst, SampleRule::Binomial(p))?;
            BuiltEngine {
                engine,
                bounds: Bounds::all(1.0 / key_lemma_bound(k, p)?),
                param_p: Some(p),
                forbidden_size: Some(k),
            }
        }
        EngineSpec::ImprovingGreedy { sample } => {
            let bounds = match sample {
                SampleRule::Half => Bounds { intersection: Some(improving_greedy_bound()), ..Bounds::default() },
                _ => Bounds::default(),
            };
            BuiltEngine { param_p: sample.probability(), ..built(Box::new(ImprovingGreedy::new(m, order, sample)), bounds) }
        }
        EngineSpec::Greedy => built(Box::new(OnlineGreedy::new(m, order)), Bounds::default()),
        EngineSpec::OfflineGreedy => built(Box::new(OfflineGreedy::new(m, order)), Bounds::all(1.0)),
        EngineSpec::Tpa { weights } => {
            let rho = m.greedy(order.ranking()).len();
            if rho == 0 {
                return Err(HarnessError::Mismatch { engine: "tpa", family: inst.family.name(), why: "rank zero".into() });
            }
            let engine = ThresholdPrice::new(m, order, weights.weights(order), rho)?;
            BuiltEngine { param_p: Some(0.5), ..built(Box::new(engine), Bounds::default()) }
        }
        EngineSpec::Kleinberg => {
            let rho = uniform_rank(inst, "kleinberg")?;
            built(Box::new(KleinbergOriginal::new(order, rho)?), Bounds::default())
        }
        EngineSpec::UniformVariant => {
            let rho = uniform_rank(inst, "uniform_variant")?;
            built(Box::new(UniformVariant::new(order, rho)?), Bounds::default())
        }
        EngineSpec::OrdinalReduction => BuiltEngine {
            param_p: Some(0.5),
            ..built(Box::new(OrdinalReduction::new(m, order, FeldmanLayered)), Bounds::default())
        },
        EngineSpec::ProbabilityReduction => BuiltEngine {
            param_p: Some(0.5),
            ..built(Box::new(ProbabilityReduction::new(m, order, FeldmanLayered)), Bounds::default())
        },
    })
}
