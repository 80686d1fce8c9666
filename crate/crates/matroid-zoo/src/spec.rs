use std::path::Path;

use matroid_core::{Matroid, ValueOrder};
use serde::{Deserialize, Serialize};

use crate::{
    ArcGammoidInstance, GammoidInstance, GraphicInstance, HypergraphicInstance, LaminarInstance, MatchingInstance,
    PartitionMatroid, SparseLinearInstance, TransversalInstance, UniformMatroid, ZooError,
};

/// On-disk instance description. `order` lists element ids from best to worst.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum InstanceSpec {
    Uniform {
        n: usize,
        rank: usize,
        order: Vec<usize>,
    },
    Partition {
        n: usize,
        parts: Vec<Vec<usize>>,
        caps: Vec<usize>,
        order: Vec<usize>,
    },
    Graphic {
        n: usize,
        vertices: usize,
        edges: Vec<(usize, usize)>,
        order: Vec<usize>,
    },
    Hypergraphic {
        n: usize,
        vertices: usize,
        edges: Vec<Vec<usize>>,
        order: Vec<usize>,
    },
    Laminar {
        n: usize,
        laminar_sets: Vec<Vec<usize>>,
        caps: Vec<usize>,
        order: Vec<usize>,
    },
    Transversal {
        n: usize,
        left: usize,
        bipartite_adj: Vec<Vec<usize>>,
        order: Vec<usize>,
    },
    Gammoid {
        n: usize,
        vertices: usize,
        digraph_arcs: Vec<(usize, usize)>,
        sources: Vec<usize>,
        terminals: Vec<usize>,
        mu: usize,
        order: Vec<usize>,
    },
    /// Single source; `terminals` are listed left to right.
    Semiplanar {
        n: usize,
        vertices: usize,
        digraph_arcs: Vec<(usize, usize)>,
        caps: Vec<usize>,
        sources: Vec<usize>,
        terminals: Vec<usize>,
        order: Vec<usize>,
    },
    Matching {
        n: usize,
        vertices: usize,
        edges: Vec<(usize, usize)>,
        terminals: Vec<usize>,
        order: Vec<usize>,
    },
    Linear {
        n: usize,
        matrix: Vec<Vec<i64>>,
        field_p: u64,
        k: usize,
        order: Vec<usize>,
    },
}

/// A built matroid of one of the supported families.
#[derive(Debug, Clone)]
pub enum Family {
    Uniform(UniformMatroid),
    Partition(PartitionMatroid),
    Graphic(GraphicInstance),
    Hypergraphic(HypergraphicInstance),
    Laminar(LaminarInstance),
    Transversal(TransversalInstance),
    Gammoid(GammoidInstance),
    Semiplanar(ArcGammoidInstance),
    Matching(MatchingInstance),
    Linear(SparseLinearInstance),
}

macro_rules! each_family {
    ($value:expr, $m:ident => $body:expr) => {
        match $value {
            Family::Uniform($m) => $body,
            Family::Partition($m) => $body,
            Family::Graphic($m) => $body,
            Family::Hypergraphic($m) => $body,
            Family::Laminar($m) => $body,
            Family::Transversal($m) => $body,
            Family::Gammoid($m) => $body,
            Family::Semiplanar($m) => $body,
            Family::Matching($m) => $body,
            Family::Linear($m) => $body,
        }
    };
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Uniform(_) => "uniform",
            Family::Partition(_) => "partition",
            Family::Graphic(_) => "graphic",
            Family::Hypergraphic(_) => "hypergraphic",
            Family::Laminar(_) => "laminar",
            Family::Transversal(_) => "transversal",
            Family::Gammoid(_) => "gammoid",
            Family::Semiplanar(_) => "semiplanar",
            Family::Matching(_) => "matching",
            Family::Linear(_) => "linear",
        }
    }
}

impl Matroid for Family {
    fn ground_size(&self) -> usize {
        each_family!(self, m => m.ground_size())
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        each_family!(self, m => m.is_independent(set))
    }

    fn greedy(&self, candidates: &[usize]) -> Vec<usize> {
        each_family!(self, m => m.greedy(candidates))
    }
}

/// A family matroid with its value order and the description it was built from.
#[derive(Debug, Clone)]
pub struct Instance {
    pub family: Family,
    pub order: ValueOrder,
    spec: InstanceSpec,
}

impl Instance {
    pub fn spec(&self) -> &InstanceSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn opt(&self) -> Vec<usize> {
        self.family.greedy(self.order.ranking())
    }

    pub fn from_json(text: &str) -> Result<Self, SpecError> {
        let spec: InstanceSpec = serde_json::from_str(text)?;
        Ok(spec.build()?)
    }

    pub fn load(path: &Path) -> Result<Self, SpecError> {
        let text = std::fs::read_to_string(path).map_err(|e| SpecError::Io(path.display().to_string(), e.to_string()))?;
        Self::from_json(&text)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    #[error("cannot read {0}: {1}")]
    Io(String, String),
    #[error("malformed instance: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid instance: {0}")]
    Invalid(#[from] ZooError),
}

fn expect(what: &'static str, expected: usize, got: usize) -> Result<(), ZooError> {
    if expected != got {
        return Err(ZooError::CountMismatch { what, expected, got });
    }
    Ok(())
}

impl InstanceSpec {
    pub fn n(&self) -> usize {
        match self {
            InstanceSpec::Uniform { n, .. }
            | InstanceSpec::Partition { n, .. }
            | InstanceSpec::Graphic { n, .. }
            | InstanceSpec::Hypergraphic { n, .. }
            | InstanceSpec::Laminar { n, .. }
            | InstanceSpec::Transversal { n, .. }
            | InstanceSpec::Gammoid { n, .. }
            | InstanceSpec::Semiplanar { n, .. }
            | InstanceSpec::Matching { n, .. }
            | InstanceSpec::Linear { n, .. } => *n,
        }
    }

    pub fn order(&self) -> &[usize] {
        match self {
            InstanceSpec::Uniform { order, .. }
            | InstanceSpec::Partition { order, .. }
            | InstanceSpec::Graphic { order, .. }
            | InstanceSpec::Hypergraphic { order, .. }
            | InstanceSpec::Laminar { order, .. }
            | InstanceSpec::Transversal { order, .. }
            | InstanceSpec::Gammoid { order, .. }
            | InstanceSpec::Semiplanar { order, .. }
            | InstanceSpec::Matching { order, .. }
            | InstanceSpec::Linear { order, .. } => order,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance descriptions always serialise")
    }

    pub fn build(&self) -> Result<Instance, ZooError> {
        let n = self.n();
        let family = match self {
            InstanceSpec::Uniform { rank, .. } => Family::Uniform(UniformMatroid::new(n, *rank)),
            InstanceSpec::Partition { parts, caps, .. } => Family::Partition(PartitionMatroid::new(n, parts, caps)?),
            InstanceSpec::Graphic { vertices, edges, .. } => {
                expect("edges", n, edges.len())?;
                Family::Graphic(GraphicInstance::new(*vertices, edges.clone())?)
            }
            InstanceSpec::Hypergraphic { vertices, edges, .. } => {
                expect("hyperedges", n, edges.len())?;
                Family::Hypergraphic(HypergraphicInstance::new(*vertices, edges.clone())?)
            }
            InstanceSpec::Laminar { laminar_sets, caps, .. } => {
                Family::Laminar(LaminarInstance::new(n, laminar_sets, caps)?)
            }
            InstanceSpec::Transversal { left, bipartite_adj, .. } => {
                expect("bipartite adjacency lists", n, bipartite_adj.len())?;
                Family::Transversal(TransversalInstance::new(*left, bipartite_adj.clone())?)
            }
            InstanceSpec::Gammoid { vertices, digraph_arcs, sources, terminals, mu, .. } => {
                expect("terminals", n, terminals.len())?;
                Family::Gammoid(GammoidInstance::new(
                    *vertices,
                    digraph_arcs.clone(),
                    sources.clone(),
                    terminals.clone(),
                    *mu,
                )?)
            }
            InstanceSpec::Semiplanar { vertices, digraph_arcs, caps, sources, terminals, .. } => {
                expect("terminals", n, terminals.len())?;
                expect("arc capacities", digraph_arcs.len(), caps.len())?;
                expect("sources", 1, sources.len())?;
                let arcs = digraph_arcs.iter().zip(caps).map(|(&(u, v), &c)| (u, v, c)).collect();
                Family::Semiplanar(ArcGammoidInstance::new(*vertices, sources[0], arcs, terminals.clone())?)
            }
            InstanceSpec::Matching { vertices, edges, terminals, .. } => {
                expect("terminals", n, terminals.len())?;
                Family::Matching(MatchingInstance::new(*vertices, edges, terminals.clone())?)
            }
            InstanceSpec::Linear { matrix, field_p, k, .. } => {
                let m = SparseLinearInstance::new(matrix, *field_p, *k)?;
                expect("matrix columns", n, m.ground_size())?;
                Family::Linear(m)
            }
        };
        expect("elements", n, family.ground_size())?;
        expect("value order length", n, self.order().len())?;
        let order = ValueOrder::from_ranking(self.order().to_vec())?;
        Ok(Instance { family, order, spec: self.clone() })
    }
}
