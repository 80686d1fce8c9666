use matroid_zoo::{Instance, InstanceSpec, HYPERGRAPHIC_VERTEX_LIMIT};
use rand::seq::{index, SliceRandom};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::HarnessError;

/// Recipe for an instance. Random recipes shuffle the value order; the three
/// adversarial constructions use the identity order, element `i` being r^{i+1}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "generator", rename_all = "snake_case", deny_unknown_fields)]
pub enum GeneratorSpec {
    Uniform {
        n: usize,
        rank: usize,
    },
    /// G(n, m) on `vertices` vertices with `edges` distinct simple edges. With
    /// `connected` the first `vertices − 1` edges form a random spanning tree.
    Graphic {
        vertices: usize,
        edges: usize,
        #[serde(default)]
        connected: bool,
    },
    Hypergraphic {
        vertices: usize,
        n: usize,
        max_edge: usize,
    },
    /// Random recursive splits of 0..n, each part kept with probability 0.7
    /// and given a random capacity below its size.
    Laminar {
        n: usize,
    },
    Transversal {
        n: usize,
        left: usize,
        edge_prob: f64,
    },
    /// Random DAG on `vertices` vertices whose first `sources` vertices are
    /// the sources. Every later vertex gets an arc from some earlier vertex
    /// plus each other earlier vertex with probability `arc_prob`. The
    /// declared exchangeability is the number of sources.
    Gammoid {
        vertices: usize,
        sources: usize,
        n: usize,
        arc_prob: f64,
    },
    /// Hubs in a row under one source, consecutive hubs joined left to right,
    /// each hub feeding an interval of terminals; neighbouring intervals share
    /// at most an endpoint.
    Semiplanar {
        n: usize,
    },
    Matching {
        vertices: usize,
        edges: usize,
        n: usize,
    },
    /// `cols` columns over GF(`field_p`), each with between 1 and `k` nonzeros.
    Sparse {
        rows: usize,
        cols: usize,
        k: usize,
        field_p: u64,
    },
    /// M_{m,M}: singletons {r¹}, …, {r^m} and M blocks of m consecutive
    /// elements after them, one element per part.
    BlockPartition {
        m: usize,
        big_m: usize,
    },
    /// N_m: the block {r¹, …, r^m} and singletons r^{m+1}, …, r^{2m−1}.
    HeadPartition {
        m: usize,
    },
    /// n = 2ρ³, independent sets meet the top half at most once and have
    /// size at most ρ.
    TpaLaminar {
        rho: usize,
    },
}

impl GeneratorSpec {
    pub fn label(&self) -> &'static str {
        match self {
            GeneratorSpec::Uniform { .. } => "uniform",
            GeneratorSpec::Graphic { .. } => "graphic",
            GeneratorSpec::Hypergraphic { .. } => "hypergraphic",
            GeneratorSpec::Laminar { .. } => "laminar",
            GeneratorSpec::Transversal { .. } => "transversal",
            GeneratorSpec::Gammoid { .. } => "gammoid",
            GeneratorSpec::Semiplanar { .. } => "semiplanar",
            GeneratorSpec::Matching { .. } => "matching",
            GeneratorSpec::Sparse { .. } => "linear",
            GeneratorSpec::BlockPartition { .. } => "block_partition",
            GeneratorSpec::HeadPartition { .. } => "head_partition",
            GeneratorSpec::TpaLaminar { .. } => "tpa_laminar",
        }
    }
}

fn fail<T>(why: impl Into<String>) -> Result<T, HarnessError> {
    Err(HarnessError::Generator(why.into()))
}

fn shuffled<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}

fn check_prob(name: &str, p: f64) -> Result<(), HarnessError> {
    if !(0.0..=1.0).contains(&p) {
        return fail(format!("{name} = {p} is not a probability"));
    }
    Ok(())
}

/// Builds an instance from `spec`, drawing every random choice from `rng`.
pub fn generate_instance<R: Rng + ?Sized>(spec: &GeneratorSpec, rng: &mut R) -> Result<Instance, HarnessError> {
    Ok(describe(spec, rng)?.build()?)
}

/// The on-disk description [`generate_instance`] builds from.
pub fn describe<R: Rng + ?Sized>(spec: &GeneratorSpec, rng: &mut R) -> Result<InstanceSpec, HarnessError> {
    let out = match *spec {
        GeneratorSpec::Uniform { n, rank } => InstanceSpec::Uniform { n, rank, order: shuffled(rng, n) },
        GeneratorSpec::Graphic { vertices, edges, connected } => {
            let pairs = vertices * vertices.saturating_sub(1) / 2;
            if edges > pairs {
                return fail(format!("{edges} simple edges do not fit on {vertices} vertices"));
            }
            if connected && edges + 1 < vertices {
                return fail(format!("{edges} edges cannot connect {vertices} vertices"));
            }
            let mut list = Vec::with_capacity(edges);
            if connected {
                let label = shuffled(rng, vertices);
                for v in 1..vertices {
                    let u = rng.random_range(0..v);
                    let (a, b) = (label[u], label[v]);
                    list.push((a.min(b), a.max(b)));
                }
            }
            let mut all = Vec::with_capacity(pairs);
            for u in 0..vertices {
                for v in u + 1..vertices {
                    if !list.contains(&(u, v)) {
                        all.push((u, v));
                    }
                }
            }
            let extra = edges - list.len();
            list.extend(index::sample(rng, all.len(), extra).into_iter().map(|i| all[i]));
            list.shuffle(rng);
            InstanceSpec::Graphic { n: edges, vertices, edges: list, order: shuffled(rng, edges) }
        }
        GeneratorSpec::Hypergraphic { vertices, n, max_edge } => {
            if vertices == 0 || vertices > HYPERGRAPHIC_VERTEX_LIMIT || max_edge == 0 {
                return fail(format!("hypergraph needs 1..={HYPERGRAPHIC_VERTEX_LIMIT} vertices and edges of size ≥ 1"));
            }
            let edges = (0..n)
                .map(|_| {
                    let size = rng.random_range(1..=max_edge.min(vertices));
                    index::sample(rng, vertices, size).into_vec()
                })
                .collect();
            InstanceSpec::Hypergraphic { n, vertices, edges, order: shuffled(rng, n) }
        }
        GeneratorSpec::Laminar { n } => {
            let mut sets = Vec::new();
            let mut caps = Vec::new();
            let mut stack = vec![(0usize, n)];
            while let Some((a, b)) = stack.pop() {
                if b - a < 2 {
                    continue;
                }
                let cut = rng.random_range(a + 1..b);
                for (x, y) in [(a, cut), (cut, b)] {
                    if y - x >= 2 && rng.random_bool(0.7) {
                        sets.push((x..y).collect::<Vec<_>>());
                        caps.push(rng.random_range(1..y - x));
                    }
                    stack.push((x, y));
                }
            }
            InstanceSpec::Laminar { n, laminar_sets: sets, caps, order: shuffled(rng, n) }
        }
        GeneratorSpec::Transversal { n, left, edge_prob } => {
            check_prob("edge_prob", edge_prob)?;
            let adj = (0..n).map(|_| (0..left).filter(|_| rng.random_bool(edge_prob)).collect()).collect();
            InstanceSpec::Transversal { n, left, bipartite_adj: adj, order: shuffled(rng, n) }
        }
        GeneratorSpec::Gammoid { vertices, sources, n, arc_prob } => {
            check_prob("arc_prob", arc_prob)?;
            if sources == 0 || sources > vertices || n > vertices {
                return fail(format!("{n} terminals and {sources} sources on {vertices} vertices"));
            }
            let mut arcs = Vec::new();
            for v in sources..vertices {
                let first = rng.random_range(0..v);
                arcs.push((first, v));
                for u in (0..v).filter(|&u| u != first) {
                    if rng.random_bool(arc_prob) {
                        arcs.push((u, v));
                    }
                }
            }
            let terminals = index::sample(rng, vertices, n).into_vec();
            InstanceSpec::Gammoid {
                n,
                vertices,
                digraph_arcs: arcs,
                sources: (0..sources).collect(),
                terminals,
                mu: sources,
                order: shuffled(rng, n),
            }
        }
        GeneratorSpec::Semiplanar { n } => {
            if n == 0 {
                return fail("a semiplanar instance needs a terminal");
            }
            let hubs = rng.random_range(1..=n.div_ceil(2));
            let terminal = |i: usize| 1 + hubs + i;
            let mut arcs = Vec::new();
            let mut caps = Vec::new();
            let mut start = 0;
            for h in 0..hubs {
                let hub = 1 + h;
                arcs.push((0, hub));
                caps.push(rng.random_range(1..=3));
                if h + 1 < hubs && rng.random_bool(0.5) {
                    arcs.push((hub, hub + 1));
                    caps.push(rng.random_range(1..=2));
                }
                let end = if h + 1 == hubs { n - 1 } else { (start + rng.random_range(0..=2)).min(n - 1) };
                for i in start..=end {
                    arcs.push((hub, terminal(i)));
                    caps.push(rng.random_range(1..=2));
                }
                start = if rng.random_bool(0.3) { end } else { (end + 1).min(n - 1) };
            }
            InstanceSpec::Semiplanar {
                n,
                vertices: 1 + hubs + n,
                digraph_arcs: arcs,
                caps,
                sources: vec![0],
                terminals: (0..n).map(terminal).collect(),
                order: shuffled(rng, n),
            }
        }
        GeneratorSpec::Matching { vertices, edges, n } => {
            if vertices < 2 || n > vertices {
                return fail(format!("{n} terminals on {vertices} vertices"));
            }
            let list = (0..edges)
                .map(|_| {
                    let u = rng.random_range(0..vertices);
                    let v = (u + rng.random_range(1..vertices)) % vertices;
                    (u, v)
                })
                .collect();
            let terminals = index::sample(rng, vertices, n).into_vec();
            InstanceSpec::Matching { n, vertices, edges: list, terminals, order: shuffled(rng, n) }
        }
        GeneratorSpec::Sparse { rows, cols, k, field_p } => {
            if rows == 0 || k == 0 || field_p < 2 {
                return fail("sparse matrices need rows, k ≥ 1 and a field of size ≥ 2");
            }
            let mut matrix = vec![vec![0i64; cols]; rows];
            for j in 0..cols {
                let nonzeros = rng.random_range(1..=k.min(rows));
                for i in index::sample(rng, rows, nonzeros) {
                    matrix[i][j] = rng.random_range(1..field_p) as i64;
                }
            }
            InstanceSpec::Linear { n: cols, matrix, field_p, k, order: shuffled(rng, cols) }
        }
        GeneratorSpec::BlockPartition { m, big_m } => {
            if m == 0 {
                return fail("m must be positive");
            }
            let n = (big_m + 1) * m;
            let mut parts: Vec<Vec<usize>> = (0..m).map(|i| vec![i]).collect();
            parts.extend((1..=big_m).map(|j| (j * m..(j + 1) * m).collect()));
            let caps = vec![1; parts.len()];
            InstanceSpec::Partition { n, parts, caps, order: (0..n).collect() }
        }
        GeneratorSpec::HeadPartition { m } => {
            if m == 0 {
                return fail("m must be positive");
            }
            let n = 2 * m - 1;
            let mut parts = vec![(0..m).collect::<Vec<_>>()];
            parts.extend((m..n).map(|i| vec![i]));
            let caps = vec![1; parts.len()];
            InstanceSpec::Partition { n, parts, caps, order: (0..n).collect() }
        }
        GeneratorSpec::TpaLaminar { rho } => {
            if rho == 0 {
                return fail("rank must be positive");
            }
            let n = 2 * rho * rho * rho;
            InstanceSpec::Laminar {
                n,
                laminar_sets: vec![(0..n / 2).collect(), (0..n).collect()],
                caps: vec![1, rho],
                order: (0..n).collect(),
            }
        }
    };
    Ok(out)
}
