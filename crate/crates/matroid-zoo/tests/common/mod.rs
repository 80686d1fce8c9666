#![allow(dead_code)]

use matroid_zoo::*;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

pub fn random_graph(rng: &mut ChaCha8Rng, vertices: usize, edges: usize) -> GraphicInstance {
    let list = (0..edges)
        .map(|_| {
            let u = rng.random_range(0..vertices);
            let v = rng.random_range(0..vertices);
            (u, v)
        })
        .collect();
    GraphicInstance::new(vertices, list).unwrap()
}

pub fn random_bipartite(rng: &mut ChaCha8Rng, n: usize, left: usize, p: f64) -> TransversalInstance {
    let adj = (0..n).map(|_| (0..left).filter(|_| rng.random_bool(p)).collect()).collect();
    TransversalInstance::new(left, adj).unwrap()
}

/// Random recursive splits of 0..n into nested intervals with random capacities.
pub fn random_laminar(rng: &mut ChaCha8Rng, n: usize) -> LaminarInstance {
    let mut sets = Vec::new();
    let mut stack = vec![(0usize, n)];
    while let Some((a, b)) = stack.pop() {
        if b - a < 2 {
            continue;
        }
        let cut = rng.random_range(a + 1..b);
        for (x, y) in [(a, cut), (cut, b)] {
            if y - x >= 2 && rng.random_bool(0.7) {
                sets.push(((x..y).collect::<Vec<_>>(), rng.random_range(1..y - x)));
            }
            stack.push((x, y));
        }
    }
    let (s, c): (Vec<_>, Vec<_>) = sets.into_iter().unzip();
    LaminarInstance::new(n, &s, &c).unwrap()
}

pub fn random_dag_gammoid(rng: &mut ChaCha8Rng, vertices: usize, n: usize) -> GammoidInstance {
    let sources: Vec<usize> = (0..2).collect();
    let mut arcs = Vec::new();
    for v in 2..vertices {
        arcs.push((rng.random_range(0..v), v));
        for u in 0..v {
            if rng.random_bool(0.25) {
                arcs.push((u, v));
            }
        }
    }
    let mut pool: Vec<usize> = (1..vertices).collect();
    pool.shuffle(rng);
    GammoidInstance::new(vertices, arcs, sources, pool[..n].to_vec(), 2).unwrap()
}

pub fn random_matching(rng: &mut ChaCha8Rng, vertices: usize, edges: usize, n: usize) -> (MatchingInstance, Vec<(usize, usize)>) {
    let list: Vec<(usize, usize)> = (0..edges)
        .map(|_| {
            let u = rng.random_range(0..vertices);
            let v = (u + rng.random_range(1..vertices)) % vertices;
            (u, v)
        })
        .collect();
    let mut pool: Vec<usize> = (0..vertices).collect();
    pool.shuffle(rng);
    (MatchingInstance::new(vertices, &list, pool[..n].to_vec()).unwrap(), list)
}

pub fn random_hypergraph(rng: &mut ChaCha8Rng, vertices: usize, n: usize) -> HypergraphicInstance {
    let edges = (0..n)
        .map(|_| {
            let size = rng.random_range(1..=3);
            (0..size).map(|_| rng.random_range(0..vertices)).collect()
        })
        .collect();
    HypergraphicInstance::new(vertices, edges).unwrap()
}

pub fn random_sparse(rng: &mut ChaCha8Rng, rows: usize, cols: usize, k: usize, p: u64) -> SparseLinearInstance {
    let mut matrix = vec![vec![0i64; cols]; rows];
    for j in 0..cols {
        let nonzeros = rng.random_range(1..=k);
        for _ in 0..nonzeros {
            matrix[rng.random_range(0..rows)][j] = rng.random_range(1..p as i64);
        }
    }
    SparseLinearInstance::new(&matrix, p, k).unwrap()
}

/// A semiplanar network: hubs in a row under the source, consecutive hubs
/// joined left to right, each hub feeding an interval of terminals where
/// neighbouring intervals share at most an endpoint.
pub fn random_hub_semiplanar(rng: &mut ChaCha8Rng, n: usize) -> ArcGammoidInstance {
    let hubs = rng.random_range(1..=n.div_ceil(2));
    let source = 0;
    let terminal = |i: usize| 1 + hubs + i;
    let mut arcs = Vec::new();
    let mut start = 0;
    for h in 0..hubs {
        let hub = 1 + h;
        arcs.push((source, hub, rng.random_range(1..=3)));
        if h + 1 < hubs && rng.random_bool(0.5) {
            arcs.push((hub, hub + 1, rng.random_range(1..=2)));
        }
        let end = if h + 1 == hubs { n - 1 } else { (start + rng.random_range(0..=2)).min(n - 1) };
        for i in start..=end {
            arcs.push((hub, terminal(i), rng.random_range(1..=2)));
        }
        start = if rng.random_bool(0.3) { end } else { (end + 1).min(n - 1) };
    }
    ArcGammoidInstance::new(1 + hubs + n, source, arcs, (0..n).map(terminal).collect()).unwrap()
}

