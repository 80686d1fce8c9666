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


/// Every arrival order of `0..n`, in lexicographic order.
pub fn all_orders(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for e in 0..used.len() {
            if !used[e] {
                used[e] = true;
                prefix.push(e);
                extend(prefix, used, out);
                prefix.pop();
                used[e] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Exact law of (trial, outcome) for one engine: every branch with its probability.
pub fn exact_runs(
    engine: &dyn secretary_engines::OnlineEngine,
) -> Vec<(f64, secretary_engines::ArrivalTrial, secretary_engines::SelectionOutcome)> {
    let mut out = Vec::new();
    secretary_engines::enumerate_outcomes(
        |rng| {
            let trial = engine.draw_trial(rng);
            let res = engine.run(&trial, rng, true).unwrap();
            (trial, res)
        },
        |w, (t, o)| out.push((w, t, o)),
    );
    out
}

pub fn random_order(rng: &mut ChaCha8Rng, n: usize) -> matroid_core::ValueOrder {
    let mut ranking: Vec<usize> = (0..n).collect();
    ranking.shuffle(rng);
    matroid_core::ValueOrder::from_ranking(ranking).unwrap()
}

/// One random instance of every forbidden-set family on `n` elements, each
/// wrapped in its engine and handed to `visit`.
pub fn with_fixtures(n: usize, seed: u64, mut visit: impl FnMut(&dyn secretary_engines::ForbiddenSetEngine)) {
    use rand::SeedableRng;
    use secretary_engines::*;
    let rule = SampleRule::Binomial(0.5);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = random_order(&mut rng, n);
    visit(&ClassicalSecretary::new(&order, rule));
    let t = random_bipartite(&mut rng, n, 3, 0.5);
    visit(&TransversalEngine::new(&t, &order, rule));
    let g = random_dag_gammoid(&mut rng, n + 3, n);
    visit(&GammoidEngine::new(&g, &order, rule, n + 3));
    let (m, _) = random_matching(&mut rng, n + 2, n + 4, n);
    visit(&PackingEngine::new(&m, &order, rule, n + 2));
    let graph = random_graph(&mut rng, 4, n);
    visit(&ForestEngine::graphic(&graph, &order, rule));
    let hyper = random_hypergraph(&mut rng, 4, n);
    visit(&ForestEngine::hypergraphic(&hyper, &order, rule));
    let sparse = random_sparse(&mut rng, 4, n, 3, 2);
    visit(&FramedEngine::new(&sparse, &order, rule));
    let semi = random_hub_semiplanar(&mut rng, n);
    visit(&SemiplanarEngine::new(&semi, &order, rule));
    let lam = random_laminar(&mut rng, n);
    visit(&LaminarEngine::new(&lam, &order, rule));
}
