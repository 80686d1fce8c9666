use std::collections::HashSet;

use matroid_core::{Matroid, ValueOrder};
use matroid_zoo::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;
use common::*;

fn random_order(rng: &mut ChaCha8Rng, n: usize) -> ValueOrder {
    let mut ranking: Vec<usize> = (0..n).collect();
    ranking.shuffle(rng);
    ValueOrder::from_ranking(ranking).unwrap()
}

fn independent_subsets<M: Matroid>(m: &M) -> Vec<Vec<usize>> {
    subsets(m.ground_size()).filter(|s| m.is_independent(s)).collect()
}

#[test]
fn matching_witness_trivial_cases() {
    let t = TransversalInstance::new(1, vec![vec![0], vec![0]]).unwrap();
    let order = ValueOrder::identity(2);
    assert!(t.canonical_matching(&order, &[]).unwrap().is_empty());
    assert_eq!(t.canonical_matching(&order, &[0]).unwrap(), vec![0]);
    assert!(matches!(t.canonical_matching(&order, &[0, 1]), Err(ZooError::Dependent(_))));
}

#[test]
fn matching_witness_is_a_canonical_cover() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..30 {
        let n = rng.random_range(1..=8);
        let t = random_bipartite(&mut rng, n, 5, 0.35);
        let order = random_order(&mut rng, n);
        // Same graph with every adjacency list presented in a different order.
        let shuffled: Vec<Vec<usize>> = (0..n)
            .map(|r| {
                let mut l = t.neighbours(r).to_vec();
                l.shuffle(&mut rng);
                l
            })
            .collect();
        let t2 = TransversalInstance::new(5, shuffled).unwrap();
        for x in independent_subsets(&t) {
            let m = t.canonical_matching(&order, &x).unwrap();
            assert_eq!(m.len(), x.len());
            assert_eq!(m.iter().collect::<HashSet<_>>().len(), x.len());
            for (&r, &l) in x.iter().zip(&m) {
                assert!(t.neighbours(r).contains(&l));
            }
            assert_eq!(t.canonical_matching(&order, &x).unwrap(), m);
            assert_eq!(t2.canonical_matching(&order, &x).unwrap(), m);
        }
    }
}

fn check_path_system(g: &GammoidInstance, arcs: &[(usize, usize)], sources: &[usize], x: &[usize], paths: &[Vec<usize>]) {
    assert_eq!(paths.len(), x.len());
    let mut used = HashSet::new();
    for (&e, path) in x.iter().zip(paths) {
        assert!(sources.contains(&path[0]));
        assert_eq!(*path.last().unwrap(), g.terminal(e));
        for w in path.windows(2) {
            assert!(arcs.contains(&(w[0], w[1])), "{w:?} is not an arc");
        }
        for &v in path {
            assert!(used.insert(v), "vertex {v} used twice");
        }
    }
}

#[test]
fn path_witness_trivial_cases() {
    let g = GammoidInstance::new(3, vec![(0, 1), (1, 2)], vec![0], vec![2], 1).unwrap();
    let order = ValueOrder::identity(1);
    assert!(g.canonical_path_system(&order, &[]).unwrap().is_empty());
    assert_eq!(g.canonical_path_system(&order, &[0]).unwrap(), vec![vec![0, 1, 2]]);
}

#[test]
fn path_witness_is_disjoint_and_local() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..30 {
        let vertices = 10;
        let n = 7;
        let mut arcs = Vec::new();
        for v in 2..vertices {
            arcs.push((rng.random_range(0..v), v));
            for u in 0..v {
                if rng.random_bool(0.25) {
                    arcs.push((u, v));
                }
            }
        }
        let mut pool: Vec<usize> = (2..vertices).collect();
        pool.shuffle(&mut rng);
        let terminals = pool[..n].to_vec();
        let g = GammoidInstance::new(vertices, arcs.clone(), vec![0, 1], terminals.clone(), 2).unwrap();
        let mut reversed = arcs.clone();
        reversed.reverse();
        let g2 = GammoidInstance::new(vertices, reversed, vec![1, 0], terminals.clone(), 2).unwrap();
        let order = random_order(&mut rng, n);
        for x in independent_subsets(&g) {
            let paths = g.canonical_path_system(&order, &x).unwrap();
            check_path_system(&g, &arcs, &[0, 1], &x, &paths);
            assert_eq!(g2.canonical_path_system(&order, &x).unwrap(), paths);
            // Dead ends hanging off every vertex and an unreachable vertex feeding
            // the terminals lie on no source-to-X walk.
            let mut extra = arcs.clone();
            extra.extend((0..vertices).map(|v| (v, vertices)));
            extra.extend(terminals.iter().map(|&t| (vertices + 1, t)));
            let g3 = GammoidInstance::new(vertices + 2, extra, vec![0, 1], terminals.clone(), 2).unwrap();
            assert_eq!(g3.canonical_path_system(&order, &x).unwrap(), paths);
        }
    }
}

#[test]
fn orientation_examples() {
    assert_eq!(canonical_orientation(2, &[(1, 0)]).unwrap(), vec![(0, 1)]);
    assert_eq!(canonical_orientation(3, &[(0, 1), (1, 2)]).unwrap(), vec![(0, 1), (1, 2)]);
    assert_eq!(canonical_orientation(3, &[(2, 1), (1, 0)]).unwrap(), vec![(1, 2), (0, 1)]);
    assert!(matches!(canonical_orientation(3, &[(0, 1), (1, 2), (2, 0)]), Err(ZooError::Cyclic(_))));
    assert!(matches!(canonical_orientation(2, &[(1, 1)]), Err(ZooError::Cyclic(0))));
}

#[test]
fn forests_orient_with_unit_in_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..40 {
        let g = random_graph(&mut rng, 10, 9);
        for x in independent_subsets(&g) {
            let edges: Vec<(usize, usize)> = x.iter().map(|&e| g.edge(e)).collect();
            let arcs = g.orientation(&x).unwrap();
            let mut indeg = [0; 10];
            for (&(u, v), &(a, b)) in edges.iter().zip(&arcs) {
                assert!((a, b) == (u, v) || (a, b) == (v, u));
                indeg[b] += 1;
            }
            assert!(indeg.iter().all(|&d| d <= 1));
            let mut reversed = edges.clone();
            reversed.reverse();
            let mut again = canonical_orientation(10, &reversed).unwrap();
            again.reverse();
            assert_eq!(again, arcs);
        }
    }
}

#[test]
fn hyperforest_pairs_lie_inside_their_hyperedges() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..20 {
        let h = random_hypergraph(&mut rng, 6, 8);
        let order = random_order(&mut rng, 8);
        for x in independent_subsets(&h) {
            let pairs = h.canonical_pairs(&order, &x).unwrap();
            for (&e, &(a, b)) in x.iter().zip(&pairs) {
                assert!(a != b && h.hyperedge(e).contains(&a) && h.hyperedge(e).contains(&b));
            }
            let arcs = h.orientation(&order, &x).unwrap();
            let mut indeg = [0; 6];
            for &(_, b) in &arcs {
                indeg[b] += 1;
            }
            assert!(indeg.iter().all(|&d| d <= 1));
            assert_eq!(h.canonical_pairs(&order, &x).unwrap(), pairs);
        }
    }
}

#[test]
fn packing_witness_uses_disjoint_edges() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..20 {
        let (m, edges) = random_matching(&mut rng, 8, 10, 6);
        for x in independent_subsets(&m) {
            let q = m.canonical_packing(&x).unwrap();
            let mut used = HashSet::new();
            for (&e, &(t, partner)) in x.iter().zip(&q) {
                assert_eq!(t, m.terminal(e));
                assert!(edges.contains(&(t, partner)) || edges.contains(&(partner, t)));
                // A pair claimed twice is the same edge covering two terminals.
                if !used.insert((t.min(partner), t.max(partner))) {
                    assert!(x.iter().any(|&o| m.terminal(o) == partner));
                }
            }
            let vertices: Vec<usize> = q.iter().flat_map(|&(a, b)| [a, b]).collect();
            let distinct: HashSet<usize> = vertices.iter().copied().collect();
            assert_eq!(distinct.len(), 2 * used.len());
            assert_eq!(m.canonical_packing(&x).unwrap(), q);
        }
    }
}

#[test]
fn frame_circuit_examples() {
    // Triangle as a binary matrix: the first two columns are the frame rows.
    let tri = SparseLinearInstance::new(&[vec![1, 0, 1], vec![0, 1, 1]], 2, 2).unwrap();
    assert_eq!(tri.frame_circuit(2), &[0, 1]);
    assert_eq!(tri.frame_circuit(0), &[0]);
    assert_eq!(tri.frame_injection(&ValueOrder::identity(3), &[0, 1]).unwrap(), vec![0, 1]);
    assert!(tri.frame_injection(&ValueOrder::identity(3), &[0, 1, 2]).is_err());
}

#[test]
fn frame_injection_exchanges_into_the_frame() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for _ in 0..20 {
        let m = random_sparse(&mut rng, 4, 6, 3, 2);
        let n = m.ground_size();
        let order = random_order(&mut rng, n);
        let frame = m.with_frame();
        let rows: Vec<usize> = (n..n + m.rows()).collect();
        assert!(frame.is_independent(&rows));
        for r in 0..n {
            assert!(m.frame_circuit(r).len() <= m.k());
            // Every frame row outside C(B, r) stays independent together with r.
            for row in 0..m.rows() {
                let mut swapped: Vec<usize> = rows.iter().copied().filter(|&b| b != n + row).collect();
                swapped.push(r);
                assert_eq!(frame.is_independent(&swapped), m.frame_circuit(r).contains(&row));
            }
        }
        for x in independent_subsets(&m) {
            let pi = m.frame_injection(&order, &x).unwrap();
            assert_eq!(pi.iter().collect::<HashSet<_>>().len(), x.len());
            for (&e, &row) in x.iter().zip(&pi) {
                let mut swapped: Vec<usize> = rows.iter().copied().filter(|&b| b != n + row).collect();
                swapped.push(e);
                assert!(frame.is_independent(&swapped));
            }
            assert_eq!(m.frame_injection(&order, &x).unwrap(), pi);
        }
    }
}

#[test]
fn neighbours_on_the_line() {
    assert_eq!(pre_nex(&[3, 5, 10], 12, 7), (5, 10));
    assert_eq!(pre_nex(&[3, 5, 10], 12, 1), (0, 3));
    assert_eq!(pre_nex(&[3, 5, 10], 12, 11), (10, 13));
    assert_eq!(pre_nex(&[3, 5, 10], 12, 5), (3, 10));
}

/// The 17-terminal family of the reference drawing, 1-based intervals.
fn reference_laminar() -> LaminarInstance {
    let ranges = [(1, 17, 5), (1, 11, 4), (1, 6, 3), (1, 3, 2), (4, 6, 2), (9, 11, 2), (12, 17, 3), (12, 14, 2), (15, 17, 2)];
    let sets: Vec<Vec<usize>> = ranges.iter().map(|&(a, b, _)| (a - 1..b).collect()).collect();
    let caps: Vec<usize> = ranges.iter().map(|&(_, _, c)| c).collect();
    LaminarInstance::new(17, &sets, &caps).unwrap()
}

fn fibers(l: &LaminarInstance, j: &[usize]) -> Vec<Vec<usize>> {
    let n = l.terminal_count();
    let mut out = vec![Vec::new(); j.len()];
    for y in 1..=n {
        let rep = l.representative(j, y).unwrap();
        out[j.iter().position(|&p| p == rep).unwrap()].push(y);
    }
    out
}

#[test]
fn reference_fibers() {
    let l = reference_laminar();
    let j = [3, 5, 10, 13, 15];
    let elements: Vec<usize> = j.iter().map(|&p| l.line().element(p).unwrap()).collect();
    assert!(l.is_independent(&elements));
    let expected: Vec<Vec<usize>> = vec![(1..=3).collect(), (4..=6).collect(), (7..=11).collect(), (12..=14).collect(), (15..=17).collect()];
    assert_eq!(fibers(&l, &j), expected);
    assert!(l.representative(&[], 3).is_err());
}

#[test]
fn fibers_are_enclosing_intervals() {
    let mut rng = ChaCha8Rng::seed_from_u64(27);
    for _ in 0..30 {
        let n = rng.random_range(2..=12);
        let l = random_laminar(&mut rng, n);
        for _ in 0..10 {
            let mut ids: Vec<usize> = (0..n).collect();
            ids.shuffle(&mut rng);
            let basis = l.greedy(&ids);
            let j = l.line().positions(&basis[..rng.random_range(1..=basis.len())]);
            for (idx, fiber) in fibers(&l, &j).iter().enumerate() {
                assert!(fiber.contains(&j[idx]));
                assert!(fiber.windows(2).all(|w| w[1] == w[0] + 1));
                let (pre, nex) = pre_nex(&j, n, j[idx]);
                assert!(pre < fiber[0] && *fiber.last().unwrap() < nex);
            }
        }
    }
}

/// Checks that every I ⊆ [n]∖J whose elements have pairwise disjoint
/// neighbour pairs, or pairwise distinct representatives, is independent.
fn check_neighbour_conditions<M: Matroid>(m: &M, line: &LineOrder, laminar: Option<&LaminarInstance>) -> usize {
    let n = m.ground_size();
    let mut checked = 0;
    for j_set in independent_subsets(m) {
        if j_set.is_empty() {
            continue;
        }
        let j = line.positions(&j_set);
        let rest: Vec<usize> = (1..=n).filter(|p| j.binary_search(p).is_err()).collect();
        let pairs: Vec<(usize, usize)> = rest.iter().map(|&y| pre_nex(&j, n, y)).collect();
        let reps: Vec<usize> = match laminar {
            Some(l) => rest.iter().map(|&y| l.representative(&j, y).unwrap()).collect(),
            None => Vec::new(),
        };
        for mask in 1u32..1 << rest.len() {
            let chosen: Vec<usize> = (0..rest.len()).filter(|&i| mask >> i & 1 == 1).collect();
            let p1 = chosen.iter().enumerate().all(|(a, &x)| {
                chosen[a + 1..].iter().all(|&y| {
                    let (px, nx) = pairs[x];
                    let (py, ny) = pairs[y];
                    px != py && px != ny && nx != py && nx != ny
                })
            });
            let p2 = !reps.is_empty() && chosen.iter().map(|&i| reps[i]).collect::<HashSet<_>>().len() == chosen.len();
            if p1 || p2 {
                let set: Vec<usize> = chosen.iter().map(|&i| line.element(rest[i]).unwrap()).collect();
                assert!(m.is_independent(&set), "J = {j:?}, I = {set:?}");
                checked += 1;
            }
        }
    }
    checked
}

#[test]
fn neighbour_conditions_imply_independence() {
    let mut rng = ChaCha8Rng::seed_from_u64(28);
    let mut checked = 0;
    for round in 0..6 {
        let n = 8 + round % 3;
        let l = random_laminar(&mut rng, n);
        checked += check_neighbour_conditions(&l, l.line(), Some(&l));
        let s = random_hub_semiplanar(&mut rng, n);
        checked += check_neighbour_conditions(&s, s.line(), None);
    }
    assert!(checked > 1000);
}
