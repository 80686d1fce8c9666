use std::collections::{HashSet, VecDeque};

use matroid_core::{Matroid, ValueOrder};

use crate::union_find::UnionFind;
use crate::ZooError;

/// Cycle matroid of a multigraph: element `e` is the edge `edges[e]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicInstance {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphicInstance {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, ZooError> {
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= vertices {
                    return Err(ZooError::OutOfRange { what: "vertex", id: x, limit: vertices });
                }
            }
        }
        Ok(GraphicInstance { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// arc(X) for a forest `x`, aligned with `x`.
    pub fn orientation(&self, x: &[usize]) -> Result<Vec<(usize, usize)>, ZooError> {
        let pairs: Vec<(usize, usize)> = x.iter().map(|&e| self.edges[e]).collect();
        canonical_orientation(self.vertices, &pairs)
    }
}

impl Matroid for GraphicInstance {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.vertices);
        set.iter().all(|&e| uf.union(self.edges[e].0, self.edges[e].1))
    }

    fn greedy(&self, candidates: &[usize]) -> Vec<usize> {
        let mut uf = UnionFind::new(self.vertices);
        candidates.iter().copied().filter(|&e| uf.union(self.edges[e].0, self.edges[e].1)).collect()
    }
}

/// Orients a forest by rooting every component at its smallest vertex and
/// pointing edges away from the root. Output is aligned with `edges`.
pub fn canonical_orientation(vertices: usize, edges: &[(usize, usize)]) -> Result<Vec<(usize, usize)>, ZooError> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertices];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if u >= vertices || v >= vertices {
            return Err(ZooError::OutOfRange { what: "vertex", id: u.max(v), limit: vertices });
        }
        if u == v {
            return Err(ZooError::Cyclic(i));
        }
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    let mut arcs = vec![(usize::MAX, usize::MAX); edges.len()];
    let mut seen = vec![false; vertices];
    let mut queue = VecDeque::new();
    for root in 0..vertices {
        if seen[root] || adj[root].is_empty() {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &(w, i) in &adj[u] {
                if arcs[i].0 != usize::MAX {
                    continue;
                }
                if seen[w] {
                    return Err(ZooError::Cyclic(i));
                }
                seen[w] = true;
                arcs[i] = (u, w);
                queue.push_back(w);
            }
        }
    }
    Ok(arcs)
}

/// Hypergraphic matroid: a set of hyperedges is independent when one can pick
/// a distinct vertex pair inside each hyperedge so that the pairs form a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergraphicInstance {
    vertices: usize,
    edges: Vec<Vec<usize>>,
}

pub const HYPERGRAPHIC_VERTEX_LIMIT: usize = 21;

impl HypergraphicInstance {
    pub fn new(vertices: usize, edges: Vec<Vec<usize>>) -> Result<Self, ZooError> {
        if vertices > HYPERGRAPHIC_VERTEX_LIMIT {
            return Err(ZooError::TooLarge { what: "hypergraph vertex set", size: vertices, limit: HYPERGRAPHIC_VERTEX_LIMIT });
        }
        let mut clean = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if let Some(&x) = e.iter().find(|&&x| x >= vertices) {
                return Err(ZooError::OutOfRange { what: "vertex", id: x, limit: vertices });
            }
            clean.push(e);
        }
        Ok(HypergraphicInstance { vertices, edges: clean })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn hyperedge(&self, e: usize) -> &[usize] {
        &self.edges[e]
    }

    /// edge(r, X) for every r in `x`, choosing pairs by backtracking over `x`
    /// in the given sequence and over each hyperedge's pairs in lexicographic order.
    pub fn pair_selection(&self, x: &[usize]) -> Option<Vec<(usize, usize)>> {
        if x.len() + 1 > self.vertices.max(1) {
            return None;
        }
        let mut label: Vec<usize> = (0..self.vertices).collect();
        let mut chosen = Vec::with_capacity(x.len());
        let mut failed = HashSet::new();
        if self.search(x, 0, &mut label, &mut chosen, &mut failed) {
            Some(chosen)
        } else {
            None
        }
    }

    fn search(
        &self,
        x: &[usize],
        at: usize,
        label: &mut Vec<usize>,
        chosen: &mut Vec<(usize, usize)>,
        failed: &mut HashSet<(usize, Vec<usize>)>,
    ) -> bool {
        if at == x.len() {
            return true;
        }
        // The component labelling determines whether the remaining hyperedges can still be placed.
        let key = (at, label.clone());
        if failed.contains(&key) {
            return false;
        }
        let e = &self.edges[x[at]];
        for a in 0..e.len() {
            for b in a + 1..e.len() {
                let (la, lb) = (label[e[a]], label[e[b]]);
                if la == lb {
                    continue;
                }
                let saved = label.clone();
                let (keep, drop) = (la.min(lb), la.max(lb));
                for l in label.iter_mut() {
                    if *l == drop {
                        *l = keep;
                    }
                }
                chosen.push((e[a], e[b]));
                if self.search(x, at + 1, label, chosen, failed) {
                    return true;
                }
                chosen.pop();
                *label = saved;
            }
        }
        failed.insert(key);
        false
    }

    /// Canonical edge(X): pair selection with `x` scanned in value order, aligned with `x`.
    pub fn canonical_pairs(&self, order: &ValueOrder, x: &[usize]) -> Result<Vec<(usize, usize)>, ZooError> {
        let sorted = order.sorted(x);
        let pairs = self.pair_selection(&sorted).ok_or_else(|| ZooError::Dependent(x.to_vec()))?;
        Ok(x.iter().map(|e| pairs[sorted.iter().position(|s| s == e).unwrap()]).collect())
    }

    /// arc(X) over the canonical pair selection, aligned with `x`.
    pub fn orientation(&self, order: &ValueOrder, x: &[usize]) -> Result<Vec<(usize, usize)>, ZooError> {
        let pairs = self.canonical_pairs(order, x)?;
        canonical_orientation(self.vertices, &pairs)
    }
}

impl Matroid for HypergraphicInstance {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        self.pair_selection(&sorted).is_some()
    }
}
