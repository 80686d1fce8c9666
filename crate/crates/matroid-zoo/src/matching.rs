use std::collections::VecDeque;

use matroid_core::Matroid;

use crate::ZooError;

const NONE: usize = usize::MAX;

/// Maximum matching in a general graph by Edmonds' blossom algorithm.
/// Returns the partner of every vertex.
pub(crate) fn maximum_matching(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut mate = vec![NONE; n];
    for root in 0..n {
        if mate[root] == NONE {
            if let Some(end) = find_augmenting(adj, &mate, root) {
                let mut v = end.1;
                let parent = end.0;
                while v != NONE {
                    let pv = parent[v];
                    let next = mate[pv];
                    mate[v] = pv;
                    mate[pv] = v;
                    v = next;
                }
            }
        }
    }
    mate
}

fn lca(mate: &[usize], base: &[usize], parent: &[usize], mut a: usize, mut b: usize) -> usize {
    let mut used = vec![false; mate.len()];
    loop {
        a = base[a];
        used[a] = true;
        if mate[a] == NONE {
            break;
        }
        a = parent[mate[a]];
    }
    loop {
        b = base[b];
        if used[b] {
            return b;
        }
        b = parent[mate[b]];
    }
}

fn mark_path(
    mate: &[usize],
    base: &[usize],
    blossom: &mut [bool],
    parent: &mut [usize],
    mut v: usize,
    b: usize,
    mut child: usize,
) {
    while base[v] != b {
        blossom[base[v]] = true;
        blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

/// Searches an augmenting path from the exposed vertex `root`; returns the
/// parent links and the exposed endpoint.
fn find_augmenting(adj: &[Vec<usize>], mate: &[usize], root: usize) -> Option<(Vec<usize>, usize)> {
    let n = adj.len();
    let mut used = vec![false; n];
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    used[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &to in &adj[v] {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                let cur = lca(mate, &base, &parent, v, to);
                let mut blossom = vec![false; n];
                mark_path(mate, &base, &mut blossom, &mut parent, v, cur, to);
                mark_path(mate, &base, &mut blossom, &mut parent, to, cur, v);
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = cur;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == NONE {
                parent[to] = v;
                if mate[to] == NONE {
                    return Some((parent, to));
                }
                let m = mate[to];
                used[m] = true;
                queue.push_back(m);
            }
        }
    }
    None
}

/// Matching matroid: a set of terminals is independent when one matching of
/// the host graph covers all of them. Element `e` is vertex `terminals[e]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingInstance {
    vertices: usize,
    adj: Vec<Vec<usize>>,
    terminals: Vec<usize>,
}

impl MatchingInstance {
    pub fn new(vertices: usize, edges: &[(usize, usize)], terminals: Vec<usize>) -> Result<Self, ZooError> {
        let mut adj = vec![Vec::new(); vertices];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= vertices {
                    return Err(ZooError::OutOfRange { what: "vertex", id: x, limit: vertices });
                }
            }
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
            a.dedup();
        }
        let mut seen = vec![false; vertices];
        for &t in &terminals {
            if t >= vertices {
                return Err(ZooError::OutOfRange { what: "vertex", id: t, limit: vertices });
            }
            if std::mem::replace(&mut seen[t], true) {
                return Err(ZooError::RepeatedTerminal(t));
            }
        }
        Ok(MatchingInstance { vertices, adj, terminals })
    }

    pub fn terminal(&self, e: usize) -> usize {
        self.terminals[e]
    }

    /// A matching covering the terminals of `x`, or `None`. Two copies of the
    /// host graph are joined by an edge at every vertex outside `x`; a perfect
    /// matching there restricts to a matching covering `x` in the first copy.
    fn cover(&self, x: &[usize]) -> Option<Vec<usize>> {
        let v = self.vertices;
        let mut required = vec![false; v];
        for &e in x {
            required[self.terminals[e]] = true;
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * v];
        for u in 0..v {
            adj[u].extend(self.adj[u].iter().copied());
            adj[u + v].extend(self.adj[u].iter().map(|&w| w + v));
            if !required[u] {
                adj[u].push(u + v);
                adj[u + v].push(u);
            }
        }
        let mate = maximum_matching(&adj);
        if mate.iter().any(|&m| m == NONE) {
            return None;
        }
        Some(mate[..v].iter().map(|&m| if m < v { m } else { NONE }).collect())
    }

    /// 𝓠_X(r) for every r in `x`: the matching edge covering r's vertex,
    /// as (terminal vertex, partner), aligned with `x`.
    pub fn canonical_packing(&self, x: &[usize]) -> Result<Vec<(usize, usize)>, ZooError> {
        let mate = self.cover(x).ok_or_else(|| ZooError::Dependent(x.to_vec()))?;
        Ok(x.iter().map(|&e| (self.terminals[e], mate[self.terminals[e]])).collect())
    }
}

impl Matroid for MatchingInstance {
    fn ground_size(&self) -> usize {
        self.terminals.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        set.is_empty() || self.cover(set).is_some()
    }
}
