use matroid_core::{Matroid, ValueOrder};

use crate::ZooError;

const FREE: usize = usize::MAX;

/// Transversal matroid of a bipartite graph: element `e` is the right vertex
/// with left neighbours `adj[e]`; a set is independent when it can be matched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalInstance {
    left: usize,
    adj: Vec<Vec<usize>>,
}

fn try_match(adj: &[Vec<usize>], r: usize, owner: &mut [usize], seen: &mut [bool]) -> bool {
    for &l in &adj[r] {
        if seen[l] {
            continue;
        }
        seen[l] = true;
        if owner[l] == FREE || try_match(adj, owner[l], owner, seen) {
            owner[l] = r;
            return true;
        }
    }
    false
}

impl TransversalInstance {
    pub fn new(left: usize, adj: Vec<Vec<usize>>) -> Result<Self, ZooError> {
        let mut clean = Vec::with_capacity(adj.len());
        for mut nbrs in adj {
            if let Some(&l) = nbrs.iter().find(|&&l| l >= left) {
                return Err(ZooError::OutOfRange { what: "left vertex", id: l, limit: left });
            }
            nbrs.sort_unstable();
            nbrs.dedup();
            clean.push(nbrs);
        }
        Ok(TransversalInstance { left, adj: clean })
    }

    pub fn left_size(&self) -> usize {
        self.left
    }

    pub fn neighbours(&self, e: usize) -> &[usize] {
        &self.adj[e]
    }

    /// Matches `candidates` in sequence; returns the kept elements and the
    /// owner of every left vertex.
    fn run(&self, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut owner = vec![FREE; self.left];
        let mut seen = vec![false; self.left];
        let mut kept = Vec::new();
        for &r in candidates {
            seen.iter_mut().for_each(|s| *s = false);
            if try_match(&self.adj, r, &mut owner, &mut seen) {
                kept.push(r);
            }
        }
        (kept, owner)
    }

    /// M_X: the left partner of each element of `x`, aligned with `x`. Elements
    /// are matched in value order by augmenting paths that try left vertices
    /// by increasing id.
    pub fn canonical_matching(&self, order: &ValueOrder, x: &[usize]) -> Result<Vec<usize>, ZooError> {
        let sorted = order.sorted(x);
        let (kept, owner) = self.run(&sorted);
        if kept.len() != x.len() {
            return Err(ZooError::Dependent(x.to_vec()));
        }
        let mut partner = vec![FREE; self.adj.len()];
        for (l, &r) in owner.iter().enumerate() {
            if r != FREE {
                partner[r] = l;
            }
        }
        Ok(x.iter().map(|&r| partner[r]).collect())
    }
}

impl Matroid for TransversalInstance {
    fn ground_size(&self) -> usize {
        self.adj.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        set.len() <= self.left && self.run(set).0.len() == set.len()
    }

    fn greedy(&self, candidates: &[usize]) -> Vec<usize> {
        self.run(candidates).0
    }
}
