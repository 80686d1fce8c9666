use crate::{Matroid, ValueOrder};

/// Maintains OPT(R_i) as elements arrive one at a time.
///
/// Uses OPT(Q + r) ⊆ OPT(Q) + r, so each arrival costs one greedy pass over at
/// most ρ + 1 elements.
#[derive(Debug, Clone, Default)]
pub struct OptTracker {
    members: Vec<usize>,
}

impl OptTracker {
    pub fn new() -> Self {
        OptTracker { members: Vec::new() }
    }

    pub fn from_set<M: Matroid + ?Sized>(m: &M, order: &ValueOrder, set: &[usize]) -> Self {
        OptTracker { members: m.greedy(&order.sorted(set)) }
    }

    /// Adds `r` and reports whether `r ∈ OPT(R_i)`.
    pub fn insert<M: Matroid + ?Sized>(&mut self, m: &M, order: &ValueOrder, r: usize) -> bool {
        let at = self.members.partition_point(|&x| order.better(x, r));
        let mut candidates = Vec::with_capacity(self.members.len() + 1);
        candidates.extend_from_slice(&self.members[..at]);
        candidates.push(r);
        candidates.extend_from_slice(&self.members[at..]);
        let next = m.greedy(&candidates);
        let taken = next.get(at) == Some(&r);
        self.members = next;
        taken
    }

    /// Current optimum, best first.
    pub fn members(&self) -> &[usize] {
        &self.members
    }
}
