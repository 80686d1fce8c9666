use crate::{MatroidError, ValueOrder};

/// Independence oracle over element ids `0..ground_size()`.
///
/// Callers pass sets without duplicates and with ids in range; use [`check_set`]
/// at trust boundaries.
pub trait Matroid: Send + Sync {
    fn ground_size(&self) -> usize;

    fn is_independent(&self, set: &[usize]) -> bool;

    /// Scans `candidates` in the given order and keeps each element that stays
    /// independent together with the ones kept before it.
    fn greedy(&self, candidates: &[usize]) -> Vec<usize> {
        let mut kept = Vec::with_capacity(candidates.len());
        for &c in candidates {
            kept.push(c);
            if !self.is_independent(&kept) {
                kept.pop();
            }
        }
        kept
    }
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn is_independent(&self, set: &[usize]) -> bool {
        (**self).is_independent(set)
    }
    fn greedy(&self, candidates: &[usize]) -> Vec<usize> {
        (**self).greedy(candidates)
    }
}

impl<M: Matroid + ?Sized> Matroid for Box<M> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn is_independent(&self, set: &[usize]) -> bool {
        (**self).is_independent(set)
    }
    fn greedy(&self, candidates: &[usize]) -> Vec<usize> {
        (**self).greedy(candidates)
    }
}

pub fn check_set(n: usize, set: &[usize]) -> Result<(), MatroidError> {
    let mut seen = vec![false; n];
    for &id in set {
        if id >= n {
            return Err(MatroidError::OutOfRange { id, n });
        }
        if std::mem::replace(&mut seen[id], true) {
            return Err(MatroidError::Duplicate(id));
        }
    }
    Ok(())
}

/// OPT(Q): greedy in value order, returned best first.
pub fn greedy_opt<M: Matroid + ?Sized>(m: &M, order: &ValueOrder, q: &[usize]) -> Vec<usize> {
    m.greedy(&order.sorted(q))
}

pub fn rank<M: Matroid + ?Sized>(m: &M, q: &[usize]) -> usize {
    m.greedy(q).len()
}

/// Elements whose addition does not raise the rank of `q`, in increasing id order.
pub fn span<M: Matroid + ?Sized>(m: &M, q: &[usize]) -> Vec<usize> {
    let mut basis = m.greedy(q);
    let mut in_basis = vec![false; m.ground_size()];
    for &b in &basis {
        in_basis[b] = true;
    }
    let mut out = Vec::new();
    for r in 0..m.ground_size() {
        if in_basis[r] {
            out.push(r);
            continue;
        }
        basis.push(r);
        if !m.is_independent(&basis) {
            out.push(r);
        }
        basis.pop();
    }
    out
}

/// A matroid together with its value order.
#[derive(Debug, Clone)]
pub struct OrderedMatroid<M> {
    pub matroid: M,
    pub order: ValueOrder,
}

impl<M: Matroid> OrderedMatroid<M> {
    pub fn new(matroid: M, order: ValueOrder) -> Result<Self, MatroidError> {
        if order.len() != matroid.ground_size() {
            return Err(MatroidError::NotPermutation(matroid.ground_size()));
        }
        Ok(OrderedMatroid { matroid, order })
    }

    pub fn n(&self) -> usize {
        self.matroid.ground_size()
    }

    pub fn is_independent(&self, set: &[usize]) -> Result<bool, MatroidError> {
        check_set(self.n(), set)?;
        Ok(self.matroid.is_independent(set))
    }

    pub fn greedy_opt(&self, q: &[usize]) -> Result<Vec<usize>, MatroidError> {
        check_set(self.n(), q)?;
        Ok(greedy_opt(&self.matroid, &self.order, q))
    }

    /// OPT(R).
    pub fn opt(&self) -> Vec<usize> {
        self.matroid.greedy(self.order.ranking())
    }

    pub fn rank(&self, q: &[usize]) -> Result<usize, MatroidError> {
        check_set(self.n(), q)?;
        Ok(rank(&self.matroid, q))
    }

    pub fn span(&self, q: &[usize]) -> Result<Vec<usize>, MatroidError> {
        check_set(self.n(), q)?;
        Ok(span(&self.matroid, q))
    }
}

/// Elements `y` of the independent set `base` such that `base − y + r` is
/// independent: the circuit of `base + r` without `r`. Empty when `base + r`
/// is independent or `r ∈ base`.
pub fn fundamental_circuit<M: Matroid + ?Sized>(m: &M, base: &[usize], r: usize) -> Vec<usize> {
    if base.contains(&r) {
        return Vec::new();
    }
    let mut with_r = base.to_vec();
    with_r.push(r);
    if m.is_independent(&with_r) {
        return Vec::new();
    }
    base.iter()
        .copied()
        .filter(|&y| {
            let swapped: Vec<usize> = with_r.iter().copied().filter(|&z| z != y).collect();
            m.is_independent(&swapped)
        })
        .collect()
}
