use std::collections::HashSet;

use crate::{check_set, Matroid, MatroidError, ValueOrder};

pub const BRUTE_FORCE_LIMIT: usize = 16;
pub const AXIOM_LIMIT: usize = 12;

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Maximum-weight independent subset of `q` by enumerating every subset.
///
/// `weights[e]` is the weight of element `e`; weights must be non-increasing
/// along the value order.
pub fn brute_force_opt<M: Matroid + ?Sized>(
    m: &M,
    order: &ValueOrder,
    q: &[usize],
    weights: &[f64],
) -> Result<Vec<usize>, MatroidError> {
    let n = m.ground_size();
    if n > BRUTE_FORCE_LIMIT {
        return Err(MatroidError::TooLarge { size: n, limit: BRUTE_FORCE_LIMIT });
    }
    check_set(n, q)?;
    if weights.len() != n {
        return Err(MatroidError::WeightCount { expected: n, got: weights.len() });
    }
    for k in 1..n {
        if weights[order.element_at(k)] > weights[order.element_at(k - 1)] {
            return Err(MatroidError::IncompatibleWeights(k - 1));
        }
    }
    let mut best: Vec<usize> = Vec::new();
    let mut best_weight = 0.0;
    for mask in 0u32..(1u32 << q.len()) {
        let set: Vec<usize> = members(mask).into_iter().map(|i| q[i]).collect();
        let w: f64 = set.iter().map(|&e| weights[e]).sum();
        if w > best_weight && m.is_independent(&set) {
            best_weight = w;
            best = set;
        }
    }
    order.sort(&mut best);
    Ok(best)
}

/// Exhaustively checks that ∅ is independent, independence is closed under
/// taking subsets, and the augmentation axiom holds.
pub fn verify_matroid_axioms<M: Matroid + ?Sized>(m: &M) -> Result<bool, MatroidError> {
    let n = m.ground_size();
    if n > AXIOM_LIMIT {
        return Err(MatroidError::TooLarge { size: n, limit: AXIOM_LIMIT });
    }
    let total = 1usize << n;
    let indep: Vec<bool> = (0..total).map(|mask| m.is_independent(&members(mask as u32))).collect();
    if !indep[0] {
        return Ok(false);
    }
    for mask in 0..total {
        if !indep[mask] {
            continue;
        }
        for e in 0..n {
            if mask >> e & 1 == 1 && !indep[mask & !(1 << e)] {
                return Ok(false);
            }
        }
    }
    // With downward closure in place it suffices to augment from |I| to |I|+1.
    for small in 0..total {
        if !indep[small] {
            continue;
        }
        let size = small.count_ones();
        for big in 0..total {
            if !indep[big] || big.count_ones() != size + 1 {
                continue;
            }
            let extra = big & !small;
            let augments = (0..n).any(|e| extra >> e & 1 == 1 && indep[small | 1 << e]);
            if !augments {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Independence system given by an explicit list of independent sets.
#[derive(Debug, Clone)]
pub struct SetSystem {
    n: usize,
    sets: HashSet<Vec<usize>>,
}

impl SetSystem {
    pub fn new(n: usize, sets: &[Vec<usize>]) -> Result<Self, MatroidError> {
        let mut stored = HashSet::new();
        for s in sets {
            check_set(n, s)?;
            let mut s = s.clone();
            s.sort_unstable();
            stored.insert(s);
        }
        Ok(SetSystem { n, sets: stored })
    }

    /// Every subset is independent.
    pub fn free(n: usize) -> Self {
        assert!(n <= AXIOM_LIMIT, "free set system is materialised explicitly");
        let sets = (0..1u32 << n).map(members).collect();
        SetSystem { n, sets }
    }
}

impl Matroid for SetSystem {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        let mut s = set.to_vec();
        s.sort_unstable();
        self.sets.contains(&s)
    }
}
