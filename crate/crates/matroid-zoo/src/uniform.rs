use matroid_core::Matroid;

use crate::ZooError;

/// U(n, ρ): every set of at most ρ elements is independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformMatroid {
    n: usize,
    rank: usize,
}

impl UniformMatroid {
    pub fn new(n: usize, rank: usize) -> Self {
        UniformMatroid { n, rank: rank.min(n) }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl Matroid for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        set.len() <= self.rank
    }

    fn greedy(&self, candidates: &[usize]) -> Vec<usize> {
        candidates.iter().copied().take(self.rank).collect()
    }
}

/// Each element belongs to at most one part; a set is independent when it
/// uses at most `caps[j]` elements of part `j`. Elements in no part are free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionMatroid {
    part_of: Vec<Option<usize>>,
    caps: Vec<usize>,
}

impl PartitionMatroid {
    pub fn new(n: usize, parts: &[Vec<usize>], caps: &[usize]) -> Result<Self, ZooError> {
        if parts.len() != caps.len() {
            return Err(ZooError::CountMismatch { what: "part capacities", expected: parts.len(), got: caps.len() });
        }
        let mut part_of = vec![None; n];
        for (j, part) in parts.iter().enumerate() {
            for &e in part {
                if e >= n {
                    return Err(ZooError::OutOfRange { what: "element", id: e, limit: n });
                }
                if part_of[e].replace(j).is_some() {
                    return Err(ZooError::Invalid(format!("element {e} lies in two parts")));
                }
            }
        }
        Ok(PartitionMatroid { part_of, caps: caps.to_vec() })
    }

    fn admit(&self, used: &mut [usize], e: usize) -> bool {
        match self.part_of[e] {
            None => true,
            Some(j) if used[j] < self.caps[j] => {
                used[j] += 1;
                true
            }
            Some(_) => false,
        }
    }
}

impl Matroid for PartitionMatroid {
    fn ground_size(&self) -> usize {
        self.part_of.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        let mut used = vec![0; self.caps.len()];
        set.iter().all(|&e| self.admit(&mut used, e))
    }

    fn greedy(&self, candidates: &[usize]) -> Vec<usize> {
        let mut used = vec![0; self.caps.len()];
        candidates.iter().copied().filter(|&e| self.admit(&mut used, e)).collect()
    }
}
