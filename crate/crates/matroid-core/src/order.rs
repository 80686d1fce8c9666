use crate::MatroidError;

/// Total order on the ground set. Rank position 0 holds the best element r¹.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueOrder {
    ranking: Vec<usize>,
    position: Vec<usize>,
}

impl ValueOrder {
    pub fn identity(n: usize) -> Self {
        ValueOrder { ranking: (0..n).collect(), position: (0..n).collect() }
    }

    /// `ranking[k]` is the element at rank position `k` (0 = best).
    pub fn from_ranking(ranking: Vec<usize>) -> Result<Self, MatroidError> {
        let n = ranking.len();
        let mut position = vec![usize::MAX; n];
        for (k, &e) in ranking.iter().enumerate() {
            if e >= n || position[e] != usize::MAX {
                return Err(MatroidError::NotPermutation(n));
            }
            position[e] = k;
        }
        Ok(ValueOrder { ranking, position })
    }

    pub fn len(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranking.is_empty()
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn element_at(&self, position: usize) -> usize {
        self.ranking[position]
    }

    pub fn position(&self, element: usize) -> usize {
        self.position[element]
    }

    /// `a ≻ b`.
    pub fn better(&self, a: usize, b: usize) -> bool {
        self.position[a] < self.position[b]
    }

    /// The `k` best elements, R^k.
    pub fn prefix(&self, k: usize) -> &[usize] {
        &self.ranking[..k]
    }

    pub fn sort(&self, set: &mut [usize]) {
        set.sort_unstable_by_key(|&e| self.position[e]);
    }

    pub fn sorted(&self, set: &[usize]) -> Vec<usize> {
        let mut v = set.to_vec();
        self.sort(&mut v);
        v
    }
}
