use crate::{check_set, Matroid, MatroidError};

/// Restriction of a contraction of `base`, sharing its id space.
///
/// A set is independent when it lies inside the ground set and stays
/// independent in `base` together with a basis of the contracted set, which
/// is the rank formula ρ(I ∪ Q) − ρ(Q) = |I|.
#[derive(Debug, Clone)]
pub struct Minor<'a, M: ?Sized> {
    base: &'a M,
    ground: Vec<bool>,
    contracted: Vec<bool>,
    contracted_basis: Vec<usize>,
}

pub fn restrict<'a, M: Matroid + ?Sized>(base: &'a M, q: &[usize]) -> Result<Minor<'a, M>, MatroidError> {
    Minor::whole(base).restrict(q)
}

pub fn contract<'a, M: Matroid + ?Sized>(base: &'a M, q: &[usize]) -> Result<Minor<'a, M>, MatroidError> {
    Minor::whole(base).contract(q)
}

impl<'a, M: Matroid + ?Sized> Minor<'a, M> {
    pub fn whole(base: &'a M) -> Self {
        let n = base.ground_size();
        Minor { base, ground: vec![true; n], contracted: vec![false; n], contracted_basis: Vec::new() }
    }

    pub fn restrict(mut self, q: &[usize]) -> Result<Self, MatroidError> {
        check_set(self.ground.len(), q)?;
        let mut keep = vec![false; self.ground.len()];
        for &e in q {
            keep[e] = self.ground[e];
        }
        self.ground = keep;
        Ok(self)
    }

    /// Contracts `q`; elements of `q` outside the current ground set are ignored.
    pub fn contract(mut self, q: &[usize]) -> Result<Self, MatroidError> {
        check_set(self.ground.len(), q)?;
        let mut candidates = self.contracted_basis.clone();
        for &e in q {
            if self.ground[e] {
                self.ground[e] = false;
                self.contracted[e] = true;
                candidates.push(e);
            }
        }
        self.contracted_basis = self.base.greedy(&candidates);
        Ok(self)
    }

    pub fn ground(&self) -> Vec<usize> {
        (0..self.ground.len()).filter(|&e| self.ground[e]).collect()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.ground[e]
    }

    pub fn contracted(&self) -> Vec<usize> {
        (0..self.contracted.len()).filter(|&e| self.contracted[e]).collect()
    }

    pub fn contracted_basis(&self) -> &[usize] {
        &self.contracted_basis
    }
}

impl<M: Matroid + ?Sized> Matroid for Minor<'_, M> {
    fn ground_size(&self) -> usize {
        self.ground.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        if set.iter().any(|&e| !self.ground[e]) {
            return false;
        }
        if self.contracted_basis.is_empty() {
            return self.base.is_independent(set);
        }
        let mut joined = self.contracted_basis.clone();
        joined.extend_from_slice(set);
        self.base.is_independent(&joined)
    }

    fn greedy(&self, candidates: &[usize]) -> Vec<usize> {
        let inside: Vec<usize> = candidates.iter().copied().filter(|&e| self.ground[e]).collect();
        if self.contracted_basis.is_empty() {
            return self.base.greedy(&inside);
        }
        let k = self.contracted_basis.len();
        let mut joined = self.contracted_basis.clone();
        joined.extend_from_slice(&inside);
        let kept = self.base.greedy(&joined);
        kept[k..].to_vec()
    }
}
