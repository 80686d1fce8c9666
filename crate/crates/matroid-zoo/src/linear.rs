use matroid_core::{Matroid, ValueOrder};

use crate::ZooError;

const FREE: usize = usize::MAX;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Row-echelon basis over GF(p) with normalised pivots.
#[derive(Debug, Clone)]
struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    fn new(p: u64) -> Self {
        Echelon { p, rows: Vec::new() }
    }

    /// Adds `v` when it is independent of the current basis.
    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p;
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                let f = p - c;
                for (x, r) in v.iter_mut().zip(row) {
                    if *r != 0 {
                        *x = (*x + f * r) % p;
                    }
                }
            }
        }
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = pow_mod(v[pivot], p - 2, p);
        for x in v.iter_mut() {
            *x = *x * inv % p;
        }
        self.rows.push((pivot, v));
        true
    }
}

/// Column matroid of a matrix over GF(p) whose columns have at most `k`
/// nonzero entries. The frame B is the identity adjoined on the left; frame
/// element `i` is row `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseLinearInstance {
    p: u64,
    rows: usize,
    k: usize,
    columns: Vec<Vec<u64>>,
    support: Vec<Vec<usize>>,
}

impl SparseLinearInstance {
    /// `matrix[i][j]` is the entry in row `i`, column `j`; entries are reduced mod p.
    pub fn new(matrix: &[Vec<i64>], p: u64, k: usize) -> Result<Self, ZooError> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(ZooError::NotPrime(p));
        }
        let rows = matrix.len();
        let cols = matrix.first().map_or(0, Vec::len);
        if let Some(bad) = matrix.iter().find(|r| r.len() != cols) {
            return Err(ZooError::CountMismatch { what: "matrix row length", expected: cols, got: bad.len() });
        }
        let mut columns = vec![vec![0u64; rows]; cols];
        for (i, row) in matrix.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                columns[j][i] = x.rem_euclid(p as i64) as u64;
            }
        }
        let support: Vec<Vec<usize>> =
            columns.iter().map(|c| (0..rows).filter(|&i| c[i] != 0).collect()).collect();
        if let Some((column, s)) = support.iter().enumerate().find(|(_, s)| s.len() > k) {
            return Err(ZooError::ColumnTooDense { column, nonzeros: s.len(), k });
        }
        Ok(SparseLinearInstance { p, rows, k, columns, support })
    }

    pub fn field(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn column(&self, e: usize) -> &[u64] {
        &self.columns[e]
    }

    /// C(B, r): the frame elements (rows) in r's fundamental circuit.
    pub fn frame_circuit(&self, r: usize) -> &[usize] {
        &self.support[r]
    }

    /// π_X: an injection into frame rows with `π_X(x) ∈ C(B, x)`, aligned with `x`,
    /// found by matching `x` in value order to rows tried by increasing index.
    pub fn frame_injection(&self, order: &ValueOrder, x: &[usize]) -> Result<Vec<usize>, ZooError> {
        if !self.is_independent(x) {
            return Err(ZooError::Dependent(x.to_vec()));
        }
        let mut owner = vec![FREE; self.rows];
        let mut seen = vec![false; self.rows];
        for r in order.sorted(x) {
            seen.iter_mut().for_each(|s| *s = false);
            if !self.assign(r, &mut owner, &mut seen) {
                return Err(ZooError::Internal("independent columns admit no frame injection"));
            }
        }
        let mut row_of = vec![FREE; self.columns.len()];
        for (row, &e) in owner.iter().enumerate() {
            if e != FREE {
                row_of[e] = row;
            }
        }
        Ok(x.iter().map(|&e| row_of[e]).collect())
    }

    fn assign(&self, r: usize, owner: &mut [usize], seen: &mut [bool]) -> bool {
        for &row in &self.support[r] {
            if seen[row] {
                continue;
            }
            seen[row] = true;
            if owner[row] == FREE || self.assign(owner[row], owner, seen) {
                owner[row] = r;
                return true;
            }
        }
        false
    }

    /// The extension [I | M] over `rows + n` elements; element `n + i` is frame row `i`.
    pub fn with_frame(&self) -> FramedExtension<'_> {
        FramedExtension { inner: self }
    }

    fn vector(&self, e: usize) -> Vec<u64> {
        let n = self.columns.len();
        if e < n {
            self.columns[e].clone()
        } else {
            let mut v = vec![0; self.rows];
            v[e - n] = 1;
            v
        }
    }
}

impl Matroid for SparseLinearInstance {
    fn ground_size(&self) -> usize {
        self.columns.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        if set.len() > self.rows {
            return false;
        }
        let mut ech = Echelon::new(self.p);
        set.iter().all(|&e| ech.insert(self.columns[e].clone()))
    }

    fn greedy(&self, candidates: &[usize]) -> Vec<usize> {
        let mut ech = Echelon::new(self.p);
        let mut kept = Vec::new();
        for &e in candidates {
            if ech.rows.len() == self.rows {
                break;
            }
            if ech.insert(self.columns[e].clone()) {
                kept.push(e);
            }
        }
        kept
    }
}

/// The matroid of [I | M].
#[derive(Debug, Clone, Copy)]
pub struct FramedExtension<'a> {
    inner: &'a SparseLinearInstance,
}

impl Matroid for FramedExtension<'_> {
    fn ground_size(&self) -> usize {
        self.inner.columns.len() + self.inner.rows
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        let mut ech = Echelon::new(self.inner.p);
        set.iter().all(|&e| ech.insert(self.inner.vector(e)))
    }
}
