//! Exact sparse linear algebra over `F_p`.
//!
//! Vectors are sorted `(index, coefficient)` lists with no zero entries.
//! Elimination is column oriented and always pivots on the largest row
//! index still present in a column ("lowest one" reduction). Callers that
//! order their rows so that structurally leading entries get large indices
//! see little or no fill-in.

use std::collections::HashMap;

use super::field::Prime;
use crate::error::{Error, Result};

pub type SparseVec = Vec<(usize, u32)>;

/// Sorts, merges duplicates and drops zeros.
pub fn normalize(p: Prime, mut v: Vec<(usize, i64)>) -> SparseVec {
    v.sort_unstable_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, c) in v {
        let c = p.reduce(c);
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = p.add(last.1, c),
            _ => out.push((i, c)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

/// `y + c * x`.
pub fn axpy(p: Prime, y: &[(usize, u32)], c: u32, x: &[(usize, u32)]) -> SparseVec {
    let mut out = Vec::with_capacity(y.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < y.len() || j < x.len() {
        let take_y = j >= x.len() || (i < y.len() && y[i].0 < x[j].0);
        let take_x = i >= y.len() || (j < x.len() && x[j].0 < y[i].0);
        if take_y {
            out.push(y[i]);
            i += 1;
        } else if take_x {
            let v = p.mul(c, x[j].1);
            if v != 0 {
                out.push((x[j].0, v));
            }
            j += 1;
        } else {
            let v = p.add(y[i].1, p.mul(c, x[j].1));
            if v != 0 {
                out.push((y[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(p: Prime, c: u32, x: &[(usize, u32)]) -> SparseVec {
    if c.is_multiple_of(p.get()) {
        return Vec::new();
    }
    x.iter().map(|&(i, v)| (i, p.mul(c, v))).collect()
}

/// A set of vectors with pairwise distinct lowest (largest-index) entries.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    p: Prime,
    pivots: HashMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new(p: Prime) -> Self {
        EchelonBasis {
            p,
            pivots: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, row: usize) -> bool {
        self.pivots.contains_key(&row)
    }

    /// Reduces until the lowest entry is not a pivot (or the vector vanishes).
    pub fn reduce_low(&self, mut v: SparseVec) -> SparseVec {
        while let Some(&(low, c)) = v.last() {
            match self.pivots.get(&low) {
                Some(piv) => {
                    let lead = piv.last().expect("pivot vectors are nonzero").1;
                    let factor = self.p.neg(self.p.mul(c, self.p.inv(lead)));
                    v = axpy(self.p, &v, factor, piv);
                }
                None => break,
            }
        }
        v
    }

    /// Adds `v` to the span. Returns false if it was already in the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce_low(v);
        match v.last() {
            Some(&(low, _)) => {
                self.pivots.insert(low, v);
                true
            }
            None => false,
        }
    }

    /// The stored vectors, ordered by pivot row.
    pub fn vectors(&self) -> Vec<&SparseVec> {
        let mut rows: Vec<_> = self.pivots.iter().collect();
        rows.sort_unstable_by_key(|(row, _)| **row);
        rows.into_iter().map(|(_, v)| v).collect()
    }

    /// Full reduction: the result has no entry on a pivot row, so it is the
    /// canonical representative of `v` modulo the span.
    pub fn normal_form(&self, v: &[(usize, u32)]) -> SparseVec {
        let p = self.p;
        let mut acc: std::collections::BTreeMap<usize, u32> = v.iter().copied().collect();
        let mut out = Vec::new();
        while let Some((&row, &c)) = acc.iter().next_back() {
            acc.remove(&row);
            if c == 0 {
                continue;
            }
            match self.pivots.get(&row) {
                Some(piv) => {
                    let lead = piv.last().expect("pivot vectors are nonzero").1;
                    let factor = p.neg(p.mul(c, p.inv(lead)));
                    for &(i, x) in &piv[..piv.len() - 1] {
                        let e = acc.entry(i).or_insert(0);
                        *e = p.add(*e, p.mul(factor, x));
                    }
                }
                None => out.push((row, c)),
            }
        }
        out.reverse();
        out
    }
}

/// A matrix over `F_p` stored as sparse columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub prime: Prime,
    pub nrows: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMatrix {
    /// Builds a matrix from column lists of `(row, value)` pairs. Values are
    /// taken mod p; duplicate rows are summed.
    pub fn from_columns(prime: Prime, nrows: usize, cols: Vec<Vec<(usize, i64)>>) -> Result<Self> {
        let mut out = Vec::with_capacity(cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            if let Some(&(i, _)) = col.iter().find(|e| e.0 >= nrows) {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has row index {i} but the matrix has {nrows} rows"
                )));
            }
            out.push(normalize(prime, col));
        }
        Ok(SparseMatrix {
            prime,
            nrows,
            cols: out,
        })
    }

    /// Wraps already-normalized columns.
    pub fn from_sparse(prime: Prime, nrows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols
            .iter()
            .all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.iter().all(|e| e.0 < nrows && e.1 != 0)));
        SparseMatrix { prime, nrows, cols }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn identity(prime: Prime, n: usize) -> Self {
        SparseMatrix::from_sparse(prime, n, (0..n).map(|i| vec![(i, 1)]).collect())
    }

    pub fn mul_vec(&self, v: &[(usize, u32)]) -> Result<SparseVec> {
        let mut acc = Vec::new();
        for &(j, c) in v {
            let col = self.cols.get(j).ok_or_else(|| {
                Error::DimensionMismatch(format!("vector index {j} >= {} columns", self.ncols()))
            })?;
            acc = axpy(self.prime, &acc, c, col);
        }
        Ok(acc)
    }

    /// Product `self * rhs`.
    pub fn compose(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if rhs.nrows != self.ncols() {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.nrows,
                self.ncols(),
                rhs.nrows,
                rhs.ncols()
            )));
        }
        let cols = rhs
            .cols
            .iter()
            .map(|c| self.mul_vec(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix::from_sparse(self.prime, self.nrows, cols))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn rank(&self) -> usize {
        let mut ech = EchelonBasis::new(self.prime);
        for col in &self.cols {
            if ech.rank() == self.nrows {
                break;
            }
            ech.insert(col.clone());
        }
        ech.rank()
    }

    /// Rank together with a basis of the null space.
    pub fn rank_kernel(&self) -> (usize, Vec<SparseVec>) {
        let p = self.prime;
        // pivot row -> (reduced column, combination of original columns)
        let mut pivots: HashMap<usize, (SparseVec, SparseVec)> = HashMap::new();
        let mut kernel = Vec::new();
        for (j, col) in self.cols.iter().enumerate() {
            let mut v = col.clone();
            let mut comb: SparseVec = vec![(j, 1)];
            while let Some(&(low, c)) = v.last() {
                match pivots.get(&low) {
                    Some((piv, piv_comb)) => {
                        let lead = piv.last().expect("nonzero pivot").1;
                        let factor = p.neg(p.mul(c, p.inv(lead)));
                        v = axpy(p, &v, factor, piv);
                        comb = axpy(p, &comb, factor, piv_comb);
                    }
                    None => break,
                }
            }
            match v.last() {
                Some(&(low, _)) => {
                    pivots.insert(low, (v, comb));
                }
                None => kernel.push(comb),
            }
        }
        (pivots.len(), kernel)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn identity_over_f2() {
        let m = SparseMatrix::identity(p(2), 3);
        let (r, k) = m.rank_kernel();
        assert_eq!(r, 3);
        assert!(k.is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_standard_basis() {
        let m = SparseMatrix::from_columns(p(3), 2, vec![vec![], vec![]]).unwrap();
        let (r, k) = m.rank_kernel();
        assert_eq!(r, 0);
        assert_eq!(k, vec![vec![(0, 1)], vec![(1, 1)]]);
    }

    #[test]
    fn rank_one_over_f5() {
        // rows [1,2],[2,4]; columns (1,2) and (2,4)
        let m = SparseMatrix::from_columns(p(5), 2, vec![vec![(0, 1), (1, 2)], vec![(0, 2), (1, 4)]])
            .unwrap();
        let (r, k) = m.rank_kernel();
        assert_eq!(r, 1);
        assert_eq!(k.len(), 1);
        // kernel vector must be a nonzero multiple of (2, -1) = (2, 4)
        let v = &k[0];
        let dense: Vec<u32> = (0..2)
            .map(|i| v.iter().find(|e| e.0 == i).map_or(0, |e| e.1))
            .collect();
        let f = p(5);
        assert_ne!(dense, vec![0, 0]);
        assert_eq!(f.mul(dense[0], 4), f.mul(dense[1], 2));
        assert!(m.mul_vec(v).unwrap().is_empty());
    }

    #[test]
    fn out_of_range_row_is_rejected() {
        let err = SparseMatrix::from_columns(p(3), 2, vec![vec![(2, 1)]]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)));
    }

    #[test]
    fn normal_form_is_canonical() {
        let f = p(3);
        let mut e = EchelonBasis::new(f);
        e.insert(vec![(0, 1), (2, 1)]);
        e.insert(vec![(1, 2), (2, 2)]);
        // x0 + x2 is in the span, so x2 == -x0 == 2 x0 in the quotient
        let a = e.normal_form(&[(2, 1)]);
        let b = e.normal_form(&[(0, 2)]);
        assert_eq!(a, b);
        assert!(e.normal_form(&[(0, 1), (2, 1)]).is_empty());
    }
}
