use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::bar::GradedAlgebra;
use crate::error::{Error, Result};
use crate::fpgraded::{Prime, SparseVec};

/// A word in the generators of `V`, as generator indices.
pub type Word = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorGenerator {
    pub name: String,
    pub degree: u32,
}

/// The free associative algebra `T(V)` on a graded vector space with a
/// chosen basis, all in positive degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorAlgebra {
    prime: Prime,
    v_basis: Vec<TensorGenerator>,
}

impl TensorAlgebra {
    pub fn new(prime: Prime, v_basis: Vec<(String, u32)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut gens = Vec::with_capacity(v_basis.len());
        for (name, degree) in v_basis {
            if degree == 0 {
                return Err(Error::BadDegree {
                    name,
                    degree: 0,
                    min: 1,
                });
            }
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateGenerator(name));
            }
            gens.push(TensorGenerator { name, degree });
        }
        Ok(TensorAlgebra {
            prime,
            v_basis: gens,
        })
    }

    /// Generators named `v1, v2, …` in the given degrees.
    pub fn from_degrees(prime: Prime, degrees: &[u32]) -> Result<Self> {
        Self::new(
            prime,
            degrees
                .iter()
                .enumerate()
                .map(|(i, &d)| (format!("v{}", i + 1), d))
                .collect(),
        )
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn v_basis(&self) -> &[TensorGenerator] {
        &self.v_basis
    }

    pub fn ngens(&self) -> usize {
        self.v_basis.len()
    }

    pub fn degree_of(&self, v: usize) -> usize {
        self.v_basis[v].degree as usize
    }

    pub fn word_degree(&self, w: &[usize]) -> usize {
        w.iter().map(|&v| self.degree_of(v)).sum()
    }

    /// `dim T(V)_d` for `d = 0..=d_max`, by `dim T_d = Σ_v dim T_{d-|v|}`.
    pub fn dims(&self, d_max: usize) -> Vec<usize> {
        let mut dims = vec![0usize; d_max + 1];
        dims[0] = 1;
        for d in 1..=d_max {
            dims[d] = self
                .v_basis
                .iter()
                .filter(|g| g.degree as usize <= d)
                .map(|g| dims[d - g.degree as usize])
                .sum();
        }
        dims
    }

    pub fn format_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&v| self.v_basis[v].name.as_str()).collect()
    }
}

/// Words of total degree `d`, in lexicographic order of generator indices.
pub fn tensor_algebra_basis(t: &TensorAlgebra, d: usize) -> Vec<Word> {
    fn go(t: &TensorAlgebra, rem: usize, cur: &mut Word, out: &mut Vec<Word>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for v in 0..t.ngens() {
            let dv = t.degree_of(v);
            if dv <= rem {
                cur.push(v);
                go(t, rem - dv, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(t, d, &mut Vec::new(), &mut out);
    out
}

/// Position arithmetic for words without materializing the bases:
/// `rank(v w) = before(v, |v w|) + rank(w)`, where `before(v, m)` counts the
/// words of degree `m` whose first letter precedes `v`.
#[derive(Debug, Clone)]
pub struct WordRanks {
    degrees: Vec<usize>,
    dims: Vec<usize>,
    // before[v][m]
    before: Vec<Vec<usize>>,
}

impl WordRanks {
    pub fn new(t: &TensorAlgebra, d_max: usize) -> Self {
        let dims = t.dims(d_max);
        let degrees: Vec<usize> = (0..t.ngens()).map(|v| t.degree_of(v)).collect();
        let before = (0..t.ngens())
            .map(|v| {
                (0..=d_max)
                    .map(|m| {
                        degrees[..v]
                            .iter()
                            .filter(|&&dv| dv <= m)
                            .map(|&dv| dims[m - dv])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        WordRanks {
            degrees,
            dims,
            before,
        }
    }

    pub fn d_max(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, d: usize) -> usize {
        self.dims.get(d).copied().unwrap_or(0)
    }

    pub fn degree_of(&self, v: usize) -> usize {
        self.degrees[v]
    }

    /// Rank of `v w` given the rank and degree of `w`.
    pub fn prepend(&self, v: usize, w_degree: usize, w_rank: usize) -> usize {
        self.before[v][w_degree + self.degrees[v]] + w_rank
    }

    /// Rank of `t w` given the rank and degree of `w`.
    pub fn prepend_word(&self, t: &[usize], w_degree: usize, w_rank: usize) -> usize {
        let mut deg = w_degree;
        let mut rank = w_rank;
        for &v in t.iter().rev() {
            rank = self.prepend(v, deg, rank);
            deg += self.degrees[v];
        }
        rank
    }

    pub fn rank(&self, w: &[usize]) -> usize {
        self.prepend_word(w, 0, 0)
    }
}

/// `T(V)` with its word bases materialized up to a degree cap, as a
/// [`GradedAlgebra`] for bar complex computations.
#[derive(Debug, Clone)]
pub struct TruncatedTensorAlgebra {
    prime: Prime,
    bases: Vec<Vec<Word>>,
    index: HashMap<Word, usize>,
}

impl TruncatedTensorAlgebra {
    pub fn new(t: &TensorAlgebra, d_max: usize) -> Self {
        let bases: Vec<Vec<Word>> = (0..=d_max).map(|d| tensor_algebra_basis(t, d)).collect();
        let mut index = HashMap::new();
        for basis in &bases {
            for (i, w) in basis.iter().enumerate() {
                index.insert(w.clone(), i);
            }
        }
        TruncatedTensorAlgebra {
            prime: t.prime(),
            bases,
            index,
        }
    }
}

impl GradedAlgebra for TruncatedTensorAlgebra {
    fn prime(&self) -> Prime {
        self.prime
    }

    fn dim(&self, degree: usize) -> usize {
        self.bases.get(degree).map_or(0, Vec::len)
    }

    fn multiply(&self, da: usize, a: usize, db: usize, b: usize) -> SparseVec {
        if da + db >= self.bases.len() {
            return Vec::new();
        }
        let mut w = self.bases[da][a].clone();
        w.extend_from_slice(&self.bases[db][b]);
        vec![(self.index[&w], 1)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(degrees: &[u32]) -> TensorAlgebra {
        TensorAlgebra::from_degrees(Prime::new(3).unwrap(), degrees).unwrap()
    }

    fn names(a: &TensorAlgebra, words: &[Word]) -> Vec<String> {
        words.iter().map(|w| a.format_word(w)).collect()
    }

    #[test]
    fn basis_examples() {
        let a = TensorAlgebra::new(Prime::new(2).unwrap(), vec![("x".into(), 1)]).unwrap();
        assert_eq!(names(&a, &tensor_algebra_basis(&a, 3)), vec!["xxx"]);
        let a = TensorAlgebra::new(Prime::new(2).unwrap(), vec![("x".into(), 1), ("y".into(), 1)]).unwrap();
        assert_eq!(names(&a, &tensor_algebra_basis(&a, 2)), vec!["xx", "xy", "yx", "yy"]);
        let a = TensorAlgebra::new(Prime::new(2).unwrap(), vec![("x".into(), 1), ("y".into(), 2)]).unwrap();
        assert_eq!(names(&a, &tensor_algebra_basis(&a, 3)), vec!["xxx", "xy", "yx"]);
    }

    #[test]
    fn rejects_degree_zero() {
        assert!(matches!(
            TensorAlgebra::from_degrees(Prime::new(3).unwrap(), &[1, 0]),
            Err(Error::BadDegree { .. })
        ));
    }

    #[test]
    fn ranks_agree_with_enumeration() {
        let a = t(&[1, 2, 1]);
        let r = WordRanks::new(&a, 7);
        for d in 0..=7 {
            let basis = tensor_algebra_basis(&a, d);
            assert_eq!(basis.len(), r.dim(d));
            for (i, w) in basis.iter().enumerate() {
                assert_eq!(r.rank(w), i);
            }
        }
    }

    #[test]
    fn empty_v() {
        let a = t(&[]);
        assert_eq!(a.dims(4), vec![1, 0, 0, 0, 0]);
    }
}
