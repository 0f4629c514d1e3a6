use serde::Serialize;

use super::module::{ModulePresentation, PresentedModule};
use super::tensor::{tensor_algebra_basis, TensorAlgebra, TruncatedTensorAlgebra};
use crate::bar::{bar_tor, TorTable, TrivialModule};
use crate::error::Result;
use crate::fpgraded::linalg::axpy;
use crate::fpgraded::{Prime, SparseMatrix, SparseVec};

/// `0 → T⊗V⊗N → T⊗N → N → 0` in one internal degree.
///
/// Rows of the middle term are ordered by the degree of the `T` factor, so
/// the leading entry of `d₁(t⊗v⊗n)` is always `tv⊗n`.
#[derive(Debug, Clone)]
pub struct KoszulDegree {
    pub degree: usize,
    pub d1: SparseMatrix,
    pub eps: SparseMatrix,
}

impl KoszulDegree {
    pub fn source_dim(&self) -> usize {
        self.d1.ncols()
    }

    pub fn middle_dim(&self) -> usize {
        self.d1.nrows
    }

    pub fn target_dim(&self) -> usize {
        self.eps.nrows
    }
}

#[derive(Debug, Clone)]
pub struct KoszulComplex {
    pub algebra: TensorAlgebra,
    pub module: PresentedModule,
    pub degrees: Vec<KoszulDegree>,
}

/// Assembles the complex in every degree `<= d_max` and asserts `ε ∘ d₁ = 0`.
pub fn build_koszul(t: &TensorAlgebra, n: &ModulePresentation, d_max: usize) -> Result<KoszulComplex> {
    let module = PresentedModule::build(t, n, d_max)?;
    let p = t.prime();
    let words: Vec<_> = (0..=d_max).map(|a| tensor_algebra_basis(t, a)).collect();
    let ranks = module.ranks();
    let mut degrees = Vec::with_capacity(d_max + 1);
    for d in 0..=d_max {
        // middle: T_a ⊗ N_{d-a}, blocks in increasing a
        let mut moff = vec![0usize; d + 2];
        for a in 0..=d {
            moff[a + 1] = moff[a] + ranks.dim(a) * module.dim(d - a);
        }
        let middle = |a: usize, t: usize, n: usize| moff[a] + t * module.dim(d - a) + n;

        let mut d1_cols = Vec::new();
        for (a, t_words) in words.iter().enumerate().take(d + 1) {
            for (ti, tw) in t_words.iter().enumerate() {
                for v in 0..t.ngens() {
                    let dv = t.degree_of(v);
                    if a + dv > d {
                        continue;
                    }
                    let b = d - a - dv;
                    let tv = {
                        let mut w = tw.clone();
                        w.push(v);
                        ranks.rank(&w)
                    };
                    for n in 0..module.dim(b) {
                        let mut col: SparseVec = Vec::new();
                        for (n2, c) in module.act(v, b, n).expect("inside cap") {
                            col.push((middle(a, ti, n2), p.neg(c)));
                        }
                        col = axpy(p, &col, 1, &[(middle(a + dv, tv, n), 1)]);
                        d1_cols.push(col);
                    }
                }
            }
        }
        let mut eps_cols = Vec::with_capacity(moff[d + 1]);
        for (a, t_words) in words.iter().enumerate().take(d + 1) {
            for tw in t_words {
                for n in 0..module.dim(d - a) {
                    eps_cols.push(module.act_word(tw, a, d - a, n).expect("inside cap"));
                }
            }
        }
        let d1 = SparseMatrix::from_sparse(p, moff[d + 1], d1_cols);
        let eps = SparseMatrix::from_sparse(p, module.dim(d), eps_cols);
        assert!(
            eps.compose(&d1).expect("composable").is_zero(),
            "ε ∘ d₁ != 0 in degree {d}"
        );
        degrees.push(KoszulDegree { degree: d, d1, eps });
    }
    Ok(KoszulComplex {
        algebra: t.clone(),
        module,
        degrees,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExactnessRow {
    pub degree: usize,
    pub source_dim: usize,
    pub middle_dim: usize,
    pub target_dim: usize,
    pub rank_d1: usize,
    pub rank_eps: usize,
}

impl ExactnessRow {
    pub fn d1_injective(&self) -> bool {
        self.rank_d1 == self.source_dim
    }

    /// `ker ε = im d₁`, given `ε ∘ d₁ = 0`.
    pub fn middle_exact(&self) -> bool {
        self.middle_dim - self.rank_eps == self.rank_d1
    }

    pub fn eps_surjective(&self) -> bool {
        self.rank_eps == self.target_dim
    }

    pub fn passed(&self) -> bool {
        self.d1_injective() && self.middle_exact() && self.eps_surjective()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub prime: Prime,
    pub d_max: usize,
    pub rows: Vec<ExactnessRow>,
}

impl ExactnessReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(ExactnessRow::passed)
    }

    pub fn failures(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| !r.passed()).map(|r| r.degree).collect()
    }
}

pub fn exactness_check(k: &KoszulComplex, d_max: usize) -> ExactnessReport {
    let rows = k
        .degrees
        .iter()
        .take(d_max + 1)
        .map(|deg| ExactnessRow {
            degree: deg.degree,
            source_dim: deg.source_dim(),
            middle_dim: deg.middle_dim(),
            target_dim: deg.target_dim(),
            rank_d1: deg.d1.rank(),
            rank_eps: deg.eps.rank(),
        })
        .collect();
    ExactnessReport {
        prime: k.algebra.prime(),
        d_max,
        rows,
    }
}

/// `Tor^{T(V)}_s(F_p, N)` from the resolution: the complex
/// `V ⊗ N → N`, `v ⊗ n ↦ v·n`, in degrees `<= d_max`.
pub fn koszul_tor(t: &TensorAlgebra, n: &ModulePresentation, d_max: usize) -> Result<TorTable> {
    let module = PresentedModule::build(t, n, d_max)?;
    let p = t.prime();
    let mut table = TorTable {
        s_max: 1,
        d_max,
        dims: Default::default(),
    };
    for d in 0..=d_max {
        let mut cols = Vec::new();
        for v in 0..t.ngens() {
            let dv = t.degree_of(v);
            if dv > d {
                continue;
            }
            for m in 0..module.dim(d - dv) {
                cols.push(module.act(v, d - dv, m).expect("inside cap"));
            }
        }
        let source = cols.len();
        let rank = SparseMatrix::from_sparse(p, module.dim(d), cols).rank();
        for (s, dim) in [(0, module.dim(d) - rank), (1, source - rank)] {
            if dim > 0 {
                table.dims.insert((s, d), dim as u64);
            }
        }
    }
    Ok(table)
}

/// `Tor^{T(V)}(F_p, F_p)` from the Koszul resolution.
pub fn tor_trivial(t: &TensorAlgebra, d_max: usize) -> TorTable {
    koszul_tor(t, &ModulePresentation::trivial(t), d_max).expect("trivial presentation is valid")
}

/// The same groups from the normalized bar complex, up to `s_max`.
pub fn tor_trivial_bar(t: &TensorAlgebra, d_max: usize, s_max: usize) -> TorTable {
    let a = TruncatedTensorAlgebra::new(t, d_max);
    bar_tor(&a, &TrivialModule, s_max, d_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::koszul::module::RelationTerm;

    fn t(degrees: &[u32]) -> TensorAlgebra {
        TensorAlgebra::from_degrees(Prime::new(3).unwrap(), degrees).unwrap()
    }

    #[test]
    fn one_variable_trivial() {
        let a = t(&[1]);
        let k = build_koszul(&a, &ModulePresentation::trivial(&a), 12).unwrap();
        let r = exactness_check(&k, 12);
        assert!(r.passed());
        // degree 1: 1⊗x⊗e ↦ x⊗e, and N_1 = 0
        assert_eq!((r.rows[1].source_dim, r.rows[1].middle_dim, r.rows[1].target_dim), (1, 1, 0));
        assert_eq!((r.rows[2].source_dim, r.rows[2].rank_d1), (1, 1));
        assert_eq!(r.rows[0].rank_eps, 1);
    }

    #[test]
    fn free_module_split_exact() {
        let a = t(&[1, 1]);
        let k = build_koszul(&a, &ModulePresentation::free(), 8).unwrap();
        let r = exactness_check(&k, 8);
        assert!(r.passed());
        for row in &r.rows {
            assert_eq!(row.middle_dim, row.source_dim + row.target_dim);
        }
    }

    #[test]
    fn zero_module() {
        let a = t(&[1, 2]);
        let k = build_koszul(&a, &ModulePresentation::zero(), 6).unwrap();
        for deg in &k.degrees {
            assert_eq!((deg.source_dim(), deg.middle_dim(), deg.target_dim()), (0, 0, 0));
        }
        assert!(exactness_check(&k, 6).passed());
    }

    #[test]
    fn quotient_by_left_ideal_is_exact() {
        let a = t(&[1, 1]);
        let pres = ModulePresentation::new(
            vec![("e".into(), 0)],
            vec![vec![RelationTerm {
                coeff: 1,
                word: vec![0],
                generator: 0,
            }]],
        );
        let k = build_koszul(&a, &pres, 10).unwrap();
        assert!(exactness_check(&k, 10).passed());
    }

    #[test]
    fn tor_examples() {
        let r = tor_trivial(&t(&[1]), 6);
        assert_eq!(r.series(0), vec![1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(r.series(1), vec![0, 1, 0, 0, 0, 0, 0]);
        let r = tor_trivial(&t(&[1, 2]), 6);
        assert_eq!(r.series(1), vec![0, 1, 1, 0, 0, 0, 0]);
        let r = tor_trivial(&t(&[]), 4);
        assert_eq!(r.rows().len(), 1);
        assert_eq!(r.dim(0, 0), 1);
    }

    #[test]
    fn bar_oracle_small() {
        let a = t(&[1, 2]);
        let bar = tor_trivial_bar(&a, 6, 3);
        let kos = tor_trivial(&a, 6);
        for s in 0..=1 {
            assert_eq!(bar.series(s), kos.series(s));
        }
        for s in 2..=3 {
            assert!(bar.series(s).iter().all(|&x| x == 0));
        }
    }
}
