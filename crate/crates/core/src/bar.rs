//! Normalized bar complexes `B(M, A, F_p)` for a connected graded algebra
//! `A` and a right `A`-module `M`, truncated by internal degree.
//!
//! `B_s = M ⊗ Ā^{⊗s}` with
//! `d(m[a_1|…|a_s]) = m a_1[a_2|…|a_s] + Σ_{i=1}^{s-1} (-1)^i m[…|a_i a_{i+1}|…]`.
//! The last face multiplies into `F_p` through the augmentation and vanishes
//! on `Ā`. Its homology is `Tor^A_s(M, F_p)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::Serialize;

use crate::fpgraded::linalg::axpy;
use crate::fpgraded::{Bidegree, Element, FreeGCAlgebra, Monomial, Prime, SparseMatrix, SparseVec};

/// A connected graded algebra with a chosen basis in each degree.
/// Degree zero is spanned by the unit.
pub trait GradedAlgebra {
    fn prime(&self) -> Prime;
    fn dim(&self, degree: usize) -> usize;
    /// Product of basis elements, in the basis of degree `da + db`.
    fn multiply(&self, da: usize, a: usize, db: usize, b: usize) -> SparseVec;
}

/// A right module over `A`, bounded below in degree zero.
pub trait RightModule<A: GradedAlgebra + ?Sized> {
    fn dim(&self, degree: usize) -> usize;
    /// `m · a` for basis elements, in the basis of degree `dm + da`.
    fn act(&self, dm: usize, m: usize, da: usize, a: usize) -> SparseVec;
}

/// `F_p` concentrated in degree zero; positive degrees act by zero.
#[derive(Debug, Clone, Copy, Default)]
pub struct TrivialModule;

impl<A: GradedAlgebra + ?Sized> RightModule<A> for TrivialModule {
    fn dim(&self, degree: usize) -> usize {
        usize::from(degree == 0)
    }

    fn act(&self, _dm: usize, _m: usize, _da: usize, _a: usize) -> SparseVec {
        Vec::new()
    }
}

/// An algebra acting on itself from the right.
pub struct RegularModule<'a, A: ?Sized>(pub &'a A);

impl<'a, A: GradedAlgebra + ?Sized> RightModule<A> for RegularModule<'a, A> {
    fn dim(&self, degree: usize) -> usize {
        self.0.dim(degree)
    }

    fn act(&self, dm: usize, m: usize, da: usize, a: usize) -> SparseVec {
        self.0.multiply(dm, m, da, a)
    }
}

/// A single-graded [`FreeGCAlgebra`] (all weights zero) with its monomial
/// bases materialized up to a degree cap.
#[derive(Debug, Clone)]
pub struct MonomialAlgebra {
    pub algebra: Arc<FreeGCAlgebra>,
    pub bases: Vec<Vec<Monomial>>,
    index: HashMap<Monomial, (usize, usize)>,
}

impl MonomialAlgebra {
    pub fn new(algebra: Arc<FreeGCAlgebra>, max_degree: usize) -> Self {
        let bases: Vec<Vec<Monomial>> = (0..=max_degree)
            .map(|d| algebra.basis_in_bidegree(Bidegree::degree(d as i64)))
            .collect();
        let mut index = HashMap::new();
        for (d, basis) in bases.iter().enumerate() {
            for (i, m) in basis.iter().enumerate() {
                index.insert(m.clone(), (d, i));
            }
        }
        MonomialAlgebra {
            algebra,
            bases,
            index,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.bases.len() - 1
    }

    /// Degree and position of a monomial, if inside the cap.
    pub fn locate(&self, m: &Monomial) -> Option<(usize, usize)> {
        self.index.get(m).copied()
    }

    /// Coordinates of a homogeneous element of degree `d`.
    pub fn coordinates(&self, e: &Element, d: usize) -> SparseVec {
        let mut v: Vec<(usize, u32)> = e
            .terms()
            .iter()
            .map(|(m, &c)| {
                let (dm, i) = self.locate(m).expect("monomial inside the degree cap");
                assert_eq!(dm, d, "element is not homogeneous of degree {d}");
                (i, c)
            })
            .collect();
        v.sort_unstable_by_key(|e| e.0);
        v
    }

    pub fn element(&self, d: usize, v: &[(usize, u32)]) -> Element {
        let mut e = Element::zero(&self.algebra);
        for &(i, c) in v {
            e.add_term(self.bases[d][i].clone(), c);
        }
        e
    }
}

impl GradedAlgebra for MonomialAlgebra {
    fn prime(&self) -> Prime {
        self.algebra.prime()
    }

    fn dim(&self, degree: usize) -> usize {
        self.bases.get(degree).map_or(0, Vec::len)
    }

    fn multiply(&self, da: usize, a: usize, db: usize, b: usize) -> SparseVec {
        let d = da + db;
        if d > self.max_degree() {
            return Vec::new();
        }
        let p = self.prime();
        match self
            .algebra
            .multiply_monomials(&self.bases[da][a], &self.bases[db][b])
        {
            Some((m, neg)) => {
                let (_, i) = self.locate(&m).expect("product inside cap");
                vec![(i, p.sign(neg))]
            }
            None => Vec::new(),
        }
    }
}

/// A graded-commutative algebra `target` regarded as a right module over
/// `base` through the ring map sending the base generators to `images`.
pub struct PulledBackModule<'a> {
    pub target: &'a MonomialAlgebra,
    pub base: &'a MonomialAlgebra,
    // image of every base basis element, by degree
    images: Vec<Vec<SparseVec>>,
}

impl<'a> PulledBackModule<'a> {
    pub fn new(target: &'a MonomialAlgebra, base: &'a MonomialAlgebra, generator_images: &[Element]) -> Self {
        assert_eq!(generator_images.len(), base.algebra.ngens());
        let mut images = Vec::with_capacity(base.bases.len());
        for (d, basis) in base.bases.iter().enumerate() {
            let row = basis
                .iter()
                .map(|m| {
                    let mut acc = Element::one(&target.algebra);
                    for (g, &e) in m.exponents().iter().enumerate() {
                        for _ in 0..e {
                            acc = acc.multiply(&generator_images[g]).expect("same ambient");
                        }
                    }
                    if d > target.max_degree() {
                        Vec::new()
                    } else {
                        target.coordinates(&acc, d)
                    }
                })
                .collect();
            images.push(row);
        }
        PulledBackModule {
            target,
            base,
            images,
        }
    }

    pub fn image(&self, d: usize, b: usize) -> &SparseVec {
        &self.images[d][b]
    }
}

impl<'a> RightModule<MonomialAlgebra> for PulledBackModule<'a> {
    fn dim(&self, degree: usize) -> usize {
        self.target.dim(degree)
    }

    fn act(&self, dm: usize, m: usize, da: usize, a: usize) -> SparseVec {
        let p = self.target.prime();
        let mut acc = Vec::new();
        for &(i, c) in &self.images[da][a] {
            let prod = self.target.multiply(dm, m, da, i);
            acc = axpy(p, &acc, c, &prod);
        }
        acc
    }
}

/// One homogeneous chunk `B_{s,d}` of the bar complex.
#[derive(Debug, Clone, Default)]
pub struct BarChunk {
    /// `[dm, m, d1, a1, …, ds, as]` for each basis element.
    pub keys: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl BarChunk {
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    fn push(&mut self, key: Vec<u32>) {
        self.index.insert(key.clone(), self.keys.len());
        self.keys.push(key);
    }

    pub fn position(&self, key: &[u32]) -> Option<usize> {
        self.index.get(key).copied()
    }
}

pub struct BarComplex<'a, A: GradedAlgebra + ?Sized, M: RightModule<A> + ?Sized> {
    pub algebra: &'a A,
    pub module: &'a M,
}

impl<'a, A: GradedAlgebra + ?Sized, M: RightModule<A> + ?Sized> BarComplex<'a, A, M> {
    pub fn new(algebra: &'a A, module: &'a M) -> Self {
        BarComplex { algebra, module }
    }

    pub fn chunk(&self, s: usize, d: usize) -> BarChunk {
        let mut chunk = BarChunk::default();
        let mut key = Vec::with_capacity(2 + 2 * s);
        for dm in 0..=d {
            for m in 0..self.module.dim(dm) {
                key.clear();
                key.extend([dm as u32, m as u32]);
                self.fill(s, d - dm, &mut key, &mut chunk);
            }
        }
        chunk
    }

    fn fill(&self, s: usize, rem: usize, key: &mut Vec<u32>, chunk: &mut BarChunk) {
        if s == 0 {
            if rem == 0 {
                chunk.push(key.clone());
            }
            return;
        }
        // each remaining bar needs degree >= 1
        if rem < s {
            return;
        }
        for da in 1..=rem - (s - 1) {
            for a in 0..self.algebra.dim(da) {
                key.extend([da as u32, a as u32]);
                self.fill(s - 1, rem - da, key, chunk);
                key.truncate(key.len() - 2);
            }
        }
    }

    /// The differential `B_{s,d} → B_{s-1,d}` for `s >= 1`.
    pub fn differential(&self, source: &BarChunk, target: &BarChunk) -> SparseMatrix {
        let p = self.algebra.prime();
        let mut cols = Vec::with_capacity(source.len());
        let mut out_key = Vec::new();
        for key in &source.keys {
            let s = (key.len() - 2) / 2;
            let mut col: SparseVec = Vec::new();
            let (dm, m) = (key[0] as usize, key[1] as usize);
            // face 0: m * a1
            let (d1, a1) = (key[2] as usize, key[3] as usize);
            for (i, c) in self.module.act(dm, m, d1, a1) {
                out_key.clear();
                out_key.extend([(dm + d1) as u32, i as u32]);
                out_key.extend_from_slice(&key[4..]);
                let row = target.position(&out_key).expect("face lands in target chunk");
                col = axpy(p, &col, 1, &[(row, c)]);
            }
            // inner faces
            for i in 1..s {
                let lo = 2 + 2 * (i - 1);
                let (da, a) = (key[lo] as usize, key[lo + 1] as usize);
                let (db, b) = (key[lo + 2] as usize, key[lo + 3] as usize);
                let prod = self.algebra.multiply(da, a, db, b);
                let sign = p.sign(i % 2 == 1);
                for (j, c) in prod {
                    out_key.clear();
                    out_key.extend_from_slice(&key[..lo]);
                    out_key.extend([(da + db) as u32, j as u32]);
                    out_key.extend_from_slice(&key[lo + 4..]);
                    let row = target.position(&out_key).expect("face lands in target chunk");
                    col = axpy(p, &col, 1, &[(row, p.mul(sign, c))]);
                }
            }
            cols.push(col);
        }
        SparseMatrix::from_sparse(p, target.len(), cols)
    }
}

/// Dimensions of `Tor_s` in internal degree `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct TorTable {
    pub s_max: usize,
    pub d_max: usize,
    /// `(s, d) -> dim`, zeros omitted.
    pub dims: BTreeMap<(usize, usize), u64>,
}

impl TorTable {
    pub fn dim(&self, s: usize, d: usize) -> u64 {
        self.dims.get(&(s, d)).copied().unwrap_or(0)
    }

    /// `Tor_s` dimensions for `d = 0..=d_max`.
    pub fn series(&self, s: usize) -> Vec<u64> {
        (0..=self.d_max).map(|d| self.dim(s, d)).collect()
    }

    pub fn rows(&self) -> Vec<TorRow> {
        self.dims
            .iter()
            .map(|(&(s, d), &dim)| TorRow { s, d, dim })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TorRow {
    pub s: usize,
    pub d: usize,
    pub dim: u64,
}

/// `Tor^A_s(M, F_p)` for `s <= s_max`, `d <= d_max`.
pub fn bar_tor<A, M>(algebra: &A, module: &M, s_max: usize, d_max: usize) -> TorTable
where
    A: GradedAlgebra + ?Sized,
    M: RightModule<A> + ?Sized,
{
    let bar = BarComplex::new(algebra, module);
    let mut table = TorTable {
        s_max,
        d_max,
        dims: BTreeMap::new(),
    };
    for d in 0..=d_max {
        let chunks: Vec<BarChunk> = (0..=s_max + 1).map(|s| bar.chunk(s, d)).collect();
        // ranks[s] = rank of d_s : B_s -> B_{s-1}
        let mut ranks = vec![0usize; s_max + 2];
        for s in 1..=s_max + 1 {
            if chunks[s].is_empty() || chunks[s - 1].is_empty() {
                continue;
            }
            ranks[s] = bar.differential(&chunks[s], &chunks[s - 1]).rank();
        }
        for s in 0..=s_max {
            let dim = chunks[s].len() - ranks[s] - ranks[s + 1];
            if dim > 0 {
                table.dims.insert((s, d), dim as u64);
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgraded::GeneratorSpec;

    fn exterior_one(p: u64, deg: i64, cap: usize) -> MonomialAlgebra {
        let alg = FreeGCAlgebra::new(
            Prime::new(p).unwrap(),
            vec![GeneratorSpec::exterior("x", Bidegree::degree(deg))],
        )
        .unwrap();
        MonomialAlgebra::new(alg, cap)
    }

    #[test]
    fn free_module_has_no_higher_tor() {
        let a = exterior_one(3, 1, 6);
        let t = bar_tor(&a, &RegularModule(&a), 3, 6);
        assert_eq!(t.series(0), vec![1, 0, 0, 0, 0, 0, 0]);
        for s in 1..=3 {
            assert!(t.series(s).iter().all(|&d| d == 0));
        }
    }

    #[test]
    fn exterior_on_one_odd_class() {
        let a = exterior_one(3, 1, 6);
        let t = bar_tor(&a, &TrivialModule, 4, 6);
        for s in 0..=4 {
            for d in 0..=6 {
                assert_eq!(t.dim(s, d), u64::from(d == s), "Tor_{s},{d}");
            }
        }
    }

    #[test]
    fn pulled_back_module_detects_non_free_action() {
        let poly = |name: &str| {
            FreeGCAlgebra::new(
                Prime::new(3).unwrap(),
                vec![GeneratorSpec::polynomial(name, Bidegree::degree(2))],
            )
            .unwrap()
        };
        let base = MonomialAlgebra::new(poly("y"), 8);
        let target = MonomialAlgebra::new(poly("x"), 8);
        let x = Element::generator(&target.algebra, 0);
        let free = bar_tor(&base, &PulledBackModule::new(&target, &base, &[x]), 2, 8);
        assert_eq!(free.rows(), vec![TorRow { s: 0, d: 0, dim: 1 }]);
        // y acting by zero: Tor_1 = F_3[x] shifted by |y|
        let zero = Element::zero(&target.algebra);
        let trivial = bar_tor(&base, &PulledBackModule::new(&target, &base, &[zero]), 2, 8);
        assert_eq!(trivial.series(1), vec![0, 0, 1, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn bar_differential_squares_to_zero() {
        let alg = FreeGCAlgebra::new(
            Prime::new(5).unwrap(),
            vec![
                GeneratorSpec::exterior("a", Bidegree::degree(1)),
                GeneratorSpec::polynomial("b", Bidegree::degree(2)),
                GeneratorSpec::exterior("c", Bidegree::degree(3)),
            ],
        )
        .unwrap();
        let a = MonomialAlgebra::new(alg, 8);
        let module = RegularModule(&a);
        let bar = BarComplex::new(&a, &module);
        for d in 0..=8 {
            for s in 2..=4 {
                let c0 = bar.chunk(s - 2, d);
                let c1 = bar.chunk(s - 1, d);
                let c2 = bar.chunk(s, d);
                let dd = bar
                    .differential(&c1, &c0)
                    .compose(&bar.differential(&c2, &c1))
                    .unwrap();
                assert!(dd.is_zero(), "d^2 != 0 at s={s}, d={d}");
            }
        }
    }
}
