//! Quotients of the dual Steenrod algebra by `(τ_n, τ_{n+1}, …, ξ_{n+1}, …)`
//! or by the conjugate ideal, and the three comparisons made with them.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{DualSteenrod, MilnorMonomial, QuotientSpec};
use crate::bar::{bar_tor, GradedAlgebra, MonomialAlgebra, PulledBackModule, TorTable};
use crate::error::{Error, Result};
use crate::fpgraded::linalg::axpy;
use crate::fpgraded::{
    Bidegree, EchelonBasis, Element, FreeGCAlgebra, GeneratorSpec, PoincareTable, SparseVec,
};

#[derive(Debug, Clone, Serialize)]
pub struct QuotientBasis {
    pub spec: QuotientSpec,
    pub dims: PoincareTable,
    /// Standard monomials spanning the quotient, by degree.
    pub basis: BTreeMap<i64, Vec<MilnorMonomial>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IsoRow {
    pub degree: i64,
    pub ambient_dim: usize,
    pub subring_dim: usize,
    pub quotient_dim: usize,
    /// Rank of the ideal together with the subring inside the ambient degree.
    pub combined_rank: usize,
}

impl IsoRow {
    pub fn passed(&self) -> bool {
        self.subring_dim == self.quotient_dim && self.combined_rank == self.ambient_dim
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub spec: QuotientSpec,
    pub d_max: i64,
    pub rows: Vec<IsoRow>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(IsoRow::passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FreenessRow {
    pub degree: i64,
    pub ambient_dim: usize,
    pub tensor_dim: usize,
    pub rank: usize,
}

impl FreenessRow {
    pub fn passed(&self) -> bool {
        self.tensor_dim == self.ambient_dim && self.rank == self.ambient_dim
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    pub spec: QuotientSpec,
    pub d_max: i64,
    pub rows: Vec<FreenessRow>,
}

impl FreenessReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(FreenessRow::passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KunnethReport {
    pub spec: QuotientSpec,
    pub d_max: i64,
    pub s_max: usize,
    pub tor: TorTable,
    pub quotient_series: Vec<u64>,
}

impl KunnethReport {
    pub fn higher_tor_vanishes(&self) -> bool {
        self.tor.dims.keys().all(|&(s, _)| s == 0)
    }

    pub fn tor0_matches_quotient(&self) -> bool {
        self.tor.series(0) == self.quotient_series
    }

    pub fn passed(&self) -> bool {
        self.higher_tor_vanishes() && self.tor0_matches_quotient()
    }
}

struct SplitGenerator {
    spec: GeneratorSpec,
    image: Element,
}

fn check_range(a: &DualSteenrod, d_max: i64) -> Result<()> {
    if d_max < 0 {
        return Err(Error::IndexOutOfRange(format!("d_max = {d_max} must be >= 0")));
    }
    if d_max > a.cap() {
        return Err(Error::DegreeCapExceeded {
            degree: d_max,
            cap: a.cap(),
        });
    }
    Ok(())
}

impl DualSteenrod {
    fn coords(&self, e: &Element, d: i64) -> SparseVec {
        self.monomial_algebra().coordinates(e, d as usize)
    }

    /// Echelon basis of the ideal in degree `d`, spanned by `g · m` for ideal
    /// generators `g` and monomials `m` of complementary degree.
    fn ideal_span(&self, gens: &[(i64, Element)], d: i64) -> EchelonBasis {
        let ma = self.monomial_algebra();
        let mut ech = EchelonBasis::new(self.prime());
        for (e, g) in gens {
            if *e > d {
                continue;
            }
            let gv = self.coords(g, *e);
            let rest = (d - e) as usize;
            for m in 0..ma.dim(rest) {
                let mut v = Vec::new();
                for &(i, c) in &gv {
                    v = axpy(self.prime(), &v, c, &ma.multiply(*e as usize, i, rest, m));
                }
                ech.insert(v);
                if ech.rank() == ma.dim(d as usize) {
                    return ech;
                }
            }
        }
        ech
    }

    pub fn quotient_basis(&self, q: QuotientSpec, d_max: i64) -> Result<QuotientBasis> {
        check_range(self, d_max)?;
        let gens = self.ideal_generators(q);
        let mut dims = BTreeMap::new();
        let mut basis = BTreeMap::new();
        for d in 0..=d_max {
            let ech = self.ideal_span(&gens, d);
            let std: Vec<MilnorMonomial> = self
                .basis_monomials(d)?
                .iter()
                .enumerate()
                .filter(|(i, _)| !ech.is_pivot(*i))
                .map(|(_, m)| self.to_milnor(m))
                .collect();
            dims.insert(Bidegree::degree(d), std.len() as u64);
            basis.insert(d, std);
        }
        Ok(QuotientBasis {
            spec: q,
            dims: PoincareTable::new(Bidegree::degree(d_max), dims),
            basis,
        })
    }

    /// Milnor monomials in `ξ_1..ξ_n`, `τ_0..τ_{n-1}` map isomorphically onto
    /// the quotient in each degree.
    pub fn subring_iso_check(&self, q: QuotientSpec, d_max: i64) -> Result<IsoReport> {
        check_range(self, d_max)?;
        let gens = self.ideal_generators(q);
        let n = q.n;
        let mut rows = Vec::new();
        for d in 0..=d_max {
            let basis = self.basis_monomials(d)?;
            let mut ech = self.ideal_span(&gens, d);
            let quotient_dim = basis.len() - ech.rank();
            let mut subring_dim = 0;
            for (i, m) in basis.iter().enumerate() {
                let mm = self.to_milnor(m);
                let inside = mm.tau_set.iter().all(|&k| k < n) && mm.xi_exp.keys().all(|&k| k <= n);
                if inside {
                    subring_dim += 1;
                    ech.insert(vec![(i, 1)]);
                }
            }
            rows.push(IsoRow {
                degree: d,
                ambient_dim: basis.len(),
                subring_dim,
                quotient_dim,
                combined_rank: ech.rank(),
            });
        }
        Ok(IsoReport {
            spec: q,
            d_max,
            rows,
        })
    }

    /// Generators of the complement (`τ_k`, k < n and `ξ_k`, k <= n) and of
    /// the base, each with its image in the ambient algebra.
    fn generator_split(&self, q: QuotientSpec) -> (Vec<SplitGenerator>, Vec<SplitGenerator>) {
        let (ntau, nxi) = self.generator_counts();
        let n = q.n as usize;
        let prefix = if q.conjugated { "χ" } else { "" };
        let mut complement = Vec::new();
        let mut base = Vec::new();
        for k in 0..ntau {
            let image = if q.conjugated { self.tau_bar(k) } else { self.tau(k) };
            let g = SplitGenerator {
                spec: GeneratorSpec::exterior(
                    format!("{prefix}τ{k}"),
                    Bidegree::degree(self.tau_degree(k).expect("below cap")),
                ),
                image: image.expect("below cap"),
            };
            if k < n {
                complement.push(g);
            } else {
                base.push(g);
            }
        }
        for k in 1..=nxi {
            let image = if q.conjugated { self.xi_bar(k) } else { self.xi(k) };
            let g = SplitGenerator {
                spec: GeneratorSpec::polynomial(
                    format!("{prefix}ξ{k}"),
                    Bidegree::degree(self.xi_degree(k).expect("below cap")),
                ),
                image: image.expect("below cap"),
            };
            if k <= n {
                complement.push(g);
            } else {
                base.push(g);
            }
        }
        (complement, base)
    }

    fn abstract_algebra(&self, gens: &[SplitGenerator], d_max: i64) -> Result<MonomialAlgebra> {
        let specs = gens.iter().map(|g| g.spec.clone()).collect();
        Ok(MonomialAlgebra::new(
            FreeGCAlgebra::new(self.prime(), specs)?,
            d_max as usize,
        ))
    }

    /// The multiplication map from (complement ⊗ base) to the ambient algebra
    /// is an isomorphism in each degree `<= d_max`.
    pub fn freeness_check(&self, q: QuotientSpec, d_max: i64) -> Result<FreenessReport> {
        check_range(self, d_max)?;
        let (cg, bg) = self.generator_split(q);
        let c_alg = self.abstract_algebra(&cg, d_max)?;
        let b_alg = self.abstract_algebra(&bg, d_max)?;
        let c_img: Vec<Element> = cg.iter().map(|g| g.image.clone()).collect();
        let b_img: Vec<Element> = bg.iter().map(|g| g.image.clone()).collect();
        let ma = self.monomial_algebra();
        let c_map = PulledBackModule::new(ma, &c_alg, &c_img);
        let b_map = PulledBackModule::new(ma, &b_alg, &b_img);
        let p = self.prime();
        let mut rows = Vec::new();
        for d in 0..=d_max as usize {
            let ambient_dim = ma.dim(d);
            let mut ech = EchelonBasis::new(p);
            let mut tensor_dim = 0;
            for dc in 0..=d {
                let db = d - dc;
                for c in 0..c_alg.dim(dc) {
                    let cv = c_map.image(dc, c);
                    for b in 0..b_alg.dim(db) {
                        tensor_dim += 1;
                        let bv = b_map.image(db, b);
                        let mut v = Vec::new();
                        for &(i, x) in cv {
                            for &(j, y) in bv {
                                v = axpy(p, &v, p.mul(x, y), &ma.multiply(dc, i, db, j));
                            }
                        }
                        ech.insert(v);
                    }
                }
            }
            rows.push(FreenessRow {
                degree: d as i64,
                ambient_dim,
                tensor_dim,
                rank: ech.rank(),
            });
        }
        Ok(FreenessReport {
            spec: q,
            d_max,
            rows,
        })
    }

    /// `Tor^B(A, F_p)` through the bar complex, where `B` is the free algebra
    /// on the killed generators acting on `A` through inclusion.
    pub fn kunneth_e2(&self, q: QuotientSpec, d_max: i64, s_max: usize) -> Result<KunnethReport> {
        check_range(self, d_max)?;
        let (_, bg) = self.generator_split(q);
        let b_alg = self.abstract_algebra(&bg, d_max)?;
        let b_img: Vec<Element> = bg.iter().map(|g| g.image.clone()).collect();
        let module = PulledBackModule::new(self.monomial_algebra(), &b_alg, &b_img);
        let tor = bar_tor(&b_alg, &module, s_max, d_max as usize);
        let quotient = self.quotient_basis(q, d_max)?;
        let quotient_series = (0..=d_max)
            .map(|d| quotient.dims.dim(Bidegree::degree(d)).unwrap_or(0))
            .collect();
        Ok(KunnethReport {
            spec: q,
            d_max,
            s_max,
            tor,
            quotient_series,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgraded::Prime;

    fn a(p: u64, cap: i64) -> DualSteenrod {
        DualSteenrod::new(Prime::new(p).unwrap(), cap).unwrap()
    }

    fn spec(n: u32, conjugated: bool) -> QuotientSpec {
        QuotientSpec { n, conjugated }
    }

    #[test]
    fn quotient_examples() {
        let a = a(3, 20);
        let q = a.quotient_basis(spec(0, false), 20).unwrap();
        assert_eq!(q.dims.dim(Bidegree::ZERO), Some(1));
        for d in 1..=20 {
            assert_eq!(q.dims.dim(Bidegree::degree(d)), Some(0));
        }
        // F_3[ξ_1] ⊗ Λ[τ_0]
        let q = a.quotient_basis(spec(1, true), 20).unwrap();
        for d in 0..=20 {
            let expected = u64::from(d % 4 == 0 || d % 4 == 1);
            assert_eq!(q.dims.dim(Bidegree::degree(d)), Some(expected), "degree {d}");
        }
        assert_eq!(q.basis[&5].len(), 1);
    }

    #[test]
    fn iso_and_freeness_small() {
        let a = a(3, 20);
        for n in 0..=2 {
            for conj in [false, true] {
                assert!(a.subring_iso_check(spec(n, conj), 20).unwrap().passed());
                assert!(a.freeness_check(spec(n, conj), 20).unwrap().passed());
            }
        }
    }

    #[test]
    fn kunneth_small() {
        let a = a(3, 12);
        let r = a.kunneth_e2(spec(1, true), 12, 2).unwrap();
        assert!(r.higher_tor_vanishes());
        assert!(r.tor0_matches_quotient());
    }

    #[test]
    fn range_errors() {
        let a = a(3, 10);
        assert!(matches!(
            a.quotient_basis(spec(1, false), 11),
            Err(Error::DegreeCapExceeded { .. })
        ));
    }
}
