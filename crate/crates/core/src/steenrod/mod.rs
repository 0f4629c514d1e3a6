//! The odd-primary dual Steenrod algebra `Λ[τ_0, τ_1, …] ⊗ F_p[ξ_1, ξ_2, …]`
//! in the Milnor basis, truncated at a degree cap.
//!
//! Generator degrees are not taken as input. They are produced by the
//! degree action of `Q_{1/2}` and `βQ_{1/2}` starting from `|τ_0| = 1`
//! (`τ_n ↦ τ_{n+1}`, `τ_n ↦ ξ_{n+1}`) and then checked against
//! `|τ_n| = 2p^n - 1`, `|ξ_n| = 2(p^n - 1)`.
//!
//! Conjugation is the antipode, determined on generators by
//! `Σ_{i=0}^n ξ_{n-i}^{p^i} χ(ξ_i) = 0` and
//! `τ_n + Σ_{i=0}^n ξ_{n-i}^{p^i} χ(τ_i) = 0`, and extended multiplicatively.

mod quotient;
mod steinberger;

pub use quotient::{
    FreenessReport, FreenessRow, IsoReport, IsoRow, KunnethReport, QuotientBasis,
};
pub use steinberger::{steinberger_consistency, SteinbergerReport, SteinbergerRow};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::bar::MonomialAlgebra;
use crate::dyer_lashof::{apply_op, OpSymbol};
use crate::error::{Error, Result};
use crate::fpgraded::{Bidegree, Element, FreeGCAlgebra, GeneratorSpec, Monomial, Prime};

/// `τ^E ξ^R`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MilnorMonomial {
    pub tau_set: BTreeSet<u32>,
    pub xi_exp: BTreeMap<u32, u32>,
}

impl MilnorMonomial {
    pub fn one() -> Self {
        MilnorMonomial {
            tau_set: BTreeSet::new(),
            xi_exp: BTreeMap::new(),
        }
    }

    pub fn degree(&self, p: Prime) -> i64 {
        let p = p.get() as i64;
        let tau: i64 = self.tau_set.iter().map(|&e| 2 * p.pow(e) - 1).sum();
        let xi: i64 = self
            .xi_exp
            .iter()
            .map(|(&n, &r)| r as i64 * 2 * (p.pow(n) - 1))
            .sum();
        tau + xi
    }
}

impl fmt::Display for MilnorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.tau_set.iter().map(|e| format!("τ{e}")).collect();
        for (n, r) in &self.xi_exp {
            if *r == 1 {
                parts.push(format!("ξ{n}"));
            } else {
                parts.push(format!("ξ{n}^{r}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Which quotient: kill `τ_k` (k >= n) and `ξ_k` (k > n), or their conjugates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuotientSpec {
    pub n: u32,
    pub conjugated: bool,
}

#[derive(Debug, Clone)]
pub struct DualSteenrod {
    prime: Prime,
    cap: i64,
    tau_degrees: Vec<i64>,
    // xi_degrees[k - 1] = |ξ_k|
    xi_degrees: Vec<i64>,
    algebra: MonomialAlgebra,
    conj_tau: Vec<Element>,
    conj_xi: Vec<Element>,
}

impl DualSteenrod {
    pub fn new(prime: Prime, cap: i64) -> Result<Self> {
        if !prime.is_odd() {
            return Err(Error::EvenPrime(prime.get()));
        }
        if cap < 0 {
            return Err(Error::IndexOutOfRange(format!("degree cap {cap} must be >= 0")));
        }
        let (tau_degrees, xi_degrees) = derive_generator_degrees(prime, cap)?;
        let mut gens = Vec::new();
        for (k, &d) in tau_degrees.iter().enumerate() {
            gens.push(GeneratorSpec::exterior(format!("τ{k}"), Bidegree::degree(d)));
        }
        for (k, &d) in xi_degrees.iter().enumerate() {
            gens.push(GeneratorSpec::polynomial(format!("ξ{}", k + 1), Bidegree::degree(d)));
        }
        let alg = FreeGCAlgebra::new(prime, gens)?;
        let mut a = DualSteenrod {
            prime,
            cap,
            tau_degrees,
            xi_degrees,
            algebra: MonomialAlgebra::new(alg, cap as usize),
            conj_tau: Vec::new(),
            conj_xi: Vec::new(),
        };
        a.compute_conjugates();
        Ok(a)
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn cap(&self) -> i64 {
        self.cap
    }

    pub fn algebra(&self) -> &Arc<FreeGCAlgebra> {
        &self.algebra.algebra
    }

    pub(crate) fn monomial_algebra(&self) -> &MonomialAlgebra {
        &self.algebra
    }

    /// Number of `τ` and `ξ` generators below the cap.
    pub fn generator_counts(&self) -> (usize, usize) {
        (self.tau_degrees.len(), self.xi_degrees.len())
    }

    pub fn tau_degree(&self, k: usize) -> Option<i64> {
        self.tau_degrees.get(k).copied()
    }

    pub fn xi_degree(&self, k: usize) -> Option<i64> {
        k.checked_sub(1).and_then(|i| self.xi_degrees.get(i).copied())
    }

    fn tau_index(&self, k: usize) -> usize {
        k
    }

    fn xi_index(&self, k: usize) -> usize {
        self.tau_degrees.len() + k - 1
    }

    pub fn tau(&self, k: usize) -> Option<Element> {
        (k < self.tau_degrees.len()).then(|| Element::generator(self.algebra(), self.tau_index(k)))
    }

    pub fn xi(&self, k: usize) -> Option<Element> {
        if k == 0 {
            return Some(Element::one(self.algebra()));
        }
        (k <= self.xi_degrees.len()).then(|| Element::generator(self.algebra(), self.xi_index(k)))
    }

    pub fn tau_bar(&self, k: usize) -> Option<Element> {
        self.conj_tau.get(k).cloned()
    }

    /// `χ(ξ_k)`, with `χ(ξ_0) = 1`.
    pub fn xi_bar(&self, k: usize) -> Option<Element> {
        self.conj_xi.get(k).cloned()
    }

    fn compute_conjugates(&mut self) {
        let p = self.prime;
        let one = Element::one(self.algebra());
        let mut conj_xi = vec![one];
        for n in 1..=self.xi_degrees.len() {
            // χ(ξ_n) = -Σ_{i<n} ξ_{n-i}^{p^i} χ(ξ_i)
            let mut acc = Element::zero(self.algebra());
            for (i, cx) in conj_xi.iter().enumerate() {
                let xi = self.xi(n - i).expect("index below n");
                let term = xi.pow(p.get().pow(i as u32) as u64).multiply(cx).expect("same ambient");
                acc = acc.add(&term).expect("same ambient");
            }
            conj_xi.push(acc.scale(-1));
        }
        let mut conj_tau: Vec<Element> = Vec::new();
        for n in 0..self.tau_degrees.len() {
            // χ(τ_n) = -τ_n - Σ_{i<n} ξ_{n-i}^{p^i} χ(τ_i)
            let mut acc = self.tau(n).expect("in range");
            for (i, ct) in conj_tau.iter().enumerate() {
                let xi = self.xi(n - i).expect("xi below tau degree");
                let term = xi.pow(p.get().pow(i as u32) as u64).multiply(ct).expect("same ambient");
                acc = acc.add(&term).expect("same ambient");
            }
            conj_tau.push(acc.scale(-1));
        }
        self.conj_tau = conj_tau;
        self.conj_xi = conj_xi;
    }

    pub fn to_milnor(&self, m: &Monomial) -> MilnorMonomial {
        let ntau = self.tau_degrees.len();
        let e = m.exponents();
        MilnorMonomial {
            tau_set: (0..ntau).filter(|&k| e[k] == 1).map(|k| k as u32).collect(),
            xi_exp: (0..self.xi_degrees.len())
                .filter(|&k| e[ntau + k] > 0)
                .map(|k| ((k + 1) as u32, e[ntau + k]))
                .collect(),
        }
    }

    pub fn from_milnor(&self, m: &MilnorMonomial) -> Result<Monomial> {
        let d = m.degree(self.prime);
        self.check_cap(d)?;
        let mut e = vec![0u32; self.algebra().ngens()];
        for &k in &m.tau_set {
            e[self.tau_index(k as usize)] = 1;
        }
        for (&k, &r) in &m.xi_exp {
            e[self.xi_index(k as usize)] = r;
        }
        Ok(Monomial(e))
    }

    fn check_cap(&self, d: i64) -> Result<()> {
        if d > self.cap {
            Err(Error::DegreeCapExceeded {
                degree: d,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    pub fn basis_monomials(&self, d: i64) -> Result<&[Monomial]> {
        self.check_cap(d)?;
        if d < 0 {
            return Ok(&[]);
        }
        Ok(&self.algebra.bases[d as usize])
    }

    pub fn basis_in_degree(&self, d: i64) -> Result<Vec<MilnorMonomial>> {
        Ok(self.basis_monomials(d)?.iter().map(|m| self.to_milnor(m)).collect())
    }

    pub fn element_from_milnor(&self, m: &MilnorMonomial) -> Result<Element> {
        Ok(Element::monomial(self.algebra(), self.from_milnor(m)?, 1))
    }

    /// The antipode. The element must lie in degrees `<= cap`.
    pub fn conjugate(&self, x: &Element) -> Result<Element> {
        if !Arc::ptr_eq(x.ambient(), self.algebra()) && **x.ambient() != **self.algebra() {
            return Err(Error::AmbientMismatch);
        }
        let mut out = Element::zero(self.algebra());
        for (m, &c) in x.terms() {
            let d = self.algebra().monomial_bidegree(m).t;
            self.check_cap(d)?;
            out = out
                .add(&self.conjugate_monomial(m).scale(c as i64))
                .expect("same ambient");
        }
        Ok(out)
    }

    fn conjugate_monomial(&self, m: &Monomial) -> Element {
        let ntau = self.tau_degrees.len();
        let mut acc = Element::one(self.algebra());
        for (g, &e) in m.exponents().iter().enumerate() {
            let img = if g < ntau {
                &self.conj_tau[g]
            } else {
                &self.conj_xi[g - ntau + 1]
            };
            for _ in 0..e {
                acc = acc.multiply(img).expect("same ambient");
            }
        }
        acc
    }

    /// Generators of the ideal killed by the quotient, lowest degree first
    /// within each kind: `τ_k` (k >= n) then `ξ_k` (k > n).
    pub fn ideal_generators(&self, q: QuotientSpec) -> Vec<(i64, Element)> {
        let n = q.n as usize;
        let mut out = Vec::new();
        for k in n..self.tau_degrees.len() {
            let e = if q.conjugated {
                self.conj_tau[k].clone()
            } else {
                self.tau(k).expect("in range")
            };
            out.push((self.tau_degrees[k], e));
        }
        for k in n + 1..=self.xi_degrees.len() {
            let e = if q.conjugated {
                self.conj_xi[k].clone()
            } else {
                self.xi(k).expect("in range")
            };
            out.push((self.xi_degrees[k - 1], e));
        }
        out
    }
}

/// `(|τ_0|, |τ_1|, …)` and `(|ξ_1|, |ξ_2|, …)` up to `cap`, produced by the
/// Dyer–Lashof degree rules.
pub fn derive_generator_degrees(p: Prime, cap: i64) -> Result<(Vec<i64>, Vec<i64>)> {
    let pp = p.get() as i64;
    let mut taus = Vec::new();
    let mut xis = Vec::new();
    let mut tau = 1i64;
    let mut n = 0u32;
    loop {
        assert_eq!(tau, 2 * pp.pow(n) - 1, "|τ_{n}| from Q_(1/2) iteration");
        if tau <= cap {
            taus.push(tau);
        }
        let (next_tau, _) = apply_op(p, OpSymbol::HALF, (tau, 1))?;
        let (next_xi, _) = apply_op(p, OpSymbol::BETA_HALF, (tau, 1))?;
        assert_eq!(next_xi, 2 * (pp.pow(n + 1) - 1), "|ξ_{}| from βQ_(1/2)", n + 1);
        if next_xi > cap {
            break;
        }
        xis.push(next_xi);
        tau = next_tau;
        n += 1;
    }
    Ok((taus, xis))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3(cap: i64) -> DualSteenrod {
        DualSteenrod::new(Prime::new(3).unwrap(), cap).unwrap()
    }

    #[test]
    fn rejects_p_two() {
        assert!(matches!(
            DualSteenrod::new(Prime::new(2).unwrap(), 10),
            Err(Error::EvenPrime(2))
        ));
    }

    #[test]
    fn generator_degrees() {
        let (t, x) = derive_generator_degrees(Prime::new(3).unwrap(), 60).unwrap();
        assert_eq!(t, vec![1, 5, 17, 53]);
        assert_eq!(x, vec![4, 16, 52]);
        let (t, x) = derive_generator_degrees(Prime::new(5).unwrap(), 50).unwrap();
        assert_eq!(t, vec![1, 9, 49]);
        assert_eq!(x, vec![8, 48]);
    }

    #[test]
    fn basis_examples() {
        let a = a3(20);
        let show = |d| -> Vec<String> {
            a.basis_in_degree(d).unwrap().iter().map(|m| m.to_string()).collect()
        };
        assert_eq!(show(0), vec!["1"]);
        assert_eq!(show(1), vec!["τ0"]);
        assert_eq!(show(5), vec!["τ1", "τ0 ξ1"]);
        for m in a.basis_in_degree(17).unwrap() {
            assert_eq!(m.degree(a.prime()), 17);
        }
        assert!(matches!(a.basis_in_degree(21), Err(Error::DegreeCapExceeded { .. })));
    }

    #[test]
    fn conjugation_examples() {
        let a = a3(40);
        let xi1 = a.xi(1).unwrap();
        assert_eq!(a.conjugate(&xi1).unwrap(), xi1.scale(-1));
        let tau0 = a.tau(0).unwrap();
        assert_eq!(a.conjugate(&tau0).unwrap(), tau0.scale(-1));
        let xi2 = a.xi(2).unwrap();
        let once = a.conjugate(&xi2).unwrap();
        assert_ne!(once, xi2);
        assert_eq!(a.conjugate(&once).unwrap(), xi2);
        // χ(ξ_2) = -ξ_2 + ξ_1^{p+1}
        let expected = xi2.scale(-1).add(&xi1.pow(4)).unwrap();
        assert_eq!(once, expected);
    }

    #[test]
    fn conjugate_respects_cap() {
        let a = a3(8);
        let big = a.xi(1).unwrap().pow(3);
        assert!(matches!(a.conjugate(&big), Err(Error::DegreeCapExceeded { .. })));
    }
}
