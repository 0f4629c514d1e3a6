use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::bidegree::Bidegree;
use super::field::Prime;
use super::poincare::PoincareTable;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Polynomial,
    Exterior,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub parity: Parity,
    pub bidegree: Bidegree,
}

impl GeneratorSpec {
    pub fn polynomial(name: impl Into<String>, bidegree: Bidegree) -> Self {
        GeneratorSpec {
            name: name.into(),
            parity: Parity::Polynomial,
            bidegree,
        }
    }

    pub fn exterior(name: impl Into<String>, bidegree: Bidegree) -> Self {
        GeneratorSpec {
            name: name.into(),
            parity: Parity::Exterior,
            bidegree,
        }
    }
}

/// Exponent vector indexed by declared generator order.
///
/// The derived ordering is lexicographic in that order, which is the
/// ordering used for every basis this crate returns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn unit(ngens: usize) -> Self {
        Monomial(vec![0; ngens])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// A free graded-commutative algebra over `F_p` on finitely many generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeGCAlgebra {
    prime: Prime,
    generators: Vec<GeneratorSpec>,
    // slack[k]: max over generators k.. of weight >= 1 of ceil(-t/w), floored at 0;
    // bounds how far later generators can pull the total degree down per unit weight
    slack: Vec<i64>,
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

impl FreeGCAlgebra {
    pub fn new(prime: Prime, generators: Vec<GeneratorSpec>) -> Result<Arc<Self>> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g.name.as_str()) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
            let Bidegree { t, w } = g.bidegree;
            if w < 0 || (w == 0 && t <= 0) {
                return Err(Error::NonConnective {
                    name: g.name.clone(),
                    t,
                    w,
                });
            }
            if prime.is_odd() && t.rem_euclid(2) == 1 && g.parity == Parity::Polynomial {
                return Err(Error::ParityViolation {
                    name: g.name.clone(),
                    reason: format!("odd total degree {t} at p = {prime} must be exterior"),
                });
            }
            if !prime.is_odd() && g.parity == Parity::Exterior {
                return Err(Error::ParityViolation {
                    name: g.name.clone(),
                    reason: "generators are polynomial at p = 2".into(),
                });
            }
        }
        let mut slack = vec![0i64; generators.len() + 1];
        for k in (0..generators.len()).rev() {
            let b = generators[k].bidegree;
            let own = if b.w >= 1 { ceil_div(-b.t, b.w).max(0) } else { 0 };
            slack[k] = slack[k + 1].max(own);
        }
        Ok(Arc::new(FreeGCAlgebra {
            prime,
            generators,
            slack,
        }))
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.generators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn generator_monomial(&self, idx: usize) -> Monomial {
        let mut m = Monomial::unit(self.ngens());
        m.0[idx] = 1;
        m
    }

    pub fn monomial_bidegree(&self, m: &Monomial) -> Bidegree {
        m.0.iter()
            .zip(&self.generators)
            .fold(Bidegree::ZERO, |acc, (&e, g)| acc + g.bidegree * e as i64)
    }

    fn odd_generator(&self, idx: usize) -> bool {
        self.generators[idx].bidegree.t.rem_euclid(2) == 1
    }

    /// Product of two monomials, or `None` if an exterior square appears.
    /// The boolean is true when the product picks up a minus sign.
    pub fn multiply_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, bool)> {
        let n = self.ngens();
        let mut exps = Vec::with_capacity(n);
        for i in 0..n {
            let e = a.0[i] + b.0[i];
            if e > 1 && self.generators[i].parity == Parity::Exterior {
                return None;
            }
            exps.push(e);
        }
        // each odd factor of b passes the odd factors of a with larger index
        let mut odd_a_after = 0u64;
        let mut sign = false;
        for j in (0..n).rev() {
            if !self.odd_generator(j) {
                continue;
            }
            if (b.0[j] as u64 * odd_a_after) % 2 == 1 {
                sign = !sign;
            }
            odd_a_after += a.0[j] as u64;
        }
        Some((Monomial(exps), sign))
    }

    /// All monomials of bidegree exactly `b`, in ascending lexicographic order.
    pub fn basis_in_bidegree(&self, b: Bidegree) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.ngens()];
        self.enumerate(0, b, &mut exps, &mut out);
        out
    }

    fn enumerate(&self, idx: usize, rem: Bidegree, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if rem.w < 0 || rem.t < -self.slack[idx] * rem.w {
            return;
        }
        if idx == self.ngens() {
            if rem == Bidegree::ZERO {
                out.push(Monomial(exps.clone()));
            }
            return;
        }
        let g = &self.generators[idx];
        let gb = g.bidegree;
        let mut max_e = if gb.w >= 1 {
            rem.w / gb.w
        } else {
            (rem.t + self.slack[idx + 1] * rem.w) / gb.t
        };
        if g.parity == Parity::Exterior {
            max_e = max_e.min(1);
        }
        for e in 0..=max_e.max(-1) {
            exps[idx] = e as u32;
            self.enumerate(idx + 1, rem + gb * -e, exps, out);
        }
        exps[idx] = 0;
    }

    /// Monomial counts for every bidegree with `t <= window.t` and
    /// `w <= window.w`, by truncated power-series multiplication.
    pub fn poincare_series(&self, window: Bidegree) -> PoincareTable {
        let wmax = window.w.max(0);
        let slack = self.slack[0];
        let t_lo = -slack * wmax;
        let t_hi = window.t + slack * wmax;
        if t_hi < t_lo {
            return PoincareTable::new(window, BTreeMap::new());
        }
        let width = (t_hi - t_lo + 1) as usize;
        let height = (wmax + 1) as usize;
        let at = |t: i64, w: i64| -> Option<usize> {
            (t >= t_lo && t <= t_hi && w >= 0 && w <= wmax)
                .then(|| w as usize * width + (t - t_lo) as usize)
        };
        let mut dp = vec![0u64; width * height];
        if let Some(i) = at(0, 0) {
            dp[i] = 1;
        }
        for g in &self.generators {
            let gb = g.bidegree;
            match g.parity {
                Parity::Exterior => {
                    let prev = dp.clone();
                    for w in 0..=wmax {
                        for t in t_lo..=t_hi {
                            if let (Some(dst), Some(src)) = (at(t, w), at(t - gb.t, w - gb.w)) {
                                dp[dst] += prev[src];
                            }
                        }
                    }
                }
                Parity::Polynomial => {
                    // increasing (w, t): the source b - g is always visited first
                    for w in 0..=wmax {
                        for t in t_lo..=t_hi {
                            if let (Some(dst), Some(src)) = (at(t, w), at(t - gb.t, w - gb.w)) {
                                dp[dst] += dp[src];
                            }
                        }
                    }
                }
            }
        }
        let mut entries = BTreeMap::new();
        for w in 0..=wmax {
            for t in t_lo..=window.t {
                let c = dp[at(t, w).expect("inside box")];
                if c > 0 {
                    entries.insert(Bidegree::new(t, w), c);
                }
            }
        }
        PoincareTable::new(window, entries)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_unit() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (e, g) in m.0.iter().zip(&self.generators) {
            match e {
                0 => {}
                1 => parts.push(g.name.clone()),
                _ => parts.push(format!("{}^{}", g.name, e)),
            }
        }
        parts.join(" ")
    }
}

/// A finite `F_p`-linear combination of monomials of one algebra.
#[derive(Debug, Clone)]
pub struct Element {
    ambient: Arc<FreeGCAlgebra>,
    terms: BTreeMap<Monomial, u32>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.ambient, &other.ambient) && self.terms == other.terms
    }
}

impl Eq for Element {}

fn same_algebra(a: &Arc<FreeGCAlgebra>, b: &Arc<FreeGCAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Element {
    pub fn zero(ambient: &Arc<FreeGCAlgebra>) -> Self {
        Element {
            ambient: Arc::clone(ambient),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ambient: &Arc<FreeGCAlgebra>) -> Self {
        Self::monomial(ambient, Monomial::unit(ambient.ngens()), 1)
    }

    pub fn monomial(ambient: &Arc<FreeGCAlgebra>, m: Monomial, coeff: i64) -> Self {
        let mut e = Self::zero(ambient);
        e.add_term(m, ambient.prime().reduce(coeff));
        e
    }

    pub fn generator(ambient: &Arc<FreeGCAlgebra>, idx: usize) -> Self {
        Self::monomial(ambient, ambient.generator_monomial(idx), 1)
    }

    pub fn ambient(&self) -> &Arc<FreeGCAlgebra> {
        &self.ambient
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, u32> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: u32) {
        let p = self.ambient.prime();
        let e = self.terms.entry(m).or_insert(0);
        *e = p.add(*e, c);
        if *e == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    /// The common bidegree of all terms; `None` for zero or inhomogeneous elements.
    pub fn bidegree(&self) -> Option<Bidegree> {
        let mut it = self.terms.keys().map(|m| self.ambient.monomial_bidegree(m));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        if !same_algebra(&self.ambient, &other.ambient) {
            return Err(Error::AmbientMismatch);
        }
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Element {
        let p = self.ambient.prime();
        let c = p.reduce(c);
        let mut out = Element::zero(&self.ambient);
        if c != 0 {
            for (m, &v) in &self.terms {
                out.terms.insert(m.clone(), p.mul(c, v));
            }
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.scale(-1))
    }

    pub fn multiply(&self, other: &Element) -> Result<Element> {
        if !same_algebra(&self.ambient, &other.ambient) {
            return Err(Error::AmbientMismatch);
        }
        let p = self.ambient.prime();
        let mut out = Element::zero(&self.ambient);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                if let Some((m, neg)) = self.ambient.multiply_monomials(a, b) {
                    out.add_term(m, p.mul(p.mul(ca, cb), p.sign(neg)));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u64) -> Element {
        let mut acc = Element::one(&self.ambient);
        for _ in 0..k {
            acc = acc.multiply(self).expect("same ambient");
        }
        acc
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let body = self.ambient.format_monomial(m);
                if *c == 1 {
                    body
                } else {
                    format!("{c} {body}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn steenrod_window() -> Arc<FreeGCAlgebra> {
        FreeGCAlgebra::new(
            p(3),
            vec![
                GeneratorSpec::exterior("t0", Bidegree::degree(1)),
                GeneratorSpec::polynomial("x1", Bidegree::degree(4)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn construction_errors() {
        let dup = FreeGCAlgebra::new(
            p(3),
            vec![
                GeneratorSpec::exterior("a", Bidegree::degree(1)),
                GeneratorSpec::exterior("a", Bidegree::degree(3)),
            ],
        );
        assert_eq!(dup.unwrap_err(), Error::DuplicateGenerator("a".into()));

        let parity = FreeGCAlgebra::new(p(3), vec![GeneratorSpec::polynomial("x", Bidegree::degree(3))]);
        assert!(matches!(parity, Err(Error::ParityViolation { .. })));

        let nc = FreeGCAlgebra::new(p(2), vec![GeneratorSpec::polynomial("z", Bidegree::new(0, 0))]);
        assert!(matches!(nc, Err(Error::NonConnective { .. })));

        assert!(FreeGCAlgebra::new(p(2), vec![GeneratorSpec::polynomial("h", Bidegree::new(0, 1))]).is_ok());
    }

    #[test]
    fn basis_examples() {
        let a = steenrod_window();
        assert_eq!(a.basis_in_bidegree(Bidegree::degree(5)), vec![Monomial(vec![1, 1])]);
        assert_eq!(a.basis_in_bidegree(Bidegree::ZERO), vec![Monomial(vec![0, 0])]);
        let h = FreeGCAlgebra::new(p(2), vec![GeneratorSpec::polynomial("h", Bidegree::new(0, 1))]).unwrap();
        assert_eq!(h.basis_in_bidegree(Bidegree::new(0, 3)), vec![Monomial(vec![3])]);
    }

    #[test]
    fn negative_degree_generators_enumerate_finitely() {
        let a = FreeGCAlgebra::new(
            p(2),
            vec![
                GeneratorSpec::polynomial("c", Bidegree::new(1, 0)),
                GeneratorSpec::polynomial("n", Bidegree::new(-3, 1)),
            ],
        )
        .unwrap();
        // c^5 n^1 and c^2 ... only c^5 n has bidegree (2,1)
        assert_eq!(a.basis_in_bidegree(Bidegree::new(2, 1)), vec![Monomial(vec![5, 1])]);
        let table = a.poincare_series(Bidegree::new(2, 2));
        assert_eq!(table.dim(Bidegree::new(2, 1)), Some(1));
        assert_eq!(table.dim(Bidegree::new(-6, 2)), Some(1));
        assert_eq!(table.dim(Bidegree::new(0, 2)), Some(1));
    }

    #[test]
    fn products_and_signs() {
        let a = steenrod_window();
        let t0 = Element::generator(&a, 0);
        let x1 = Element::generator(&a, 1);
        assert!(t0.multiply(&t0).unwrap().is_zero());
        let lhs = t0.multiply(&x1).unwrap();
        let rhs = x1.multiply(&t0).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "t0 x1");

        let odd = FreeGCAlgebra::new(
            p(5),
            vec![
                GeneratorSpec::exterior("a", Bidegree::degree(1)),
                GeneratorSpec::exterior("b", Bidegree::degree(3)),
            ],
        )
        .unwrap();
        let ea = Element::generator(&odd, 0);
        let eb = Element::generator(&odd, 1);
        assert_eq!(eb.multiply(&ea).unwrap(), ea.multiply(&eb).unwrap().scale(-1));
    }

    #[test]
    fn polynomial_product_mod_two() {
        let h = FreeGCAlgebra::new(p(2), vec![GeneratorSpec::polynomial("h", Bidegree::new(0, 1))]).unwrap();
        let g = Element::generator(&h, 0);
        let lhs = g.pow(2).add(&g).unwrap().multiply(&g).unwrap();
        let rhs = g.pow(3).add(&g.pow(2)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.bidegree(), None);
    }

    #[test]
    fn ambient_mismatch() {
        let a = steenrod_window();
        let b = FreeGCAlgebra::new(p(3), vec![GeneratorSpec::exterior("u", Bidegree::degree(1))]).unwrap();
        let x = Element::generator(&a, 0);
        let y = Element::generator(&b, 0);
        assert_eq!(x.multiply(&y), Err(Error::AmbientMismatch));
    }

    #[test]
    fn poincare_examples() {
        let h = FreeGCAlgebra::new(p(2), vec![GeneratorSpec::polynomial("h", Bidegree::new(0, 1))]).unwrap();
        let t = h.poincare_series(Bidegree::new(0, 4));
        for w in 0..=4 {
            assert_eq!(t.dim(Bidegree::new(0, w)), Some(1));
        }
        let e = FreeGCAlgebra::new(p(3), vec![GeneratorSpec::exterior("t0", Bidegree::degree(1))]).unwrap();
        let t = e.poincare_series(Bidegree::degree(2));
        assert_eq!(
            (0..=2).map(|d| t.dim(Bidegree::degree(d)).unwrap()).collect::<Vec<_>>(),
            vec![1, 1, 0]
        );
        let t = steenrod_window().poincare_series(Bidegree::degree(5));
        assert_eq!(
            (0..=5).map(|d| t.dim(Bidegree::degree(d)).unwrap()).collect::<Vec<_>>(),
            vec![1, 1, 0, 0, 1, 1]
        );
    }
}
