//! Conjugation checked against the Hopf algebra structure: with the Milnor
//! coproduct `Δξ_n = Σ ξ_{n-i}^{p^i} ⊗ ξ_i`, `Δτ_n = τ_n ⊗ 1 + Σ ξ_{n-i}^{p^i} ⊗ τ_i`,
//! the antipode satisfies `Σ x' χ(x'') = ε(x)`.

use std::collections::BTreeMap;

use ekalg::fpgraded::{Element, Monomial, Prime};
use ekalg::steenrod::DualSteenrod;

/// Elements of `A ⊗ A`.
type Tensor = BTreeMap<(Monomial, Monomial), u32>;

struct Coproduct<'a> {
    a: &'a DualSteenrod,
    p: Prime,
}

impl<'a> Coproduct<'a> {
    fn degree(&self, m: &Monomial) -> i64 {
        self.a.algebra().monomial_bidegree(m).t
    }

    fn add_product(&self, out: &mut Tensor, c: u32, x: &Element, y: &Element) {
        for (mx, &cx) in x.terms() {
            for (my, &cy) in y.terms() {
                let coeff = self.p.mul(c, self.p.mul(cx, cy));
                let e = out.entry((mx.clone(), my.clone())).or_insert(0);
                *e = self.p.add(*e, coeff);
            }
        }
    }

    fn tensor_mul(&self, u: &Tensor, v: &Tensor) -> Tensor {
        let alg = self.a.algebra();
        let mut out = Tensor::new();
        for ((a, b), &c1) in u {
            for ((c, d), &c2) in v {
                // (a ⊗ b)(c ⊗ d) = (-1)^{|b||c|} ac ⊗ bd
                let Some((ac, s1)) = alg.multiply_monomials(a, c) else { continue };
                let Some((bd, s2)) = alg.multiply_monomials(b, d) else { continue };
                let swap = self.degree(b) % 2 != 0 && self.degree(c) % 2 != 0;
                let sign = self.p.sign(s1 ^ s2 ^ swap);
                let e = out.entry((ac, bd)).or_insert(0);
                *e = self.p.add(*e, self.p.mul(sign, self.p.mul(c1, c2)));
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn xi_power(&self, k: usize, e: u64) -> Element {
        self.a.xi(k).unwrap().pow(e)
    }

    fn generator(&self, tau: bool, n: usize) -> Tensor {
        let one = Element::one(self.a.algebra());
        let mut out = Tensor::new();
        if tau {
            self.add_product(&mut out, 1, &self.a.tau(n).unwrap(), &one);
            for i in 0..=n {
                let left = self.xi_power(n - i, self.p.get().pow(i as u32) as u64);
                self.add_product(&mut out, 1, &left, &self.a.tau(i).unwrap());
            }
        } else {
            for i in 0..=n {
                let left = self.xi_power(n - i, self.p.get().pow(i as u32) as u64);
                self.add_product(&mut out, 1, &left, &self.a.xi(i).unwrap());
            }
        }
        out
    }

    fn of_monomial(&self, m: &Monomial) -> Tensor {
        let (ntau, _) = self.a.generator_counts();
        let unit = Monomial::unit(self.a.algebra().ngens());
        let mut acc: Tensor = [((unit.clone(), unit), 1)].into_iter().collect();
        for (g, &e) in m.exponents().iter().enumerate() {
            let delta = if g < ntau {
                self.generator(true, g)
            } else {
                self.generator(false, g - ntau + 1)
            };
            for _ in 0..e {
                acc = self.tensor_mul(&acc, &delta);
            }
        }
        acc
    }
}

fn check_antipode(p: u64, d_max: i64) {
    let p = Prime::new(p).unwrap();
    let a = DualSteenrod::new(p, d_max).unwrap();
    let delta = Coproduct { a: &a, p };
    let alg = a.algebra().clone();
    for d in 0..=d_max {
        for m in a.basis_in_degree(d).unwrap() {
            let mono = a.from_milnor(&m).unwrap();
            let mut lhs = Element::zero(&alg);
            for ((x1, x2), c) in delta.of_monomial(&mono) {
                let left = Element::monomial(&alg, x1, c as i64);
                let right = a.conjugate(&Element::monomial(&alg, x2, 1)).unwrap();
                lhs = lhs.add(&left.multiply(&right).unwrap()).unwrap();
            }
            let counit = if d == 0 { Element::one(&alg) } else { Element::zero(&alg) };
            assert_eq!(lhs, counit, "antipode identity fails on {m} at p = {p}");
        }
    }
}

#[test]
fn antipode_identity_at_three() {
    check_antipode(3, 40);
}

#[test]
fn antipode_identity_at_five() {
    check_antipode(5, 60);
}

#[test]
fn coproduct_is_counital_on_generators() {
    let p = Prime::new(3).unwrap();
    let a = DualSteenrod::new(p, 60).unwrap();
    let delta = Coproduct { a: &a, p };
    let unit = Monomial::unit(a.algebra().ngens());
    let (ntau, nxi) = a.generator_counts();
    let gens = (0..ntau)
        .map(|n| (true, n, a.tau(n).unwrap()))
        .chain((1..=nxi).map(|n| (false, n, a.xi(n).unwrap())));
    for (tau, n, x) in gens {
        let d = delta.generator(tau, n);
        let mut left = Element::zero(a.algebra());
        let mut right = Element::zero(a.algebra());
        for ((x1, x2), &c) in &d {
            if *x1 == unit {
                left.add_term(x2.clone(), c);
            }
            if *x2 == unit {
                right.add_term(x1.clone(), c);
            }
        }
        assert_eq!(left, x);
        assert_eq!(right, x);
    }
}
