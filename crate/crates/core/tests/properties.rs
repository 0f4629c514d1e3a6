use proptest::prelude::*;

use ekalg::fpgraded::{Bidegree, Element, FreeGCAlgebra, GeneratorSpec, Monomial, Prime, SparseMatrix};
use ekalg::koszul::{self, tensor_algebra_basis, TensorAlgebra};

fn small_prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![2u64, 3, 5, 7]).prop_map(|p| Prime::new(p).unwrap())
}

/// Up to four generators in positive degree and weight, with parities legal
/// for the prime.
fn algebra() -> impl Strategy<Value = std::sync::Arc<FreeGCAlgebra>> {
    (small_prime(), prop::collection::vec((1i64..=4, 0i64..=2, any::<bool>()), 1..=4)).prop_map(|(p, gens)| {
        let specs = gens
            .into_iter()
            .enumerate()
            .map(|(i, (t, w, ext))| {
                let b = Bidegree::new(t, w);
                if p.is_odd() && (t % 2 == 1 || ext) {
                    GeneratorSpec::exterior(format!("g{i}"), b)
                } else {
                    GeneratorSpec::polynomial(format!("g{i}"), b)
                }
            })
            .collect();
        FreeGCAlgebra::new(p, specs).unwrap()
    })
}

fn random_element(alg: &std::sync::Arc<FreeGCAlgebra>, seeds: &[(u8, u8, u8)]) -> Element {
    let n = alg.ngens();
    let mut e = Element::zero(alg);
    for &(g, k, c) in seeds {
        let mut m = vec![0u32; n];
        m[g as usize % n] = 1;
        m[k as usize % n] += 1;
        let mono = Element::monomial(alg, Monomial(m), c as i64 + 1);
        e = e.add(&mono).unwrap();
    }
    e
}

fn small_elements() -> impl Strategy<Value = Vec<(u8, u8, u8)>> {
    prop::collection::vec(any::<(u8, u8, u8)>(), 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(
        alg in algebra(), a in small_elements(), b in small_elements(), c in small_elements()
    ) {
        let (x, y, z) = (random_element(&alg, &a), random_element(&alg, &b), random_element(&alg, &c));
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn generators_graded_commute(alg in algebra(), i in 0usize..4, j in 0usize..4) {
        let n = alg.ngens();
        let (i, j) = (i % n, j % n);
        let x = Element::generator(&alg, i);
        let y = Element::generator(&alg, j);
        let ti = alg.generators()[i].bidegree.t;
        let tj = alg.generators()[j].bidegree.t;
        let sign = if ti % 2 != 0 && tj % 2 != 0 { -1 } else { 1 };
        prop_assert_eq!(x.multiply(&y).unwrap(), y.multiply(&x).unwrap().scale(sign));
    }

    #[test]
    fn basis_sizes_match_poincare_series(alg in algebra(), t_max in 0i64..8, w_max in 0i64..4) {
        let table = alg.poincare_series(Bidegree::new(t_max, w_max));
        for t in 0..=t_max {
            for w in 0..=w_max {
                let b = Bidegree::new(t, w);
                let basis = alg.basis_in_bidegree(b);
                prop_assert_eq!(table.dim(b), Some(basis.len() as u64));
                for m in &basis {
                    prop_assert_eq!(alg.monomial_bidegree(m), b);
                }
            }
        }
    }

    #[test]
    fn rank_plus_nullity(
        p in small_prime(),
        nrows in 1usize..6,
        cols in prop::collection::vec(prop::collection::vec((0usize..6, -4i64..5), 0..5), 0..7),
    ) {
        let cols: Vec<Vec<(usize, i64)>> = cols
            .into_iter()
            .map(|c| c.into_iter().map(|(i, v)| (i % nrows, v)).collect())
            .collect();
        let m = SparseMatrix::from_columns(p, nrows, cols).unwrap();
        let (rank, kernel) = m.rank_kernel();
        prop_assert_eq!(rank + kernel.len(), m.ncols());
        prop_assert_eq!(rank, m.rank());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().is_empty());
        }
    }

    #[test]
    fn tensor_dims_follow_recurrence(degrees in prop::collection::vec(1u32..=3, 0..=3), d in 0usize..9) {
        let t = TensorAlgebra::from_degrees(Prime::new(3).unwrap(), &degrees).unwrap();
        let dims = t.dims(d);
        prop_assert_eq!(tensor_algebra_basis(&t, d).len(), dims[d]);
        if d > 0 {
            let rec: usize = degrees.iter().filter(|&&e| e as usize <= d).map(|&e| dims[d - e as usize]).sum();
            prop_assert_eq!(dims[d], rec);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn koszul_exact_for_random_presentations(seed in any::<u64>(), p in small_prime()) {
        let (t, n) = koszul::random_case(p, seed).unwrap();
        let k = koszul::build_koszul(&t, &n, 7).unwrap();
        let r = koszul::exactness_check(&k, 7);
        prop_assert!(r.passed(), "seed {}: {:?}", seed, r.failures());
    }
}
