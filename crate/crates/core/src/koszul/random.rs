//! Seeded random presentations. The generator is a 64-bit LCG so that a
//! seed means the same module on every platform and build.

use super::module::{ModulePresentation, RelationTerm};
use super::tensor::{tensor_algebra_basis, TensorAlgebra};
use crate::error::Result;
use crate::fpgraded::Prime;

#[derive(Debug, Clone)]
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed)
    }

    pub fn next_u32(&mut self) -> u32 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 33) as u32
    }

    /// Uniform-ish in `lo..=hi`.
    pub fn range(&mut self, lo: u32, hi: u32) -> u32 {
        lo + self.next_u32() % (hi - lo + 1)
    }
}

/// Degrees of `V`: dimension 1..=3, each degree 1..=3.
pub fn random_v_degrees(rng: &mut Lcg) -> Vec<u32> {
    let dim = rng.range(1, 3);
    (0..dim).map(|_| rng.range(1, 3)).collect()
}

/// One or two generators in degrees 0..=3 and up to two homogeneous
/// relations of one to three terms, drawn from `seed`.
pub fn random_presentation(t: &TensorAlgebra, seed: u64) -> ModulePresentation {
    let mut rng = Lcg::new(seed);
    random_presentation_with(t, &mut rng)
}

pub fn random_presentation_with(t: &TensorAlgebra, rng: &mut Lcg) -> ModulePresentation {
    let p = t.prime().get();
    let ngen = rng.range(1, 2) as usize;
    let gens: Vec<(String, u32)> = (0..ngen)
        .map(|g| (format!("e{}", g + 1), rng.range(0, 3)))
        .collect();
    let nrel = rng.range(0, 2);
    let mut relations = Vec::new();
    for _ in 0..nrel {
        let degree = gens.iter().map(|g| g.1).min().unwrap() + rng.range(0, 3);
        // terms w·e_g with |w| + |e_g| = degree
        let mut candidates = Vec::new();
        for (g, (_, e)) in gens.iter().enumerate() {
            if *e <= degree {
                for w in tensor_algebra_basis(t, (degree - e) as usize) {
                    candidates.push((w, g));
                }
            }
        }
        if candidates.is_empty() {
            continue;
        }
        let nterms = rng.range(1, 3) as usize;
        let mut rel: Vec<RelationTerm> = Vec::new();
        for _ in 0..nterms {
            let (word, generator) = candidates[rng.next_u32() as usize % candidates.len()].clone();
            let coeff = rng.range(1, p - 1) as i64;
            rel.push(RelationTerm {
                coeff,
                word,
                generator,
            });
        }
        relations.push(rel);
    }
    ModulePresentation::new(gens, relations)
}

/// A random `V` and a random module over `T(V)`, both from `seed`.
pub fn random_case(prime: Prime, seed: u64) -> Result<(TensorAlgebra, ModulePresentation)> {
    let mut rng = Lcg::new(seed);
    let t = TensorAlgebra::from_degrees(prime, &random_v_degrees(&mut rng))?;
    let n = random_presentation_with(&t, &mut rng);
    Ok((t, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcg_is_reproducible() {
        let mut a = Lcg::new(7);
        let mut b = Lcg::new(7);
        for _ in 0..10 {
            assert_eq!(a.next_u32(), b.next_u32());
        }
        let mut c = Lcg::new(0);
        assert_eq!(c.next_u32(), (1442695040888963407u64 >> 33) as u32);
    }

    #[test]
    fn random_cases_are_valid() {
        let p = Prime::new(5).unwrap();
        for seed in 0..30 {
            let (t, n) = random_case(p, seed).unwrap();
            assert!((1..=3).contains(&t.ngens()));
            assert!(n.relation_degrees(&t).is_ok());
        }
    }
}
