use serde::Serialize;

use super::tensor::{TensorAlgebra, Word, WordRanks};
use crate::error::{Error, Result};
use crate::fpgraded::linalg::normalize;
use crate::fpgraded::{EchelonBasis, Prime, SparseVec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleGenerator {
    pub name: String,
    pub degree: u32,
}

/// `coeff · word · e_generator` in the free module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationTerm {
    pub coeff: i64,
    pub word: Word,
    pub generator: usize,
}

/// A finitely presented left `T(V)`-module: free on the generators modulo
/// the submodule generated by the relations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModulePresentation {
    pub generators: Vec<ModuleGenerator>,
    pub relations: Vec<Vec<RelationTerm>>,
}

impl ModulePresentation {
    pub fn new(generators: Vec<(String, u32)>, relations: Vec<Vec<RelationTerm>>) -> Self {
        ModulePresentation {
            generators: generators
                .into_iter()
                .map(|(name, degree)| ModuleGenerator { name, degree })
                .collect(),
            relations,
        }
    }

    /// `F_p` in degree zero: every generator of `V` acts by zero.
    pub fn trivial(t: &TensorAlgebra) -> Self {
        let relations = (0..t.ngens())
            .map(|v| {
                vec![RelationTerm {
                    coeff: 1,
                    word: vec![v],
                    generator: 0,
                }]
            })
            .collect();
        Self::new(vec![("e".into(), 0)], relations)
    }

    /// `T(V)` itself.
    pub fn free() -> Self {
        Self::new(vec![("e".into(), 0)], Vec::new())
    }

    pub fn zero() -> Self {
        Self::new(Vec::new(), Vec::new())
    }

    /// Degree of every relation, checking indices and homogeneity. Empty
    /// relations get degree `None`.
    pub fn relation_degrees(&self, t: &TensorAlgebra) -> Result<Vec<Option<usize>>> {
        let mut out = Vec::with_capacity(self.relations.len());
        for (r, rel) in self.relations.iter().enumerate() {
            let mut deg = None;
            for term in rel {
                if term.generator >= self.generators.len() {
                    return Err(Error::IndexOutOfRange(format!(
                        "relation {r} uses generator {} of {}",
                        term.generator,
                        self.generators.len()
                    )));
                }
                if let Some(&v) = term.word.iter().find(|&&v| v >= t.ngens()) {
                    return Err(Error::IndexOutOfRange(format!(
                        "relation {r} uses letter {v} of {}",
                        t.ngens()
                    )));
                }
                let d = t.word_degree(&term.word) + self.generators[term.generator].degree as usize;
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => return Err(Error::InhomogeneousRelation(r)),
                    Some(_) => {}
                }
            }
            out.push(deg);
        }
        Ok(out)
    }
}

/// One degree of the free module `F` and of the presented module `N = F/R`.
#[derive(Debug, Clone)]
struct ModuleDegree {
    // offsets[g] = first index of the block of generator g, or None if g
    // sits above this degree
    offsets: Vec<Option<usize>>,
    free_dim: usize,
    relations: EchelonBasis,
    // F-indices of the standard monomials, ascending
    standard: Vec<usize>,
    // F-index -> position in `standard`
    position: Vec<Option<u32>>,
}

/// A presentation materialized degree by degree up to a cap. The basis of
/// `N_d` is the set of standard monomials `w · e_g` (those not leading a
/// relation vector), ordered by generator, then word.
#[derive(Debug, Clone)]
pub struct PresentedModule {
    prime: Prime,
    ranks: WordRanks,
    gen_degrees: Vec<usize>,
    degrees: Vec<ModuleDegree>,
}

impl PresentedModule {
    pub fn build(t: &TensorAlgebra, n: &ModulePresentation, d_max: usize) -> Result<Self> {
        let rel_degrees = n.relation_degrees(t)?;
        let ranks = WordRanks::new(t, d_max);
        let gen_degrees: Vec<usize> = n.generators.iter().map(|g| g.degree as usize).collect();
        let mut m = PresentedModule {
            prime: t.prime(),
            ranks,
            gen_degrees,
            degrees: Vec::with_capacity(d_max + 1),
        };
        for d in 0..=d_max {
            let mut offsets = Vec::with_capacity(m.gen_degrees.len());
            let mut free_dim = 0;
            for &e in &m.gen_degrees {
                if e <= d {
                    offsets.push(Some(free_dim));
                    free_dim += m.ranks.dim(d - e);
                } else {
                    offsets.push(None);
                }
            }
            let mut ech = EchelonBasis::new(m.prime);
            // R_d = Σ_v v·R_{d-|v|} + relations of degree d
            for v in 0..t.ngens() {
                let dv = t.degree_of(v);
                if dv > d {
                    continue;
                }
                let lower = &m.degrees[d - dv];
                for vec in lower.relations.vectors() {
                    let shifted = vec
                        .iter()
                        .map(|&(i, c)| {
                            let (g, r) = lower.locate(i);
                            let w_deg = d - dv - m.gen_degrees[g];
                            (offsets[g].unwrap() + m.ranks.prepend(v, w_deg, r), c)
                        })
                        .collect::<Vec<_>>();
                    ech.insert(sorted(shifted));
                    if ech.rank() == free_dim {
                        break;
                    }
                }
            }
            for (rel, deg) in n.relations.iter().zip(&rel_degrees) {
                if *deg != Some(d) {
                    continue;
                }
                let v: Vec<(usize, i64)> = rel
                    .iter()
                    .map(|term| {
                        (
                            offsets[term.generator].unwrap() + m.ranks.rank(&term.word),
                            term.coeff,
                        )
                    })
                    .collect();
                ech.insert(normalize(m.prime, v));
            }
            let standard: Vec<usize> = (0..free_dim).filter(|&i| !ech.is_pivot(i)).collect();
            let mut position = vec![None; free_dim];
            for (k, &i) in standard.iter().enumerate() {
                position[i] = Some(k as u32);
            }
            m.degrees.push(ModuleDegree {
                offsets,
                free_dim,
                relations: ech,
                standard,
                position,
            });
        }
        Ok(m)
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn d_max(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn ranks(&self) -> &WordRanks {
        &self.ranks
    }

    pub fn dim(&self, d: usize) -> usize {
        self.degrees.get(d).map_or(0, |x| x.standard.len())
    }

    pub fn free_dim(&self, d: usize) -> usize {
        self.degrees.get(d).map_or(0, |x| x.free_dim)
    }

    /// Reduces a vector of the free module in degree `d` to coordinates in
    /// the basis of `N_d`.
    pub fn reduce(&self, d: usize, v: &[(usize, u32)]) -> SparseVec {
        let deg = &self.degrees[d];
        deg.relations
            .normal_form(v)
            .into_iter()
            .map(|(i, c)| (deg.position[i].expect("normal form is standard") as usize, c))
            .collect()
    }

    /// `t · n` for a word `t` of degree `dt` and a basis element `n` of `N_d`,
    /// or `None` past the cap.
    pub fn act_word(&self, t: &[usize], dt: usize, d: usize, n: usize) -> Option<SparseVec> {
        let target = d + dt;
        if target > self.d_max() {
            return None;
        }
        let deg = &self.degrees[d];
        let i = deg.standard[n];
        let (g, r) = deg.locate(i);
        let w_deg = d - self.gen_degrees[g];
        let j = self.degrees[target].offsets[g].unwrap() + self.ranks.prepend_word(t, w_deg, r);
        Some(self.reduce(target, &[(j, 1)]))
    }

    /// `v · n` for a generator `v` of `V`.
    pub fn act(&self, v: usize, d: usize, n: usize) -> Option<SparseVec> {
        self.act_word(&[v], self.ranks.degree_of(v), d, n)
    }
}

impl ModuleDegree {
    /// Generator and word rank of a free-module index.
    fn locate(&self, i: usize) -> (usize, usize) {
        // blocks are laid out in generator order; empty blocks share offsets
        let (g, o) = self
            .offsets
            .iter()
            .enumerate()
            .filter_map(|(g, off)| off.filter(|&o| o <= i).map(|o| (g, o)))
            .next_back()
            .expect("index inside the free module");
        (g, i - o)
    }
}

fn sorted(mut v: Vec<(usize, u32)>) -> SparseVec {
    v.sort_unstable_by_key(|e| e.0);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(degrees: &[u32]) -> TensorAlgebra {
        TensorAlgebra::from_degrees(Prime::new(3).unwrap(), degrees).unwrap()
    }

    #[test]
    fn trivial_module_dims() {
        let a = t(&[1, 2]);
        let n = PresentedModule::build(&a, &ModulePresentation::trivial(&a), 6).unwrap();
        assert_eq!((0..=6).map(|d| n.dim(d)).collect::<Vec<_>>(), vec![1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn free_module_dims() {
        let a = t(&[1, 1]);
        let n = PresentedModule::build(&a, &ModulePresentation::free(), 5).unwrap();
        assert_eq!((0..=5).map(|d| n.dim(d)).collect::<Vec<_>>(), vec![1, 2, 4, 8, 16, 32]);
    }

    #[test]
    fn quotient_by_left_ideal() {
        // T(V)/(T(V)·x) has basis the words not ending in x: 1, y, xy, yy, …
        let a = t(&[1, 1]);
        let pres = ModulePresentation::new(
            vec![("e".into(), 0)],
            vec![vec![RelationTerm {
                coeff: 1,
                word: vec![0],
                generator: 0,
            }]],
        );
        let n = PresentedModule::build(&a, &pres, 5).unwrap();
        assert_eq!((0..=5).map(|d| n.dim(d)).collect::<Vec<_>>(), vec![1, 1, 2, 4, 8, 16]);
        // x · e = 0
        assert_eq!(n.act(0, 0, 0), Some(vec![]));
    }

    #[test]
    fn rejects_inhomogeneous() {
        let a = t(&[1, 2]);
        let pres = ModulePresentation::new(
            vec![("e".into(), 0)],
            vec![vec![
                RelationTerm {
                    coeff: 1,
                    word: vec![0],
                    generator: 0,
                },
                RelationTerm {
                    coeff: 1,
                    word: vec![1],
                    generator: 0,
                },
            ]],
        );
        assert!(matches!(
            PresentedModule::build(&a, &pres, 3),
            Err(Error::InhomogeneousRelation(0))
        ));
    }
}
