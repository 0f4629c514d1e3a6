//! Prime fields, bigraded free graded-commutative algebras, Poincaré series
//! and exact sparse linear algebra over `F_p`.

pub mod algebra;
pub mod bidegree;
pub mod field;
pub mod linalg;
pub mod poincare;

pub use algebra::{Element, FreeGCAlgebra, GeneratorSpec, Monomial, Parity};
pub use bidegree::Bidegree;
pub use field::Prime;
pub use linalg::{EchelonBasis, SparseMatrix, SparseVec};
pub use poincare::PoincareTable;

use std::sync::Arc;

use crate::error::Result;

pub fn make_algebra(prime: Prime, gens: Vec<GeneratorSpec>) -> Result<Arc<FreeGCAlgebra>> {
    FreeGCAlgebra::new(prime, gens)
}

/// Rank and null-space basis of a matrix given by sparse columns.
pub fn rank_kernel(matrix: &SparseMatrix) -> (usize, Vec<SparseVec>) {
    matrix.rank_kernel()
}
