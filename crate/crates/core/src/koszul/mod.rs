//! Tensor algebras `T(V)` over `F_p`, finitely presented left modules, and
//! the resolution `0 → T(V)⊗V⊗N → T(V)⊗N → N → 0` checked degree by degree.

mod complex;
mod module;
mod random;
mod tensor;

pub use complex::{
    build_koszul, exactness_check, koszul_tor, tor_trivial, tor_trivial_bar, ExactnessReport,
    ExactnessRow, KoszulComplex, KoszulDegree,
};
pub use module::{ModuleGenerator, ModulePresentation, PresentedModule, RelationTerm};
pub use random::{random_case, random_presentation, random_presentation_with, random_v_degrees, Lcg};
pub use tensor::{
    tensor_algebra_basis, TensorAlgebra, TensorGenerator, TruncatedTensorAlgebra, Word, WordRanks,
};
