//! Exact computations over prime fields for free E_k-algebra homology.
//!
//! * [`fpgraded`]: prime fields, free graded-commutative algebras, Poincaré
//!   series, sparse linear algebra.
//! * [`dyer_lashof`]: bidegree bookkeeping for lower-indexed Dyer–Lashof words.
//! * [`may_chart`]: the E1-term generated by the `h`, `v`, `b` families.
//! * [`steenrod`]: the odd-primary dual Steenrod algebra, its conjugation and
//!   the quotients obtained by killing `τ_n` (or `τ̄_n`).
//! * [`koszul`]: tensor algebras, presented modules and the length-one
//!   Koszul resolution.
//! * [`bar`]: normalized bar complexes, used for Tor computations.

pub mod bar;
pub mod dyer_lashof;
pub mod error;
pub mod fpgraded;
pub mod koszul;
pub mod may_chart;
pub mod steenrod;

pub use error::{Error, Result};
