//! Exact linear algebra and the chain-complex substrate.

pub mod complex;
pub mod free;
pub mod hom;
pub mod matrix;
pub mod snf;
pub mod tensor;

pub use complex::{boundary_matrix, d_squared_vanishes, ChainComplex, FiniteComplex};
pub use free::{BasisKey, FreeElement, Graded, GradedKey};
pub use hom::{hom_differential, koszul_apply, ComplexRef, GradedHomElement};
pub use matrix::{rational_rank, Matrix};
pub use snf::{homology_groups, homology_through, invariant_factors, HomologyGroup};
pub use tensor::TensorElement;
