//! Exact chain-level coalgebra structures on simplicial sets.
//!
//! The core is generic over the coefficient ring ([`scalar::Coefficient`]);
//! the aliases below fix the integral and rational choices used throughout.

pub mod cellular;
pub mod diagonal;
pub mod doldkan;
pub mod exactalg;
pub mod fixtures;
pub mod operads;
pub mod scalar;
pub mod simplicial;

mod error;

pub use error::{Error, Result};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
pub use scalar::F2;

/// Integral chains on basis keys `K`.
pub type Chain<K> = exactalg::FreeElement<K, Integer>;
/// Mod-2 chains and cochains.
pub type F2Chain<K> = exactalg::FreeElement<K, F2>;
/// Integral tensors.
pub type Tensor<K> = exactalg::TensorElement<K, Integer>;
