//! Higher diagonals on simplicial chains, cup-i products and Steenrod squares.

pub mod cohomology;
pub mod simplex;
pub mod table;

pub use cohomology::{bockstein, cohomology_f2, cup_i, steenrod_square, Cochain, CochainClass, CohomologyF2};
pub use simplex::{aw_diagonal, contracting_homotopy, Face, SimplexChains};
pub use table::{diagonal_top, grouplike_signs_top, higher_diagonal, higher_diagonal_chain, DiagonalTable, TopSign};
