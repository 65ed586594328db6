//! Finite simplicial sets, their chains, and the lazy free abelian group `Z̃X`.

pub mod chains;
pub mod lazy;
pub mod sset;
pub mod surjection;

pub use chains::{normalized_chains, unnormalized_chains, NormalizedChains, UnnormalizedChains};
pub use lazy::{
    chains_of_lazy, free_abelianization, hurewicz, induced_map, FreeAbelianization, Hurewicz, LazyChains,
    LazySimplicialAbGroup, PointedSet, PointedSimplicialObject, Underlying,
};
pub use sset::{
    from_ordered_complex, minimal_circle, real_projective_space, simplex_boundary, sphere, std_simplex, Simplex,
    SimplexId, SimplicialSet, SimplicialSetBuilder, SimplicialSetMap,
};
pub use surjection::Surjection;
