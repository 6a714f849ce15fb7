//! Exact integer linear algebra.
//!
//! Everything downstream (cohomology groups, induced maps, spectral sequence
//! pages) is a subquotient `ker / im` of integer matrices, so this module
//! carries the whole computational load: Smith normal form with transforms,
//! subquotient groups with class/representative maps, and membership tests
//! with canonical preimages.

mod group;
pub mod lattice;
mod matrix;
pub(crate) mod mod2;
mod smith;

use thiserror::Error;

pub use group::{
    induced_hom, is_exact_at, solve_in_image, subgroup_of, subquotient_group,
    subquotient_group_mod2, AbelianGroup, GroupHom, Subgroup,
};
pub use matrix::{big_json, big_json_vec, bigvec, IntMatrix};
pub use smith::{smith_normal_form, SmithDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactAlgError {
    #[error("outgoing map composed with incoming map is nonzero")]
    CompositionNonzero,
    #[error("map does not descend to the subquotients: {0}")]
    NotChainLevelMap(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector is not a cycle")]
    NotACycle,
}
