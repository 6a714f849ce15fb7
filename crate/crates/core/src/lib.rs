//! Equivariant cohomology of free involutions on finite complexes and the
//! Z/2-index of 4-dimensional examples.
//!
//! Complexes are free chain complexes over `Z[Z/2]`, given directly or derived
//! from a Delta-complex with a free simplicial involution. The pipeline runs
//! from exact integer linear algebra through twisted (co)homology, Bockstein
//! maps and a truncated Borel spectral sequence to an index verdict with
//! certificates.

pub mod borel;
pub mod catalog;
pub mod complexes;
pub mod decider;
pub mod exactalg;
pub mod format;
pub mod obstructions;

pub use complexes::{AuxData, Coeff, Cochain, DeltaComplex, EquivariantComplex, LambdaMatrix, LambdaScalar};
pub use decider::{decide, DecideConfig, IndexStatus, IndexVerdict};
pub use exactalg::{AbelianGroup, GroupHom, IntMatrix};
