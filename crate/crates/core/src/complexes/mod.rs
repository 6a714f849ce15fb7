//! Free involutions on finite complexes and their (co)homology.
//!
//! A complex is stored as a free chain complex over `Lambda = Z[Z/2]`, one
//! basis element per cell of the orbit space `N`. Specializing the group ring
//! gives the chain complexes of `N` with coefficients `Z`, `Z-` (sign action),
//! `Z/2`, and of the cover `X` itself (`Lambda`, doubling every rank).
//!
//! Cochains are gauge-fixed: one value per orbit representative. For `Lambda`
//! coefficients a cochain stores the pair `(u, v)` of values of the
//! corresponding integral cochain of `X` on `e` and `tau*e`.

mod aux;
mod coeff;
mod complex;
mod cup;
mod delta;
mod lambda;

use thiserror::Error;

pub use aux::AuxData;
pub use coeff::Coeff;
pub use complex::{AntisymmetricClasses, Cochain, EquivariantComplex, FundamentalClass};
pub use cup::{aw_cup, Pairing};
pub use delta::{DeltaComplex, OrbitSlot};
pub use lambda::{LambdaMatrix, LambdaScalar};

use crate::exactalg::ExactAlgError;

/// A single violated invariant, with its location.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Empty,
    BoundaryShape {
        degree: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    CompositionNonzero {
        degree: usize,
    },
    Disconnected {
        h0: String,
    },
    DeltaShape {
        dim: usize,
        detail: String,
    },
    SimplicialIdentity {
        dim: usize,
        simplex: usize,
        i: usize,
        j: usize,
    },
    InvolutionShape {
        dim: usize,
        detail: String,
    },
    InvolutionNotInvolutive {
        dim: usize,
        simplex: usize,
    },
    NonFreeInvolution {
        dim: usize,
        simplex: usize,
    },
    InvolutionNotSimplicial {
        dim: usize,
        simplex: usize,
        face: usize,
    },
    DeltaMismatch {
        detail: String,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use Violation::*;
        match self {
            Empty => write!(f, "complex has no cells"),
            BoundaryShape {
                degree,
                expected,
                found,
            } => write!(
                f,
                "boundary in degree {degree} is {}x{}, expected {}x{}",
                found.0, found.1, expected.0, expected.1
            ),
            CompositionNonzero { degree } => {
                write!(f, "CompositionNonzero at degree {degree}: d o d != 0")
            }
            Disconnected { h0 } => write!(f, "cover is not connected: H_0(X) = {h0}"),
            DeltaShape { dim, detail } => write!(f, "delta complex, dimension {dim}: {detail}"),
            SimplicialIdentity { dim, simplex, i, j } => {
                write!(
                    f,
                    "simplicial identity d_{i} d_{j} fails on {dim}-simplex {simplex}"
                )
            }
            InvolutionShape { dim, detail } => write!(f, "involution in dimension {dim}: {detail}"),
            InvolutionNotInvolutive { dim, simplex } => {
                write!(
                    f,
                    "involution does not square to the identity on {dim}-simplex {simplex}"
                )
            }
            NonFreeInvolution { dim, simplex } => {
                write!(f, "NonFreeInvolution: {dim}-simplex {simplex} is fixed")
            }
            InvolutionNotSimplicial { dim, simplex, face } => {
                write!(
                    f,
                    "involution does not commute with face {face} of {dim}-simplex {simplex}"
                )
            }
            DeltaMismatch { detail } => write!(
                f,
                "delta refinement disagrees with the Lambda complex: {detail}"
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("invalid complex:\n{0}")]
    Invalid(ValidationReport),
    #[error("degree {degree} out of range 0..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },
    #[error("1-cell {cell} has a boundary that is not of head-minus-tail form and no x_cocycle was supplied")]
    UnstructuredBoundary { cell: usize },
    #[error("operation needs a delta-complex refinement")]
    NoDeltaRefinement,
    #[error("pairing {pairing:?} does not accept {left} and {right} coefficients")]
    PairingMismatch {
        pairing: Pairing,
        left: Coeff,
        right: Coeff,
    },
    #[error("complex does not claim to be a closed 4-manifold")]
    NotClosedManifoldClaim,
    #[error("orbit space is not orientable")]
    NonOrientable,
    #[error("cochain of degree {degree} has {found} values, expected {expected}")]
    CochainLength {
        degree: usize,
        expected: usize,
        found: usize,
    },
    #[error("{what} is not a cocycle")]
    NotACocycle { what: String },
    #[error("{what} represents the zero class")]
    ZeroClass { what: String },
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
}
