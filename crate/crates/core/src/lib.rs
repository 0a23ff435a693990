//! Iterant algebra over exact rationals: group tables and permutation
//! actions, iterant/matrix correspondence, Clifford and Dirac structures,
//! discrete calculus, a staggered Schrödinger lattice, and the primary
//! arithmetic of distinctions.

pub mod clifford;
pub mod dirac;
pub mod discrete;
pub mod error;
pub mod groups;
pub mod iterant;
pub mod lof;
pub mod matrep;
pub mod matrix;
pub mod scalar;
pub mod schrodinger;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::SquareMatrix;
pub use scalar::{Rational, Scalar};
