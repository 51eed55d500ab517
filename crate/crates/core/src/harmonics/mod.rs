//! Trivariate diagonal harmonics.
//!
//! Polynomials live in three rows `x, y, z` of `n` variables. The symmetric group
//! acts diagonally by permuting columns.

mod closure;
mod commutator;
mod higher;
mod kernel;
mod linalg;
mod space;
mod xpoly;

pub use closure::{closure_of, closure_space};
pub use commutator::commutator_check;
pub use higher::{higher_space, HigherSpace};
pub use kernel::{degrees_up_to, expand_translation, kernel_component, kernel_space, kernel_space_up_to, monomials_of_degree};
pub use linalg::{clear_denominators, nullspace, Echelon, SpanBasis, SparseRow};
pub use space::{frobenius_coefficient, GradedSpace, TriDegree};
pub use xpoly::{alphas, antisymmetrize, p_alpha_poly, vandermonde, Mono, Row, XPoly, MAX_COLS};

use crate::symcore::{Partition, SymError};

#[derive(Debug, thiserror::Error)]
pub enum HarmonicsError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("polarization needs two distinct rows, got {0} twice")]
    SameRow(char),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("multiplicity of {lambda} in degree {degree:?} is {value}, not a non-negative integer")]
    BadMultiplicity {
        degree: TriDegree,
        lambda: Partition,
        value: String,
    },
    #[error("kernel vector of degree {degree:?} is not killed by P_{alpha:?}")]
    Certificate { degree: TriDegree, alpha: [u32; 3] },
    #[error("commutator needs a positive {row}-exponent in {alpha:?}")]
    CommutatorPrecondition { alpha: [u32; 3], row: char },
    #[error(transparent)]
    Sym(#[from] SymError),
}
