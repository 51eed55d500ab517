//! Partitions, symmetric and quasisymmetric functions, three-parameter
//! q-polynomials and symmetric-group characters.

mod characters;
mod partition;
mod qpoly;
mod quasisym;
mod ring;
mod schur_q;
mod symfunc;

pub use characters::{character_value, class_representative, standard_tableaux_count};
pub use partition::{partitions_of, partitions_with_max_len, z_of, Composition, Partition};
pub use qpoly::{QPoly, QPoly1, QPoly2, QPoly3};
pub use quasisym::{expand_symmetric, fundamental, QuasiSym};
pub use ring::Coeff;
pub use schur_q::{is_schur_positive, render_schur_q3, schur_decompose_q3, schur_q3, schur_recompose_q3, two_row_at_ones};
pub use symfunc::{basis_to_monomial, inverse_z, kostka, plethystic_point_eval, Basis, SymFunc};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("not a partition: {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("not a composition: {0:?}")]
    InvalidComposition(Vec<u32>),
    #[error("composition of weight zero")]
    EmptyComposition,
    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },
    #[error("no substitution given for p_{0}")]
    MissingSubstitution(u32),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("malformed symmetric function JSON: {0}")]
    Json(String),
}
