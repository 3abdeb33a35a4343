//! Exact linear algebra: sparse matrices, rank, linear solves and Smith
//! normal form over the coefficient rings of [`crate::ring`].

pub mod elim;
mod matrix;
pub mod smith;
pub mod sparse;

use thiserror::Error;

pub use elim::{rank, row_space_basis, solve, Echelon};
pub use matrix::Matrix;
pub use smith::{smith_normal_form, SmithForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("operation needs a field, got {0}")]
    NotAField(String),
}
