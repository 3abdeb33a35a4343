//! The Iwahori–Hecke algebra `H_r` on its `T_w` basis, the permutation
//! modules `M^μ = x_μ H_r`, the homomorphisms `ψ^d_λμ` as matrices, and the
//! Specht submodule `S^λ ⊆ M^λ`.

mod algebra;
mod module;
mod specht;

use thiserror::Error;

use crate::combinatorics::{CombinatoricsError, Composition, Permutation};

pub use algebra::{HeckeAlgebra, HeckeElement};
pub use module::{double_coset_in_basis, psi_hom, HomMatrix, PermModule, Step};
pub use specht::{specht_basis, w_lambda, SpechtBasis};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("elements live in H_{0} and H_{1}")]
    DegreeMismatch(usize, usize),
    #[error("{d} is not in D_({lam}),({mu})")]
    NotDoubleCosetRep { lam: Composition, mu: Composition, d: Permutation },
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
}
