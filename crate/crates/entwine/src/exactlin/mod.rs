//! Exact dense linear algebra over the rationals and prime fields.
//!
//! Everything downstream (coalgebras, categories, entwinings, solvers) is a
//! matrix over one of these fields. Tensor legs are always ordered row-major:
//! the basis vector `e_i (x) e_j` of a product of spaces of dimensions
//! `(m, n)` sits at index `i * n + j`, and [`Matrix::kron`] follows that
//! convention.

mod matrix;
mod scalar;
mod solve;

pub use matrix::{permute_legs, quotient_projection, swap_legs, AffineSolution, Matrix, QuotientSpace};
pub use scalar::{FieldSpec, Scalar};
pub use solve::{affine_space, flatten_residuals, solution_space};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactLinError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
}
