//! Truncated Fock-space operators and structured tensor kernels.

mod factor;
mod norm;
mod scd;
mod sparse;
mod tensor;

pub use factor::{build_factor, c_entry, FactorKind, FactorMatrix};
pub use norm::{
    dense_norm, op_norm, power_norm, NormEstimate, NormMethod, DEFAULT_MAX_ITER, DEFAULT_TOL,
    DENSE_LIMIT,
};
pub use scd::{c_formula_check, theta_char, theta_scalar, SCdExpression};
pub use sparse::{nnz_bound, SparseOperator};
pub use tensor::{sparse_norm, TensorOperator, Term};
