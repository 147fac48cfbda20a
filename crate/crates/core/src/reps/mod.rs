//! Representation families on truncated Fock spaces and the numerical checks
//! run against them.

mod build;
mod checks;
mod family;
mod representation;

pub(crate) use build::{Blocks, RHO_CHARGES};
pub use build::build_rep;
pub use checks::{
    coherent_check, gram_equivalence, interior_indices, joint_spectrum_check, max_basis_residual,
    relation_residuals, words_up_to,
};
pub use family::{parse_angle, Family, FamilySpec, InducedKind};
pub use representation::{NumericPoly, Representation};
