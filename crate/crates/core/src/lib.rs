//! Exact and numerical machinery for the q-deformed polynomial algebra on the
//! quantum 2x2 matrix ball: normal-form rewriting, Fock-space representations,
//! the coproduct-type homomorphisms, the boundary ideal and unitary dilations.

pub mod algebra;
pub mod boundary;
pub mod config;
pub mod dilation;
pub mod error;
pub mod fockops;
pub mod homs;
pub mod report;
pub mod reps;
pub mod scalar;
pub mod suites;

pub use error::{Error, Result};
pub use report::{CheckReport, ItemResult, Verdict};
pub use scalar::{Binding, Scalar};
pub use config::{OutputFormat, RunConfig};
pub use suites::{run_suite, Suite, SuiteReport};
