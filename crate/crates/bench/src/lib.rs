//! Shared inputs for the benchmarks.

use qball_core::boundary::{holomorphic_samples, PolySample};
use qball_core::reps::{build_rep, Family, FamilySpec, Representation};

pub const Q: f64 = 0.5;

pub fn fock(n: usize) -> Representation {
    build_rep(&FamilySpec::new(Family::PiF), n, Q).expect("fock representation")
}

pub fn matrix_sample(seed: u64) -> PolySample {
    holomorphic_samples(1, 2, 3, seed).expect("sample").remove(0)
}
