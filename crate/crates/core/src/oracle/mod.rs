//! Brute-force counterparts of the closed forms, and a harness that compares
//! the two over a grid.

mod enumerate;
pub mod fixture;
mod verify;

pub use enumerate::{
    decreasing_count_by_subsets, enumerate, gmax_oracle, has_decreasing_shape, oracle_genus,
    EnumSpec,
};
pub use verify::{verify_all, Failure, Limits, VerificationReport, Verifier};
