//! Command-line plumbing and the verification suites behind `backedge verify`.

pub mod emit;
pub mod error;
pub mod input;
pub mod report;
pub mod suites;

pub use error::AppError;
pub use report::{Check, Status, VerificationReport};
pub use suites::{run_suite, Options, SUITES};
