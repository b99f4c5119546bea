//! Command-line front end for the hybrid-number weak Hopf algebra engine.

pub mod app;
pub mod expr;
pub mod report;

pub use app::{check_structure, dispatch, run, Cli, Format, EXIT_FAILED_CHECK, EXIT_OK, EXIT_USAGE};
