//! File formats, argument parsing and reports for the `quasiflow` binary.
//!
//! Exit codes: 0 ok, 1 parse error, 2 invalid flow, 3 not a symmetry,
//! 4 model too large or not closed, 5 a structure check failed.

pub mod args;
pub mod commands;
pub mod error;
pub mod flowfile;
pub mod results;

pub use error::{CliError, CliResult};
pub use flowfile::FlowSpec;
