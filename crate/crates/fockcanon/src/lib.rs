//! Front end for `fockcanon-core`: text formats for decomposition matrices,
//! an on-disk cache keyed by context and convention, and the `fockcanon`
//! command-line tool.

pub mod cache;
pub mod cli;
pub mod error;
pub mod format;

pub use error::CliError;
