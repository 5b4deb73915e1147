//! Instance files, generators, benchmarking and the `cvd` command line tool.

pub mod bench;
pub mod format;
pub mod generate;
pub mod solve;
