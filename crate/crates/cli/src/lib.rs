//! Command-line front end for `qprob-core`: file conversions between density
//! matrices, Choi matrices and probability vectors, CPTP reports, and
//! kinetic-equation trajectories.

pub mod args;
pub mod commands;
pub mod error;
pub mod format;

pub use args::Cli;
pub use commands::run;
pub use error::CliError;
