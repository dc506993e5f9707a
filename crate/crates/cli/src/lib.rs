//! Library side of the `gruss` command-line tool: input parsing, run
//! configuration, command execution and the report document.

pub mod commands;
pub mod config;
pub mod error;
pub mod ingest;
pub mod report;

pub use commands::run;
pub use config::{Cli, Command};
pub use error::CliError;
pub use report::ReportDocument;
