use thiserror::Error;

use gruss_core::GrussError;

#[derive(Debug, Error)]
pub enum CliError {
    /// A cell could not be used; `row` and `column` are 1-based file positions.
    #[error("{path}:{row}:{column}: {message}")]
    Input {
        path: String,
        row: usize,
        column: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Config(String),

    #[error(transparent)]
    Core(#[from] GrussError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}
