use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    /// A numerical check did not meet its tolerance.
    #[error("numerical gate failed: {0}")]
    Gate(String),

    #[error(transparent)]
    Numeric(#[from] qspline::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("plot error: {0}")]
    Plot(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) | CliError::Csv(_) | CliError::Plot(_) => 1,
            CliError::Numeric(qspline::Error::Parse(_) | qspline::Error::Domain { .. }) => 1,
            CliError::Numeric(_) | CliError::Gate(_) => 2,
        }
    }
}
