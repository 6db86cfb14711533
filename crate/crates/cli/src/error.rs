use std::fmt;
use std::process::ExitCode;

/// Failure of a CLI run, carrying its exit-code class.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input: bad state file, out-of-range arguments. Exit 2.
    Parse(String),
    /// A physical invariant failed. Exit 3.
    Invariant(dipcorr::Error),
    /// Reading or writing a file failed. Exit 4.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Parse(_) => 2,
            CliError::Invariant(_) => 3,
            CliError::Io(_) => 4,
        })
    }
}

impl From<dipcorr::Error> for CliError {
    fn from(e: dipcorr::Error) -> Self {
        use dipcorr::Error::*;
        match e {
            ParamOutOfRange { .. } | GridTooCoarse { .. } | InvalidWindow { .. } => CliError::Parse(e.to_string()),
            other => CliError::Invariant(other),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "invalid input: {msg}"),
            CliError::Invariant(e) => write!(f, "invariant violated [{}]: {e}", invariant_name(e)),
            CliError::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

/// Short machine-greppable name of the invariant behind `e`.
fn invariant_name(e: &dipcorr::Error) -> &'static str {
    use dipcorr::Error::*;
    match e {
        NotHermitian { .. } => "hermiticity",
        TraceNotOne { .. } => "unit-trace",
        NotPositive { .. } => "positivity",
        NoConvergence { .. } => "eigensolver-convergence",
        IncompleteProjectorSet { .. } => "projector-completeness",
        DegenerateInput => "nonzero-outcome-probability",
        InvalidXState(_) => "x-state-validity",
        StateInvariantViolated { source, .. } => invariant_name(source),
        NonPositiveData { .. } => "positive-data",
        ParamOutOfRange { .. } | GridTooCoarse { .. } | InvalidWindow { .. } => "argument-range",
    }
}
