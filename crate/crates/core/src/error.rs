use thiserror::Error;

/// Errors raised by ideal construction, parsing and the analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not artinian: missing pure power x{missing}^{degree}")]
    NotArtinian { missing: usize, degree: u32 },

    #[error("duplicate generator {0}")]
    Duplicate(String),

    #[error("inhomogeneous: generator {monomial} has degree {found}, expected {expected}")]
    Inhomogeneous {
        monomial: String,
        expected: u32,
        found: u32,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("not a Togliatti system")]
    NotTogliatti,

    #[error("expected a one-dimensional certificate space, found dimension {0}")]
    CertificateDimension(usize),

    #[error("oracle guard exceeded: {what} is {actual}, limit {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("budget exceeded: enumeration needs {needed} subsets, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("unknown target `{name}`; valid targets: {}", valid.join(", "))]
    UnknownTarget { name: String, valid: Vec<String> },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_)
            | Error::NotArtinian { .. }
            | Error::Duplicate(_)
            | Error::Inhomogeneous { .. }
            | Error::Parse { .. }
            | Error::NotTogliatti
            | Error::CertificateDimension(_)
            | Error::GuardExceeded { .. } => 2,
            Error::BudgetExceeded { .. } => 3,
            Error::UnknownTarget { .. } => 4,
            Error::Io(_) | Error::Json(_) => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
