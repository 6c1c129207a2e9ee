use std::fmt;

use serde::Serialize;

/// Exit codes shared by single queries and batch mode.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const INTERNAL: u8 = 1;
    pub const VALIDATION: u8 = 2;
    pub const ORACLE_MISMATCH: u8 = 3;
    pub const RESOURCE_EXHAUSTION: u8 = 4;
}

#[derive(Debug)]
pub enum CliError {
    Core(kostant_core::Error),
    MalformedRational { field: &'static str, text: String },
    MissingField(&'static str),
    UnexpectedField(&'static str),
    MalformedRecord(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::MalformedRational { .. } => "malformed_rational",
            CliError::MissingField(_) => "missing_field",
            CliError::UnexpectedField(_) => "unexpected_field",
            CliError::MalformedRecord(_) => "malformed_record",
            CliError::Io(_) => "io_error",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_resource_exhaustion() => exit::RESOURCE_EXHAUSTION,
            CliError::Core(kostant_core::Error::NegativeCount(_)) | CliError::Io(_) => exit::INTERNAL,
            _ => exit::VALIDATION,
        }
    }

    pub fn diagnostic(&self) -> Diagnostic {
        Diagnostic { error: self.code(), message: self.to_string(), exit_code: self.exit_code() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::MalformedRational { field, text } => {
                write!(f, "{field}: `{text}` is not an integer or p/q rational")
            }
            CliError::MissingField(name) => write!(f, "missing required field `{name}`"),
            CliError::UnexpectedField(name) => write!(f, "field `{name}` does not apply to this command"),
            CliError::MalformedRecord(msg) => write!(f, "malformed batch record: {msg}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<kostant_core::Error> for CliError {
    fn from(e: kostant_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Machine-readable error report written to stderr.
#[derive(Debug, Serialize)]
pub struct Diagnostic {
    pub error: &'static str,
    pub message: String,
    pub exit_code: u8,
}
