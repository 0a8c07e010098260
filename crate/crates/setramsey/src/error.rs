use std::io;
use std::path::PathBuf;

use serde_json::json;
use setramsey_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("{0}")]
    Usage(String),
    #[error("malformed input at line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl AppError {
    pub fn kind(&self) -> &'static str {
        match self {
            AppError::Usage(_) => "usage",
            AppError::Malformed { .. } => "malformed_input",
            AppError::Io { .. } => "io",
            AppError::Core(CoreError::BudgetExceeded { .. }) => "budget_exceeded",
            AppError::Core(_) => "precondition",
        }
    }

    /// Process exit status. 1 is reserved for "a monochromatic clique was found".
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Usage(_) => 2,
            AppError::Malformed { .. } => 3,
            AppError::Core(CoreError::BudgetExceeded { .. }) => 4,
            AppError::Core(_) => 5,
            AppError::Io { .. } => 6,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "error": { "kind": self.kind(), "code": self.exit_code(), "message": self.to_string() } })
    }
}
