//! File formats, JSON reports, threaded verification and the command line for
//! [`setramsey_core`].

pub mod cli;
mod error;
pub mod format;
pub mod report;
pub mod verify;

pub use error::AppError;
