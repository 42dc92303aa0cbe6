//! Library side of the `dec` command: JSON documents, command bodies and the
//! randomized verification harness.

pub mod commands;
pub mod documents;
pub mod error;
pub mod verify;

pub use error::CliError;
