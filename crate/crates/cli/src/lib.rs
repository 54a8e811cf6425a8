//! Command-line front end: argument parsing, commands and output encodings.

pub mod args;
pub mod commands;
pub mod record;

pub use args::{Cli, Command, Format, Units};
pub use commands::{run, Outcome, UsageError, EXIT_USAGE, EXIT_VERIFY_FAILED};
pub use record::OutputRecord;
