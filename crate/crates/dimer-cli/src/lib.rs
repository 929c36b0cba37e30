//! Library half of the `dimer` command-line tool.
//!
//! The binary is a thin shell: [`cli::Cli`] parses the invocation,
//! [`commands::run`] produces the fully rendered report as a string, and the
//! caller writes it to the chosen sink. Keeping every subcommand behind a
//! string-returning function makes the whole surface testable in-process and
//! the output byte-deterministic.

pub mod cli;
pub mod commands;
pub mod error;
pub mod render;

pub use cli::Cli;
pub use commands::run;
pub use error::CliError;
