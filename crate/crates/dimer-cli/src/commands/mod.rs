//! One module per subcommand, plus the shared guards and dispatcher.

pub mod check;
pub mod count;
pub mod fas;
pub mod newton;
pub mod series;
pub mod spin;
pub mod table;

use strip_lattice::{build_hexagon_strip, build_square_strip, StripGraph};

use crate::cli::{Cli, Command, ShapeArg};
use crate::error::{usage_err, CliError};

/// Interactivity cap on strip lengths for the unguarded closed-form routes.
pub const MAX_STRIP_N: u64 = 1024;

/// Side limit of the symbolic Kasteleyn matrix (one row per black node).
pub const DET_LIMIT_N: u64 = 64;

/// Node limit of the exhaustive matching enumerator.
pub const BRUTE_LIMIT_NODES: u64 = 32;

/// Largest strip length `fas --verify` accepts.
pub const FAS_VERIFY_LIMIT: u64 = 8;

/// Name of the sign convention recorded in machine-readable output.
pub fn convention_name(raw_signs: bool) -> &'static str {
    if raw_signs {
        "raw-historical"
    } else {
        "weight-signed"
    }
}

/// Validates a strip length: even, at least 2, within the interactivity cap.
pub fn require_strip_n(n: u64) -> Result<(), CliError> {
    if n < 2 || n % 2 != 0 {
        return Err(CliError::usage(format!(
            "n must be even and at least 2, got {n}"
        )));
    }
    if n > MAX_STRIP_N {
        return Err(CliError::usage(format!(
            "n must be at most {MAX_STRIP_N}, got {n}"
        )));
    }
    Ok(())
}

/// Builds the requested two-row strip graph.
pub fn build_strip(shape: ShapeArg, n: u64) -> Result<StripGraph, CliError> {
    match shape {
        ShapeArg::Square => build_square_strip(n as usize).map_err(usage_err),
        ShapeArg::Hex => build_hexagon_strip(n as usize).map_err(usage_err),
    }
}

/// Runs the parsed invocation and returns the rendered report.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Newton {
            shape,
            n,
            method,
            raw_signs,
            dump_graph,
        } => newton::run(*shape, *n, *method, *raw_signs, *dump_graph, format),
        Command::Count { shape, n, m } => count::run(*shape, *n, *m, format),
        Command::Fas { n, verify } => fas::run(*n, *verify, format),
        Command::Table {
            shape,
            rows,
            refined,
        } => table::run(*shape, *rows, *refined, format),
        Command::Series { target, order } => series::run(*target, *order, format),
        Command::Check { all: _ } => check::run(format),
        Command::Spin { shape, n, dot } => spin::run(*shape, *n, *dot, format),
    }
}
