//! Command-line grammar of the `dimer` binary.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Exact dimer statistics on two-row torus strips: weight polynomials,
/// matching totals, feedback-arc-set counts, coefficient tables, series
/// identities, and the operator-generated level diagram.
#[derive(Debug, Parser)]
#[command(name = "dimer", version, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format (tables and term lists support csv; check does not).
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight polynomial of a 2×n strip, by one method or all of them.
    Newton {
        /// Strip family.
        #[arg(long, value_enum)]
        shape: ShapeArg,
        /// Strip length (even, at least 2).
        #[arg(long)]
        n: u64,
        /// Computation route; `all` cross-validates every admissible route.
        #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
        method: MethodArg,
        /// Present the historical sign convention (z-part scaled by
        /// (-1)^(n/2)) instead of the weight-signed one.
        #[arg(long)]
        raw_signs: bool,
        /// Dump the strip graph as JSON instead of computing the polynomial.
        #[arg(long)]
        dump_graph: bool,
    },
    /// Total number of perfect matchings, with evaluation breakdown and
    /// product-formula cross-check for square tori.
    Count {
        /// Strip family (`square` also accepts --m for an m×n torus).
        #[arg(long, value_enum)]
        shape: ShapeArg,
        /// Strip length (even, at least 2).
        #[arg(long)]
        n: u64,
        /// Optional number of rows: counts the m×n torus of squares instead
        /// of the two-row strip (square shape only; even, at least 2).
        #[arg(long)]
        m: Option<u64>,
    },
    /// Number of minimal feedback arc sets of the square strip's dual digraph.
    Fas {
        /// Strip length (even, at least 2).
        #[arg(long)]
        n: u64,
        /// Confirm the count by exhaustive acyclicity checks and list the
        /// boundary matchings with their surviving zig-zag paths (n ≤ 8).
        #[arg(long)]
        verify: bool,
    },
    /// Multiplicity table of the strip family, one row per even length.
    Table {
        /// Strip family.
        #[arg(long, value_enum)]
        shape: ShapeArg,
        /// Number of rows: lengths n = 2, 4, …, 2·ROWS.
        #[arg(long, default_value_t = 5, value_name = "ROWS")]
        rows: u64,
        /// Include the q-refined counts (square shape only).
        #[arg(long)]
        refined: bool,
    },
    /// Generating-function identities, expanded and checked to a given order.
    Series {
        /// Which series to expand and verify.
        #[arg(long, value_enum)]
        target: TargetArg,
        /// Expansion order (1 to 40).
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Run the full identity and documented-deviation suite.
    Check {
        /// Explicitly request every item (the default; kept for scripts).
        #[arg(long)]
        all: bool,
    },
    /// Operator-generated level diagram of the zero-winding matchings.
    Spin {
        /// Strip family.
        #[arg(long, value_enum)]
        shape: ShapeArg,
        /// Strip length (even, 2 to 12).
        #[arg(long)]
        n: u64,
        /// Emit the diagram in DOT format (text output only).
        #[arg(long)]
        dot: bool,
    },
}

/// Strip family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShapeArg {
    /// 2×n torus of squares.
    Square,
    /// 2×n torus of hexagons (square strip minus one vertical per column).
    Hex,
}

impl ShapeArg {
    pub fn name(self) -> &'static str {
        match self {
            ShapeArg::Square => "square",
            ShapeArg::Hex => "hex",
        }
    }
}

/// Computation route for the weight polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Closed-form coefficient tables.
    Formula,
    /// Product recursion (square) or cycle-chain substitution (hex).
    Recursion,
    /// Symbolic Kasteleyn determinant (n ≤ 64).
    Kasteleyn,
    /// Exhaustive matching enumeration (n ≤ 16).
    Brute,
    /// Every admissible route, cross-validated.
    All,
}

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
    Csv,
}

/// Series target selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    /// Cycle monomer–dimer chain, symbolic identity.
    Hexq,
    /// Hexagon-strip polynomial series, sampled numerically.
    Hexp,
    /// Square-strip polynomial series, sampled numerically.
    Sqp,
    /// Feedback-arc-set counting series, exact integer expansion.
    Fas,
}

impl TargetArg {
    pub fn name(self) -> &'static str {
        match self {
            TargetArg::Hexq => "hexq",
            TargetArg::Hexp => "hexp",
            TargetArg::Sqp => "sqp",
            TargetArg::Fas => "fas",
        }
    }
}
