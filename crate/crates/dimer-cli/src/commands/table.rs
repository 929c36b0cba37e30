//! `dimer table` — multiplicity tables, one row per even strip length.
//!
//! Text rows list the counts in ascending z-exponent. For the square strip
//! that is the native `p = 0..=n` order (exponent `p - n/2`); for the hexagon
//! strip the exponent is `n/2 - p`, so the stored row is reversed.

use laurent_core::BigInt;
use serde_json::json;
use strip_formulas::CoefficientTable;

use crate::cli::{FormatArg, ShapeArg};
use crate::commands::{convention_name, MAX_STRIP_N};
use crate::error::{usage_err, CliError};
use crate::render::json_page;

pub fn run(shape: ShapeArg, rows: u64, refined: bool, format: FormatArg) -> Result<String, CliError> {
    if rows == 0 || 2 * rows > MAX_STRIP_N {
        return Err(CliError::usage(format!(
            "rows must be between 1 and {}, got {rows}",
            MAX_STRIP_N / 2
        )));
    }
    if refined && shape == ShapeArg::Hex {
        return Err(CliError::usage(
            "the hexagon table has no q-refinement; drop --refined or use --shape square",
        ));
    }

    let tables: Vec<CoefficientTable> = (1..=rows)
        .map(|k| match shape {
            ShapeArg::Square => CoefficientTable::square(2 * k),
            ShapeArg::Hex => CoefficientTable::hexagon(2 * k),
        })
        .collect::<Result<_, _>>()
        .map_err(usage_err)?;

    Ok(match format {
        FormatArg::Text => render_text(shape, &tables, refined),
        FormatArg::Json => render_json(shape, &tables, refined),
        FormatArg::Csv => render_csv(&tables, refined),
    })
}

/// Marginal counts in ascending z-exponent order.
fn display_counts(shape: ShapeArg, table: &CoefficientTable) -> Vec<BigInt> {
    let mut counts = table.values().to_vec();
    if shape == ShapeArg::Hex {
        counts.reverse();
    }
    counts
}

fn join_counts(counts: &[BigInt]) -> String {
    counts
        .iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_text(shape: ShapeArg, tables: &[CoefficientTable], refined: bool) -> String {
    let mut out = String::new();
    for table in tables {
        if refined {
            out.push_str(&format!("n = {}:\n", table.n()));
            for (p, row) in table.refinement().expect("square refinement").iter().enumerate() {
                out.push_str(&format!("  p = {p}: {}\n", join_counts(row)));
            }
        } else {
            out.push_str(&format!(
                "n = {}: {}\n",
                table.n(),
                join_counts(&display_counts(shape, table))
            ));
        }
    }
    out
}

fn render_json(shape: ShapeArg, tables: &[CoefficientTable], refined: bool) -> String {
    let rows: Vec<_> = tables
        .iter()
        .map(|table| {
            let mut row = json!({
                "n": table.n(),
                "counts_by_p": table.values().iter().map(BigInt::to_string).collect::<Vec<_>>(),
                "counts_by_z_exponent": display_counts(shape, table)
                    .iter()
                    .map(BigInt::to_string)
                    .collect::<Vec<_>>(),
            });
            if refined {
                row["refined_by_p_q"] = json!(table
                    .refinement()
                    .expect("square refinement")
                    .iter()
                    .map(|r| r.iter().map(BigInt::to_string).collect::<Vec<_>>())
                    .collect::<Vec<_>>());
            }
            row
        })
        .collect();
    json_page(&json!({
        "command": "table",
        "convention": convention_name(false),
        "shape": shape.name(),
        "rows": rows,
    }))
}

fn render_csv(tables: &[CoefficientTable], refined: bool) -> String {
    let mut out = String::new();
    for (i, table) in tables.iter().enumerate() {
        let block = if refined {
            table.to_csv_refined_string().expect("square refinement")
        } else {
            table.to_csv_string()
        };
        if i == 0 {
            out.push_str(&block);
        } else {
            // One shared header line for the whole listing.
            out.push_str(block.split_once('\n').expect("header line").1);
        }
    }
    out
}
