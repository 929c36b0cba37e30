//! `dimer spin` — the operator-generated level diagram.
//!
//! Breadth-first closure of the all-up spin word under the two
//! weight-lowering moves, reported level by level (p = moves below the top,
//! refined by q = number of pair moves). The generated states are exactly
//! the zero-winding matchings, so the level totals reproduce the
//! multiplicity tables.

use serde_json::json;
use spin_potts::level_counts;
use strip_lattice::Shape;

use crate::cli::{FormatArg, ShapeArg};
use crate::commands::convention_name;
use crate::error::{usage_err, CliError};
use crate::render::json_page;

pub fn run(shape: ShapeArg, n: u64, dot: bool, format: FormatArg) -> Result<String, CliError> {
    let lattice_shape = match shape {
        ShapeArg::Square => Shape::SquareStrip,
        ShapeArg::Hex => Shape::HexagonStrip,
    };
    let diagram = level_counts(lattice_shape, n as usize).map_err(usage_err)?;

    if dot {
        if format != FormatArg::Text {
            return Err(CliError::usage(
                "--dot emits Graphviz source; use --format text",
            ));
        }
        return Ok(diagram.to_dot());
    }

    Ok(match format {
        FormatArg::Text => {
            let mut out = String::new();
            for level in diagram.levels() {
                let by_q = level
                    .by_q
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" ");
                out.push_str(&format!("level {}: {} (by q: {by_q})\n", level.p, level.total));
            }
            out.push_str(&format!("states: {}\n", diagram.num_states()));
            out
        }
        FormatArg::Json => json_page(&json!({
            "command": "spin",
            "convention": convention_name(false),
            "shape": shape.name(),
            "n": n,
            "levels": diagram.levels().iter().map(|l| json!({
                "p": l.p,
                "total": l.total,
                "by_q": l.by_q,
            })).collect::<Vec<_>>(),
            "states": diagram.num_states(),
        })),
        FormatArg::Csv => {
            let mut out = String::from("p,q,count\n");
            for level in diagram.levels() {
                for (q, count) in level.by_q.iter().enumerate() {
                    out.push_str(&format!("{},{q},{count}\n", level.p));
                }
            }
            out
        }
    })
}
