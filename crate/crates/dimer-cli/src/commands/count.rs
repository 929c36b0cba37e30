//! `dimer count` — matching totals with evaluation breakdown and
//! product-formula cross-checks.

use kasteleyn_engine::{
    identify_a_values, matching_count, newton_polynomial_det, product_formula, total_matchings,
    ProductEvaluation,
};
use laurent_core::{rat, BigInt, BigRational};
use serde_json::json;
use strip_lattice::build_square_torus;

use crate::cli::{FormatArg, ShapeArg};
use crate::commands::{
    build_strip, convention_name, require_strip_n, BRUTE_LIMIT_NODES, DET_LIMIT_N,
};
use crate::error::{usage_err, verification_err, CliError};
use crate::render::{comma_list, json_page, rational_str};

/// Cap on torus cells, keeping the product evaluation interactive.
const MAX_TORUS_CELLS: u64 = 4096;

pub fn run(
    shape: ShapeArg,
    n: u64,
    m: Option<u64>,
    format: FormatArg,
) -> Result<String, CliError> {
    require_strip_n(n)?;
    match (shape, m) {
        (ShapeArg::Hex, Some(_)) => Err(CliError::usage(
            "--m applies only to square tori; the hexagon family is two-row only",
        )),
        (ShapeArg::Hex, None) => hex_strip(n, format),
        (ShapeArg::Square, None) => square_strip(n, format),
        (ShapeArg::Square, Some(m)) => square_torus(m, n, format),
    }
}

/// Pre-rounding drift of a product evaluation: how far the alternating
/// float combination sits from the nearest integer.
fn product_drift(pe: &ProductEvaluation) -> f64 {
    let total = -pe.a[0] + pe.a[1] + pe.a[2] + pe.a[3];
    (total - total.round()).abs()
}

fn product_text_line(pe: &ProductEvaluation) -> String {
    let mut line = format!(
        "product formula: {} (pre-rounding drift {:.1e})",
        pe.z,
        product_drift(pe)
    );
    if pe.escalated {
        line.push_str(" [escalated to exact fixed point]");
    }
    line.push('\n');
    line
}

fn product_json(pe: &ProductEvaluation) -> serde_json::Value {
    json!({
        "z": pe.z.to_string(),
        "pre_rounding_drift": product_drift(pe),
        "escalated": pe.escalated,
    })
}

fn agree_line(label: &str, value: &BigInt, reference: &BigInt) -> Result<String, CliError> {
    if value != reference {
        return Err(verification_err(format!(
            "{label} total {value} does not match {reference}"
        )));
    }
    Ok(format!("{label}: {value} (agree)\n"))
}

fn hex_strip(n: u64, format: FormatArg) -> Result<String, CliError> {
    let z = matching_count(&strip_formulas::newton_hex(n).map_err(usage_err)?);
    let enumeration = if 2 * n <= BRUTE_LIMIT_NODES {
        let graph = build_strip(ShapeArg::Hex, n)?;
        Some(match_oracle::enumerate_matchings(&graph).map_err(usage_err)?.total())
    } else {
        None
    };

    let mut lines = format!("Z = {z}\n");
    if let Some(e) = &enumeration {
        lines.push_str(&agree_line("enumeration", e, &z)?);
    }

    Ok(match format {
        FormatArg::Text => lines,
        FormatArg::Json => {
            let mut value = json!({
                "command": "count",
                "shape": "hex",
                "n": n,
                "convention": convention_name(false),
                "z": z.to_string(),
            });
            if let Some(e) = &enumeration {
                agree_line("enumeration", e, &z)?;
                value["enumeration"] = json!(e.to_string());
            }
            json_page(&value)
        }
        FormatArg::Csv => {
            let mut out = format!("quantity,value\nZ,{z}\n");
            if let Some(e) = &enumeration {
                agree_line("enumeration", e, &z)?;
                out.push_str(&format!("enumeration,{e}\n"));
            }
            out
        }
    })
}

fn square_strip(n: u64, format: FormatArg) -> Result<String, CliError> {
    let poly = strip_formulas::newton_sq(n).map_err(usage_err)?;
    let z = total_matchings(&poly).map_err(verification_err)?;
    let a = identify_a_values(&poly);
    check_a_identities(&a)?;

    let pe = product_formula(2, n as usize).map_err(verification_err)?;
    if pe.z != z {
        return Err(verification_err(format!(
            "product formula total {} does not match the evaluation bracket {z}",
            pe.z
        )));
    }

    let enumeration = if 2 * n <= BRUTE_LIMIT_NODES {
        let graph = build_strip(ShapeArg::Square, n)?;
        let e = match_oracle::enumerate_matchings(&graph).map_err(usage_err)?.total();
        agree_line("enumeration", &e, &z)?;
        Some(e)
    } else {
        None
    };

    Ok(match format {
        FormatArg::Text => {
            let mut out = format!("Z = {z}\n");
            out.push_str(&format!(
                "A = ({})\n",
                comma_list(a.iter().map(rational_str))
            ));
            out.push_str("A-identities: A2 = 2, A2 - A1 = 2, A4 - A3 = 2 (ok)\n");
            out.push_str(&product_text_line(&pe));
            if let Some(e) = &enumeration {
                out.push_str(&format!("enumeration: {e} (agree)\n"));
            }
            out
        }
        FormatArg::Json => {
            let mut value = json!({
                "command": "count",
                "shape": "square",
                "n": n,
                "convention": convention_name(false),
                "z": z.to_string(),
                "A": a.iter().map(rational_str).collect::<Vec<_>>(),
                "product": product_json(&pe),
            });
            if let Some(e) = &enumeration {
                value["enumeration"] = json!(e.to_string());
            }
            json_page(&value)
        }
        FormatArg::Csv => {
            let mut out = format!("quantity,value\nZ,{z}\n");
            for (i, v) in a.iter().enumerate() {
                out.push_str(&format!("A{},{}\n", i + 1, rational_str(v)));
            }
            out.push_str(&format!("product_Z,{}\n", pe.z));
            out.push_str(&format!("pre_rounding_drift,{:.1e}\n", product_drift(&pe)));
            if let Some(e) = &enumeration {
                out.push_str(&format!("enumeration,{e}\n"));
            }
            out
        }
    })
}

/// The evaluation identities that hold for every square torus: `A2 = 2`,
/// `A2 - A1 = 2`, `A4 - A3 = 2`, checked exactly.
fn check_a_identities(a: &[BigRational; 4]) -> Result<(), CliError> {
    let two = rat(2, 1);
    if a[1] != two || &a[1] - &a[0] != two || &a[3] - &a[2] != two {
        return Err(verification_err(format!(
            "A-value identities violated: A = ({})",
            comma_list(a.iter().map(rational_str))
        )));
    }
    Ok(())
}

fn square_torus(m: u64, n: u64, format: FormatArg) -> Result<String, CliError> {
    if m < 2 || m % 2 != 0 {
        return Err(CliError::usage(format!(
            "m must be even and at least 2, got {m}"
        )));
    }
    if m * n > MAX_TORUS_CELLS {
        return Err(CliError::usage(format!(
            "torus size m*n must be at most {MAX_TORUS_CELLS}, got {}",
            m * n
        )));
    }

    let pe = product_formula(m as usize, n as usize).map_err(verification_err)?;
    let z = pe.z.clone();

    let determinant = if m * n / 2 <= DET_LIMIT_N {
        let graph = build_square_torus(m as usize, n as usize).map_err(usage_err)?;
        let poly = newton_polynomial_det(&graph).map_err(verification_err)?;
        Some(matching_count(&poly))
    } else {
        None
    };
    let enumeration = if m * n <= BRUTE_LIMIT_NODES {
        let graph = build_square_torus(m as usize, n as usize).map_err(usage_err)?;
        Some(match_oracle::enumerate_matchings(&graph).map_err(usage_err)?.total())
    } else {
        None
    };

    let mut text = format!("Z = {z}\n");
    text.push_str(&product_text_line(&pe));
    if let Some(d) = &determinant {
        text.push_str(&agree_line("determinant", d, &z)?);
    }
    if let Some(e) = &enumeration {
        text.push_str(&agree_line("enumeration", e, &z)?);
    }

    Ok(match format {
        FormatArg::Text => text,
        FormatArg::Json => {
            let mut value = json!({
                "command": "count",
                "shape": "square",
                "m": m,
                "n": n,
                "convention": convention_name(false),
                "z": z.to_string(),
                "product": product_json(&pe),
            });
            if let Some(d) = &determinant {
                value["determinant"] = json!(d.to_string());
            }
            if let Some(e) = &enumeration {
                value["enumeration"] = json!(e.to_string());
            }
            json_page(&value)
        }
        FormatArg::Csv => {
            let mut out = format!("quantity,value\nZ,{z}\n");
            out.push_str(&format!("product_Z,{}\n", pe.z));
            out.push_str(&format!("pre_rounding_drift,{:.1e}\n", product_drift(&pe)));
            if let Some(d) = &determinant {
                out.push_str(&format!("determinant,{d}\n"));
            }
            if let Some(e) = &enumeration {
                out.push_str(&format!("enumeration,{e}\n"));
            }
            out
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_strip_report_carries_the_known_values() {
        let out = run(ShapeArg::Square, 2, None, FormatArg::Text).unwrap();
        assert!(out.starts_with("Z = 8\n"), "{out}");
        assert!(out.contains("A = (0, 2, 2, 4)"), "{out}");
        assert!(out.contains("enumeration: 8 (agree)"), "{out}");

        let out4 = run(ShapeArg::Square, 4, None, FormatArg::Text).unwrap();
        assert!(out4.starts_with("Z = 36\n"), "{out4}");
        assert!(out4.contains("A = (0, 2, 16, 18)"), "{out4}");
    }

    #[test]
    fn hexagon_and_torus_totals_are_cross_checked() {
        let hex = run(ShapeArg::Hex, 4, None, FormatArg::Text).unwrap();
        assert!(hex.starts_with("Z = 9\n"), "{hex}");
        assert!(hex.contains("enumeration: 9 (agree)"), "{hex}");

        let torus = run(ShapeArg::Square, 4, Some(4), FormatArg::Text).unwrap();
        assert!(torus.starts_with("Z = 272\n"), "{torus}");
        assert!(torus.contains("determinant: 272 (agree)"), "{torus}");
        assert!(torus.contains("enumeration: 272 (agree)"), "{torus}");
    }

    #[test]
    fn torus_m2_reduces_to_the_strip_total() {
        let out = run(ShapeArg::Square, 6, Some(2), FormatArg::Text).unwrap();
        assert!(out.starts_with("Z = 200\n"), "{out}");
    }

    #[test]
    fn usage_guards_reject_bad_dimensions() {
        assert!(matches!(
            run(ShapeArg::Square, 3, None, FormatArg::Text),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            run(ShapeArg::Square, 4, Some(3), FormatArg::Text),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            run(ShapeArg::Hex, 4, Some(4), FormatArg::Text),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn drift_stays_within_the_rounding_tolerance_up_to_n_20() {
        for n in (2u64..=20).step_by(2) {
            let pe = product_formula(2, n as usize).unwrap();
            assert!(!pe.escalated, "n = {n}");
            assert!(product_drift(&pe) < 1e-6, "n = {n}: {}", product_drift(&pe));
        }
    }
}
