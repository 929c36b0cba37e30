//! `dimer check` — the full identity and documented-deviation suite.
//!
//! Every item is expected to land in a definite state: the corrected
//! identities must hold, and each documented deviation of the historical
//! presentation must still be observable. An item passes when its expected
//! outcome is confirmed, so a clean run exits 0 even though it contains
//! deliberate negative results.

use laurent_core::{BigInt, LaurentPoly2};
use match_oracle::enumerate_matchings;
use serde_json::json;
use strip_formulas::{
    generating_function_check, md_cycle_single, md_cycle_three, md_free_three,
    newton_hex, newton_hex_printed, newton_sq, newton_sq_printed, newton_sq_recursive,
    CheckStatus, FugacityPoly3, GfReport, GfTarget,
};
use strip_lattice::{build_hexagon_strip, build_square_strip};

use crate::cli::FormatArg;
use crate::commands::{convention_name, newton::flip_z_convention};
use crate::error::{usage_err, verification_err, CliError};
use crate::render::json_page;

/// Expansion order shared by all series items.
const SERIES_ORDER: usize = 10;

struct CheckItem {
    name: &'static str,
    passed: bool,
    note: String,
}

pub fn run(format: FormatArg) -> Result<String, CliError> {
    if format == FormatArg::Csv {
        return Err(CliError::usage(
            "check has no tabular form; use --format text or json",
        ));
    }

    let items = all_items()?;
    let failed = items.iter().filter(|i| !i.passed).count();

    let report = match format {
        FormatArg::Text => {
            let mut out = String::new();
            for item in &items {
                out.push_str(&format!(
                    "{} {} — {}\n",
                    if item.passed { "PASS" } else { "FAIL" },
                    item.name,
                    item.note
                ));
            }
            out.push_str(&format!(
                "{} checks: {} passed, {} failed\n",
                items.len(),
                items.len() - failed,
                failed
            ));
            out
        }
        FormatArg::Json => json_page(&json!({
            "command": "check",
            "convention": convention_name(false),
            "items": items.iter().map(|i| json!({
                "name": i.name,
                "status": if i.passed { "pass" } else { "fail" },
                "note": i.note,
            })).collect::<Vec<_>>(),
            "summary": {
                "total": items.len(),
                "passed": items.len() - failed,
                "failed": failed,
            },
        })),
        FormatArg::Csv => unreachable!("rejected above"),
    };

    if failed > 0 {
        return Err(verification_err(format!(
            "{failed} of {} checks failed\n{report}",
            items.len()
        )));
    }
    Ok(report)
}

fn all_items() -> Result<Vec<CheckItem>, CliError> {
    let mut items = Vec::new();

    for (name, target) in [
        ("series-hexagon-cycle", GfTarget::HexQ),
        ("series-hexagon-strip", GfTarget::HexP),
        ("series-square-strip", GfTarget::SqP),
    ] {
        let reports = generating_function_check(target, SERIES_ORDER).map_err(usage_err)?;
        items.push(from_report(name, &reports[0], true));
    }

    let fas_reports = generating_function_check(GfTarget::Fas, SERIES_ORDER).map_err(usage_err)?;
    items.push(from_report("series-fas-corrected", &fas_reports[0], true));
    items.push(from_report("series-fas-printed", &fas_reports[1], false));

    items.push(cycle_seed_item()?);
    items.push(three_weight_seed_item()?);
    items.push(strip_seed_item()?);
    items.push(convention_item()?);
    Ok(items)
}

/// Wraps a generating-function report. When a failure is the documented
/// outcome, observing it is what passes the item.
fn from_report(name: &'static str, report: &GfReport, expect_pass: bool) -> CheckItem {
    let is_pass = matches!(report.status, CheckStatus::Pass);
    let note = if expect_pass {
        report.detail.clone()
    } else if is_pass {
        "expected the historical form to diverge, but it matched".to_string()
    } else {
        format!("documented deviation confirmed: {}", report.detail)
    };
    CheckItem {
        name,
        passed: is_pass == expect_pass,
        note,
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn poly1_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly1_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = a.to_vec();
    out.resize(a.len().max(b.len()), BigInt::from(0));
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    while out.last().is_some_and(|c| c == &BigInt::from(0)) {
        out.pop();
    }
    out
}

/// The pure-z slice of a signed weight polynomial.
fn z_part_of(p: &LaurentPoly2) -> LaurentPoly2 {
    LaurentPoly2::from_terms(
        p.terms()
            .filter(|(&(_, ew), _)| ew == 0)
            .map(|(&e, c)| (e, c.clone())),
    )
}

/// Periodic single-fugacity chain: the doubled seed `Q_0 = 2` versus the
/// historical `Q_0 = 1`, judged against the enumerated hexagon sector.
fn cycle_seed_item() -> Result<CheckItem, CliError> {
    let graph = build_hexagon_strip(4).map_err(usage_err)?;
    let sector = enumerate_matchings(&graph).map_err(usage_err)?.z_sector();
    let oracle: Vec<BigInt> = (0..=2)
        .map(|p| sector.get(&(2 - p)).cloned().unwrap_or_default())
        .collect();

    let corrected = md_cycle_single(4);
    // Step-two value (1 + 2q) Q_2 - q^2 Q_0 with the historical seed Q_0 = 1.
    let printed = poly1_sub(
        &poly1_mul(&[big(1), big(2)], &md_cycle_single(2)),
        &[big(0), big(0), big(1)],
    );

    Ok(CheckItem {
        name: "seed-cycle-single",
        passed: corrected == oracle && printed != oracle && printed == [big(1), big(4), big(3)],
        note: "periodic-chain seed Q_0 = 2 reproduces the enumerated n = 4 hexagon sector \
               (1, 4, 2 by dimer count); the historical Q_0 = 1 would give (1, 4, 3)"
            .to_string(),
    })
}

/// Three-weight chain: the doubled wrap seed `Q_2 = (1+u)(1+v) + 2t` versus
/// the historical `+t`, judged against the enumerated square z-part.
fn three_weight_seed_item() -> Result<CheckItem, CliError> {
    let graph = build_square_strip(4).map_err(usage_err)?;
    let oracle_z = z_part_of(&enumerate_matchings(&graph).map_err(usage_err)?.signed_polynomial());

    let q2 = md_cycle_three(2).map_err(usage_err)?;
    let q4 = md_cycle_three(4).map_err(usage_err)?;
    let t2 = FugacityPoly3::monomial(1, 0, 0, 2);
    let recursion_holds = q2.mul(&q2).sub(&t2.mul(&FugacityPoly3::constant(2))) == q4;
    let corrected_matches = q4.substitute_square_weights() == oracle_z;

    let halved = md_free_three(2).map_err(usage_err)?; // (1+u)(1+v) + t
    let printed_q4 = halved.mul(&halved).sub(&t2); // with Q_0 = 1
    let printed_fails = printed_q4.substitute_square_weights() != oracle_z;

    Ok(CheckItem {
        name: "seed-cycle-three-weight",
        passed: recursion_holds && corrected_matches && printed_fails,
        note: "cycle seeds Q_0 = 2 and Q_2 = (1+u)(1+v) + 2t satisfy the step-two recursion \
               and reproduce the enumerated n = 4 z-part; the historical +t seed does not"
            .to_string(),
    })
}

/// Square product recursion: seed `P_0 = 2` versus the historical `P_0 = 1`.
fn strip_seed_item() -> Result<CheckItem, CliError> {
    let graph = build_square_strip(4).map_err(usage_err)?;
    let oracle_z = z_part_of(&enumerate_matchings(&graph).map_err(usage_err)?.signed_polynomial());

    let p2 = newton_sq_recursive(2).map_err(usage_err)?;
    let corrected = newton_sq_recursive(4).map_err(usage_err)?;
    let printed = p2.mul(&p2).sub(&LaurentPoly2::constant(1)); // with P_0 = 1

    Ok(CheckItem {
        name: "seed-strip-product",
        passed: corrected == oracle_z && printed != oracle_z,
        note: "product-recursion seed P_0 = 2 reproduces the enumerated n = 4 z-part; \
               P_0 = 1 overshoots the constant coefficient by 1"
            .to_string(),
    })
}

/// The historical polynomials must differ from the weight-signed ones by
/// exactly the z-part factor `(-1)^(n/2)`, for both families, n = 2..12.
fn convention_item() -> Result<CheckItem, CliError> {
    let mut passed = true;
    for n in (2u64..=12).step_by(2) {
        let sq_ok = newton_sq_printed(n).map_err(usage_err)?
            == flip_z_convention(&newton_sq(n).map_err(usage_err)?, n);
        let hex_ok = newton_hex_printed(n).map_err(usage_err)?
            == flip_z_convention(&newton_hex(n).map_err(usage_err)?, n);
        passed &= sq_ok && hex_ok;
    }
    Ok(CheckItem {
        name: "convention-z-flip",
        passed,
        note: "for n = 2..12 both families' historical polynomials equal the weight-signed \
               ones with the z-part scaled by (-1)^(n/2)"
            .to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_item_passes() {
        let items = all_items().unwrap();
        assert_eq!(items.len(), 9);
        for item in &items {
            assert!(item.passed, "{} failed: {}", item.name, item.note);
        }
    }

    #[test]
    fn text_report_summarizes_the_run() {
        let out = run(FormatArg::Text).unwrap();
        assert!(out.ends_with("9 checks: 9 passed, 0 failed\n"), "{out}");
        assert_eq!(out.matches("PASS ").count(), 9, "{out}");
        assert!(out.contains("documented deviation confirmed"), "{out}");
    }

    #[test]
    fn csv_is_rejected() {
        assert!(matches!(run(FormatArg::Csv), Err(CliError::Usage(_))));
    }

    #[test]
    fn one_variable_polynomial_helpers_work() {
        // (1 + 2q)(1 + q) = 1 + 3q + 2q^2
        assert_eq!(
            poly1_mul(&[big(1), big(2)], &[big(1), big(1)]),
            [big(1), big(3), big(2)]
        );
        assert_eq!(poly1_sub(&[big(1), big(3)], &[big(1), big(3)]), [] as [BigInt; 0]);
    }
}
