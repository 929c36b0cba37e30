//! `dimer newton` — the strip's weight polynomial by one or all methods.

use laurent_core::{BigInt, LaurentPoly2};
use serde_json::json;

use crate::cli::{FormatArg, MethodArg, ShapeArg};
use crate::commands::{
    build_strip, convention_name, require_strip_n, BRUTE_LIMIT_NODES, DET_LIMIT_N,
};
use crate::error::{usage_err, verification_err, CliError};
use crate::render::{json_page, poly_csv, poly_json, pretty_poly};

pub fn run(
    shape: ShapeArg,
    n: u64,
    method: MethodArg,
    raw_signs: bool,
    dump_graph: bool,
    format: FormatArg,
) -> Result<String, CliError> {
    require_strip_n(n)?;

    if dump_graph {
        let mut dump = build_strip(shape, n)?.to_json_string();
        dump.push('\n');
        return Ok(dump);
    }

    let methods = match method {
        MethodArg::All => admissible_methods(n),
        single => {
            check_guard(single, n)?;
            vec![single]
        }
    };

    let polys = methods
        .iter()
        .map(|&m| compute(shape, n, m))
        .collect::<Result<Vec<_>, _>>()?;

    // Every route must land on the same polynomial before anything is shown.
    for (i, p) in polys.iter().enumerate().skip(1) {
        if p != &polys[0] {
            return Err(verification_err(format!(
                "methods disagree for {} n = {n}: {} != {}",
                shape.name(),
                method_name(methods[0]),
                method_name(methods[i]),
            )));
        }
    }

    let presented = if raw_signs {
        flip_z_convention(&polys[0], n)
    } else {
        polys[0].clone()
    };
    let verdict = (method == MethodArg::All).then(|| format!("AGREE({} methods)", methods.len()));

    Ok(match format {
        FormatArg::Text => {
            let mut out = pretty_poly(&presented);
            out.push('\n');
            if let Some(v) = &verdict {
                out.push_str(v);
                out.push('\n');
            }
            out
        }
        FormatArg::Json => {
            let mut value = json!({
                "command": "newton",
                "shape": shape.name(),
                "n": n,
                "convention": convention_name(raw_signs),
                "methods": methods.iter().map(|&m| method_name(m)).collect::<Vec<_>>(),
                "polynomial": poly_json(&presented),
            });
            if let Some(v) = verdict {
                value["verdict"] = json!(v);
            }
            json_page(&value)
        }
        FormatArg::Csv => poly_csv(&presented),
    })
}

/// Routes admissible at this size, in the fixed comparison order.
fn admissible_methods(n: u64) -> Vec<MethodArg> {
    let mut methods = vec![MethodArg::Formula, MethodArg::Recursion];
    if n <= DET_LIMIT_N {
        methods.push(MethodArg::Kasteleyn);
    }
    if 2 * n <= BRUTE_LIMIT_NODES {
        methods.push(MethodArg::Brute);
    }
    methods
}

fn check_guard(method: MethodArg, n: u64) -> Result<(), CliError> {
    match method {
        MethodArg::Kasteleyn if n > DET_LIMIT_N => Err(CliError::usage(format!(
            "the symbolic determinant is limited to n <= {DET_LIMIT_N}, got {n}"
        ))),
        MethodArg::Brute if 2 * n > BRUTE_LIMIT_NODES => Err(CliError::usage(format!(
            "exhaustive enumeration is limited to {BRUTE_LIMIT_NODES} nodes, i.e. n <= {}, got {n}",
            BRUTE_LIMIT_NODES / 2
        ))),
        _ => Ok(()),
    }
}

fn method_name(m: MethodArg) -> &'static str {
    match m {
        MethodArg::Formula => "formula",
        MethodArg::Recursion => "recursion",
        MethodArg::Kasteleyn => "kasteleyn",
        MethodArg::Brute => "brute",
        MethodArg::All => "all",
    }
}

/// Computes the weight polynomial by one concrete route, in the canonical
/// weight-signed convention.
pub fn compute(shape: ShapeArg, n: u64, method: MethodArg) -> Result<LaurentPoly2, CliError> {
    match (shape, method) {
        (ShapeArg::Square, MethodArg::Formula) => {
            strip_formulas::newton_sq(n).map_err(usage_err)
        }
        (ShapeArg::Hex, MethodArg::Formula) => strip_formulas::newton_hex(n).map_err(usage_err),
        (ShapeArg::Square, MethodArg::Recursion) => Ok(with_w_part(
            strip_formulas::newton_sq_recursive(n).map_err(usage_err)?,
        )),
        (ShapeArg::Hex, MethodArg::Recursion) => Ok(with_w_part(hex_z_part_from_chain(n))),
        (_, MethodArg::Kasteleyn) => {
            let graph = build_strip(shape, n)?;
            kasteleyn_engine::newton_polynomial_det(&graph).map_err(verification_err)
        }
        (_, MethodArg::Brute) => {
            let graph = build_strip(shape, n)?;
            Ok(match_oracle::enumerate_matchings(&graph)
                .map_err(usage_err)?
                .signed_polynomial())
        }
        (_, MethodArg::All) => unreachable!("All is expanded before dispatch"),
    }
}

fn with_w_part(z_part: LaurentPoly2) -> LaurentPoly2 {
    z_part
        .add(&LaurentPoly2::monomial(-1, 0, 1))
        .add(&LaurentPoly2::monomial(-1, 0, -1))
}

/// The hexagon z-part from the periodic monomer–dimer chain: the chain's
/// `q^p` coefficient lands on `z^(n/2 - p)` with the canonical parity sign.
fn hex_z_part_from_chain(n: u64) -> LaurentPoly2 {
    let chain = strip_formulas::md_cycle_single(n);
    let mut acc = LaurentPoly2::zero();
    for (p, c) in chain.iter().enumerate() {
        let e = (n / 2) as i64 - p as i64;
        let coeff = if e.rem_euclid(2) == 1 {
            -c.clone()
        } else {
            c.clone()
        };
        acc = acc.add(&LaurentPoly2::monomial(coeff, e, 0));
    }
    acc
}

/// Rescales the z-part by `(-1)^(n/2)`, turning the canonical weight-signed
/// polynomial into its historical presentation (and back).
pub fn flip_z_convention(p: &LaurentPoly2, n: u64) -> LaurentPoly2 {
    if (n / 2) % 2 == 0 {
        return p.clone();
    }
    LaurentPoly2::from_terms(p.terms().map(|(&(ez, ew), c)| {
        let coeff: BigInt = if ew == 0 { -c.clone() } else { c.clone() };
        ((ez, ew), coeff)
    }))
}
