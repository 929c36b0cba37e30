//! `dimer fas` — minimal feedback arc sets of the square strip's dual
//! digraph, with optional exhaustive verification.

use laurent_core::BigInt;
use match_oracle::{enumerate_matchings, is_fas, newton_polygon, visit_matchings, PointClass};
use serde_json::json;
use strip_formulas::fas_count_formula;
use strip_lattice::{build_dual, zigzag_paths};

use crate::cli::{FormatArg, ShapeArg};
use crate::commands::{build_strip, convention_name, require_strip_n, FAS_VERIFY_LIMIT};
use crate::error::{usage_err, verification_err, CliError};
use crate::render::{comma_list, json_page};

/// One non-FAS matching: its weight and the zig-zag paths (by winding) that
/// survive removing its dual arcs.
struct BoundaryWitness {
    weight: (i64, i64),
    survivors: Vec<(i64, i64)>,
}

pub fn run(n: u64, verify: bool, format: FormatArg) -> Result<String, CliError> {
    require_strip_n(n)?;
    let count = fas_count_formula(n).map_err(usage_err)?;

    let verification = if verify {
        if n > FAS_VERIFY_LIMIT {
            return Err(CliError::usage(format!(
                "--verify enumerates all matchings and is limited to n <= {FAS_VERIFY_LIMIT}, got {n}"
            )));
        }
        Some(verify_count(n, &count)?)
    } else {
        None
    };

    Ok(match format {
        FormatArg::Text => {
            let mut out = format!("{count}\n");
            if let Some(v) = &verification {
                out.push_str(&format!(
                    "{} verified; {} boundary matchings each preserve >= 1 zig-zag path\n",
                    v.brute_count,
                    v.boundary.len()
                ));
                for w in &v.boundary {
                    out.push_str(&format!(
                        "weight ({}, {}): survivors {}\n",
                        w.weight.0,
                        w.weight.1,
                        comma_list(w.survivors.iter().map(|s| format!("({}, {})", s.0, s.1)))
                    ));
                }
            }
            out
        }
        FormatArg::Json => {
            let mut value = json!({
                "command": "fas",
                "n": n,
                "convention": convention_name(false),
                "count": count.to_string(),
            });
            if let Some(v) = &verification {
                value["verify"] = json!({
                    "brute_count": v.brute_count.to_string(),
                    "internal_count": v.internal_count.to_string(),
                    "internal_matchings_all_fas": true,
                    "boundary": v.boundary.iter().map(|w| json!({
                        "weight": [w.weight.0, w.weight.1],
                        "survivors": w.survivors.iter()
                            .map(|s| json!([s.0, s.1]))
                            .collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                });
            }
            json_page(&value)
        }
        FormatArg::Csv => format!("n,fas\n{n},{count}\n"),
    })
}

struct Verification {
    brute_count: BigInt,
    internal_count: BigInt,
    boundary: Vec<BoundaryWitness>,
}

/// Exhaustively re-derives the count and the boundary picture: every matching
/// at an internal polygon point must be a feedback arc set, every matching at
/// a boundary point must not be, and each of the latter must leave at least
/// one zig-zag path intact.
fn verify_count(n: u64, formula_count: &BigInt) -> Result<Verification, CliError> {
    let graph = build_strip(ShapeArg::Square, n)?;
    let dual = build_dual(&graph);
    let paths = zigzag_paths(&graph);
    let hist = enumerate_matchings(&graph).map_err(usage_err)?;
    let polygon = newton_polygon(&hist);

    let mut brute_count = BigInt::from(0);
    let mut internal_count = BigInt::from(0);
    let mut boundary = Vec::new();
    let mut violations: Vec<String> = Vec::new();

    visit_matchings(&graph, |matching, weight| {
        let acyclic = is_fas(&graph, &dual, matching).expect("visited sets are matchings");
        let class = polygon.classify(weight);
        if acyclic {
            brute_count += 1;
        }
        match class {
            Some(PointClass::Internal) => {
                internal_count += 1;
                if !acyclic {
                    violations.push(format!(
                        "matching at internal weight ({}, {}) is not a feedback arc set",
                        weight.0, weight.1
                    ));
                }
            }
            Some(PointClass::Boundary) => {
                if acyclic {
                    violations.push(format!(
                        "matching at boundary weight ({}, {}) is unexpectedly a feedback arc set",
                        weight.0, weight.1
                    ));
                } else {
                    let mut removed = vec![false; graph.edges.len()];
                    for &e in matching {
                        removed[e] = true;
                    }
                    let mut survivors: Vec<(i64, i64)> = paths
                        .iter()
                        .filter(|p| p.avoids(&removed))
                        .map(|p| p.winding)
                        .collect();
                    survivors.sort();
                    boundary.push(BoundaryWitness {
                        weight,
                        survivors,
                    });
                }
            }
            None => violations.push(format!(
                "weight ({}, {}) is outside the Newton polygon",
                weight.0, weight.1
            )),
        }
    })
    .map_err(usage_err)?;

    if let Some(first) = violations.into_iter().next() {
        return Err(verification_err(first));
    }
    if &brute_count != formula_count {
        return Err(verification_err(format!(
            "exhaustive count {brute_count} does not match the formula value {formula_count}"
        )));
    }
    if &internal_count != formula_count {
        return Err(verification_err(format!(
            "{internal_count} internal-polygon matchings but {formula_count} feedback arc sets"
        )));
    }
    if boundary.len() != 4 {
        return Err(verification_err(format!(
            "expected 4 boundary matchings, found {}",
            boundary.len()
        )));
    }
    if let Some(w) = boundary.iter().find(|w| w.survivors.is_empty()) {
        return Err(verification_err(format!(
            "boundary matching at ({}, {}) preserves no zig-zag path",
            w.weight.0, w.weight.1
        )));
    }
    boundary.sort_by_key(|w| w.weight);
    Ok(Verification {
        brute_count,
        internal_count,
        boundary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_counts_are_frozen() {
        assert_eq!(run(2, false, FormatArg::Text).unwrap(), "4\n");
        assert_eq!(run(4, false, FormatArg::Text).unwrap(), "32\n");
        assert_eq!(run(6, false, FormatArg::Text).unwrap(), "196\n");
    }

    #[test]
    fn verification_reports_the_boundary_picture() {
        let out = run(4, true, FormatArg::Text).unwrap();
        assert!(
            out.contains("32 verified; 4 boundary matchings each preserve >= 1 zig-zag path"),
            "{out}"
        );
        assert!(out.contains("weight (2, 0): survivors (-2, -1), (2, -1)"), "{out}");
        assert!(out.contains("weight (0, 1): survivors (2, -1), (2, 1)"), "{out}");
    }

    #[test]
    fn verification_is_guarded_and_wired_to_usage_errors() {
        assert!(matches!(run(3, false, FormatArg::Text), Err(CliError::Usage(_))));
        assert!(matches!(run(10, true, FormatArg::Text), Err(CliError::Usage(_))));
        assert!(run(10, false, FormatArg::Text).is_ok());
    }

    #[test]
    fn verification_passes_through_n_8() {
        for n in [2u64, 6, 8] {
            let out = run(n, true, FormatArg::Text).unwrap();
            assert!(out.contains("4 boundary matchings"), "n = {n}: {out}");
        }
    }
}
