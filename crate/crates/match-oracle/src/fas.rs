//! Feedback-arc-set verification on the dual digraph.

use laurent_core::BigInt;
use std::collections::BTreeMap;
use strip_lattice::{build_dual, DualDigraph, StripGraph};

use crate::{enumerate::visit_matchings, OracleError};

/// True iff removing the dual arcs mirroring `matching` leaves `d` acyclic.
/// `matching` must be a perfect matching of `g`.
pub fn is_fas(g: &StripGraph, d: &DualDigraph, matching: &[usize]) -> Result<bool, OracleError> {
    let mut covered = vec![false; g.nodes.len()];
    let mut removed = vec![false; g.edges.len()];
    for &e in matching {
        let edge = g.edges.get(e).ok_or(OracleError::NotAMatching)?;
        for v in [edge.black, edge.white] {
            if covered[v] {
                return Err(OracleError::NotAMatching);
            }
            covered[v] = true;
        }
        removed[e] = true;
    }
    if !covered.iter().all(|&c| c) {
        return Err(OracleError::NotAMatching);
    }
    Ok(d.is_acyclic_without(&removed))
}

/// Number of perfect matchings whose dual-arc removal leaves the dual
/// acyclic, i.e. the number of minimal feedback arc sets of matching form.
pub fn count_fas(g: &StripGraph) -> Result<BigInt, OracleError> {
    Ok(fas_breakdown(g)?.fas_total)
}

/// Per-weight tally of matchings passing / failing the acyclicity test.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FasBreakdown {
    /// weight → (acyclic count, cyclic count)
    pub by_weight: BTreeMap<(i64, i64), (u64, u64)>,
    pub fas_total: BigInt,
}

pub fn fas_breakdown(g: &StripGraph) -> Result<FasBreakdown, OracleError> {
    let d = build_dual(g);
    let mut by_weight: BTreeMap<(i64, i64), (u64, u64)> = BTreeMap::new();
    let mut removed = vec![false; g.edges.len()];
    let mut fas_total = 0u64;
    visit_matchings(g, |matching, weight| {
        for &e in matching {
            removed[e] = true;
        }
        let acyclic = d.is_acyclic_without(&removed);
        for &e in matching {
            removed[e] = false;
        }
        let slot = by_weight.entry(weight).or_default();
        if acyclic {
            slot.0 += 1;
            fas_total += 1;
        } else {
            slot.1 += 1;
        }
    })?;
    Ok(FasBreakdown {
        by_weight,
        fas_total: fas_total.into(),
    })
}

/// Result of the exhaustive arc-subset search of [`minimum_fas_census`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FasCensus {
    pub arc_count: usize,
    /// Perfect-matching size of the primal (half its node count).
    pub matching_size: usize,
    /// Arc subsets smaller than `matching_size` whose removal is acyclic.
    pub smaller_acyclic_subsets: u64,
    /// Arc subsets of exactly `matching_size` whose removal is acyclic.
    pub minimum_acyclic_subsets: u64,
    /// Matchings passing [`is_fas`], for comparison.
    pub fas_matchings: u64,
}

const CENSUS_ARC_LIMIT: usize = 18;

/// Extra-slow cross-check: searches every arc subset of size up to the
/// matching size and tallies the acyclic ones, independently of any matching
/// structure. Guarded to small duals (≤ 18 arcs).
pub fn minimum_fas_census(g: &StripGraph) -> Result<FasCensus, OracleError> {
    let d = build_dual(g);
    let arcs = d.arcs.len();
    if arcs > CENSUS_ARC_LIMIT {
        return Err(OracleError::SubsetSearchTooLarge {
            arcs,
            limit: CENSUS_ARC_LIMIT,
        });
    }
    let matching_size = g.nodes.len() / 2;
    let mut smaller = 0u64;
    let mut minimum = 0u64;
    let mut removed = vec![false; arcs];
    for mask in 0u32..(1u32 << arcs) {
        let size = mask.count_ones() as usize;
        if size > matching_size {
            continue;
        }
        for (i, r) in removed.iter_mut().enumerate() {
            *r = mask & (1 << i) != 0;
        }
        if d.is_acyclic_without(&removed) {
            if size < matching_size {
                smaller += 1;
            } else {
                minimum += 1;
            }
        }
    }
    let fas_matchings = {
        let breakdown = fas_breakdown(g)?;
        let total: u64 = breakdown.by_weight.values().map(|&(a, _)| a).sum();
        total
    };
    Ok(FasCensus {
        arc_count: arcs,
        matching_size,
        smaller_acyclic_subsets: smaller,
        minimum_acyclic_subsets: minimum,
        fas_matchings,
    })
}
