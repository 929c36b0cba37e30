//! Exhaustive perfect-matching enumeration.

use rayon::prelude::*;
use strip_lattice::{Color, StripGraph};

use crate::{histogram::WeightHistogram, OracleError};

/// Exhaustive search is limited to this many nodes.
pub const MAX_NODES: usize = 32;

/// Incidence data for the recursive search: blacks in ascending node order,
/// each with its incident `(edge id, white node, e_z, e_w)` list.
struct Searcher {
    blacks: Vec<Vec<(usize, usize, i8, i8)>>,
    white_count: usize,
}

impl Searcher {
    fn new(g: &StripGraph) -> Result<Self, OracleError> {
        if g.nodes.len() > MAX_NODES {
            return Err(OracleError::TooLarge {
                nodes: g.nodes.len(),
            });
        }
        let mut blacks = Vec::new();
        for (v, node) in g.nodes.iter().enumerate() {
            if node.color == Color::Black {
                blacks.push(
                    g.edges_at(v)
                        .map(|e| {
                            let edge = &g.edges[e];
                            (e, edge.white, edge.e_z, edge.e_w)
                        })
                        .collect(),
                );
            }
        }
        let white_count = g.nodes.len() - blacks.len();
        Ok(Searcher {
            blacks,
            white_count,
        })
    }

    /// Matches blacks in order `k, k+1, …`; `used` is a bitmask of matched
    /// white nodes.
    fn fill_histogram(&self, k: usize, used: u64, wz: i64, ww: i64, hist: &mut WeightHistogram) {
        if k == self.blacks.len() {
            hist.record((wz, ww), 1);
            return;
        }
        for &(_, white, ez, ew) in &self.blacks[k] {
            let bit = 1u64 << white;
            if used & bit == 0 {
                self.fill_histogram(k + 1, used | bit, wz + ez as i64, ww + ew as i64, hist);
            }
        }
    }

    fn visit(
        &self,
        k: usize,
        used: u64,
        wz: i64,
        ww: i64,
        stack: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize], (i64, i64)),
    ) {
        if k == self.blacks.len() {
            f(stack, (wz, ww));
            return;
        }
        for &(edge, white, ez, ew) in &self.blacks[k] {
            let bit = 1u64 << white;
            if used & bit == 0 {
                stack.push(edge);
                self.visit(k + 1, used | bit, wz + ez as i64, ww + ew as i64, stack, f);
                stack.pop();
            }
        }
    }
}

/// Counts every perfect matching of `g` by weight. The search branches over
/// the first black node's edges in parallel; partial histograms are merged by
/// commutative addition, so the result is independent of scheduling.
pub fn enumerate_matchings(g: &StripGraph) -> Result<WeightHistogram, OracleError> {
    let s = Searcher::new(g)?;
    if s.blacks.len() != s.white_count {
        return Ok(WeightHistogram::new()); // unbalanced: no perfect matchings
    }
    if s.blacks.is_empty() {
        let mut hist = WeightHistogram::new();
        hist.record((0, 0), 1); // the empty matching
        return Ok(hist);
    }
    let parts: Vec<WeightHistogram> = s.blacks[0]
        .par_iter()
        .map(|&(_, white, ez, ew)| {
            let mut hist = WeightHistogram::new();
            s.fill_histogram(1, 1u64 << white, ez as i64, ew as i64, &mut hist);
            hist
        })
        .collect();
    let mut hist = WeightHistogram::new();
    for part in parts {
        hist.merge(part);
    }
    Ok(hist)
}

/// Calls `f` once per perfect matching with the matching's edge ids (in
/// black-node order) and its weight. Sequential and deterministic.
pub fn visit_matchings(
    g: &StripGraph,
    mut f: impl FnMut(&[usize], (i64, i64)),
) -> Result<(), OracleError> {
    let s = Searcher::new(g)?;
    if s.blacks.len() != s.white_count {
        return Ok(());
    }
    let mut stack = Vec::with_capacity(s.blacks.len());
    s.visit(0, 0, 0, 0, &mut stack, &mut f);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use strip_lattice::{build_hexagon_strip, build_square_strip, build_square_torus};

    #[test]
    fn empty_graph_has_one_empty_matching() {
        let hist = enumerate_matchings(&StripGraph::empty()).unwrap();
        assert_eq!(hist.total(), 1.into());
        assert_eq!(hist.get(0, 0), 1.into());
        let mut calls = 0;
        visit_matchings(&StripGraph::empty(), |edges, weight| {
            calls += 1;
            assert!(edges.is_empty());
            assert_eq!(weight, (0, 0));
        })
        .unwrap();
        assert_eq!(calls, 1);
    }

    #[test]
    fn size_guard_rejects_large_graphs() {
        let g = build_square_torus(6, 6).unwrap();
        assert_eq!(
            enumerate_matchings(&g).unwrap_err(),
            OracleError::TooLarge { nodes: 36 }
        );
    }

    #[test]
    fn parallel_and_sequential_enumeration_agree() {
        for g in [
            build_square_strip(6).unwrap(),
            build_hexagon_strip(8).unwrap(),
            build_square_torus(4, 4).unwrap(),
        ] {
            let parallel = enumerate_matchings(&g).unwrap();
            let mut sequential = WeightHistogram::new();
            visit_matchings(&g, |_, weight| sequential.record(weight, 1)).unwrap();
            assert_eq!(parallel, sequential);
        }
    }

    #[test]
    fn visited_edge_sets_are_perfect_matchings() {
        let g = build_square_strip(4).unwrap();
        visit_matchings(&g, |edges, weight| {
            let mut covered = vec![false; g.nodes.len()];
            let mut wz = 0i64;
            let mut ww = 0i64;
            for &e in edges {
                let edge = &g.edges[e];
                for v in [edge.black, edge.white] {
                    assert!(!covered[v], "node covered twice");
                    covered[v] = true;
                }
                wz += edge.e_z as i64;
                ww += edge.e_w as i64;
            }
            assert!(covered.iter().all(|&c| c));
            assert_eq!((wz, ww), weight);
        })
        .unwrap();
    }
}
