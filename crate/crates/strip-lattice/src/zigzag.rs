//! Zig-zag strands: dart cycles that turn maximally one way at black nodes
//! and maximally the other way at white nodes.

use crate::graph::{Color, Dart, StripGraph};

/// A closed strand on the torus. `darts` lists the traversal in order;
/// `winding` is the signed number of z- and w-cut crossings, so it is the
/// strand's homology class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigZagPath {
    pub darts: Vec<Dart>,
    pub winding: (i64, i64),
}

impl ZigZagPath {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|&d| d / 2)
    }

    /// True when none of the strand's edges is flagged in `removed`
    /// (indexed by edge id): the strand survives deleting those dual arcs.
    pub fn avoids(&self, removed: &[bool]) -> bool {
        self.edge_ids().all(|e| !removed[e])
    }
}

/// Decomposes all darts of `g` into zig-zag strands. The successor of a dart
/// is read at its head: one step around the rotation counterclockwise at a
/// black head, clockwise at a white head, so consecutive turns alternate
/// maximal-left and maximal-right. Every dart lies in exactly one strand and
/// every edge in exactly two.
pub fn zigzag_paths(g: &StripGraph) -> Vec<ZigZagPath> {
    let mut pos = vec![(usize::MAX, usize::MAX); g.num_darts()];
    for v in 0..g.nodes.len() {
        for (i, &d) in g.rotation(v).iter().enumerate() {
            pos[d] = (v, i);
        }
    }
    let step = |d: Dart| -> Dart {
        let (v, i) = pos[d ^ 1]; // the reversed dart points out of d's head
        let rot = g.rotation(v);
        let deg = rot.len();
        match g.nodes[v].color {
            Color::Black => rot[(i + 1) % deg],
            Color::White => rot[(i + deg - 1) % deg],
        }
    };

    let mut seen = vec![false; g.num_darts()];
    let mut paths = Vec::new();
    for start in 0..g.num_darts() {
        if seen[start] {
            continue;
        }
        let mut darts = Vec::new();
        let mut winding = (0i64, 0i64);
        let mut d = start;
        loop {
            seen[d] = true;
            darts.push(d);
            let (z, w) = g.dart_crossing(d);
            winding.0 += z;
            winding.1 += w;
            d = step(d);
            if d == start {
                break;
            }
        }
        paths.push(ZigZagPath { darts, winding });
    }
    paths
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_hexagon_strip, build_square_strip, EdgeKind};

    fn sorted_windings(paths: &[ZigZagPath]) -> Vec<(i64, i64)> {
        let mut w: Vec<_> = paths.iter().map(|p| p.winding).collect();
        w.sort();
        w
    }

    fn edge_id(g: &StripGraph, kind: EdgeKind) -> usize {
        g.edges
            .iter()
            .find(|e| e.kind == kind)
            .expect("edge present")
            .id
    }

    fn removal(g: &StripGraph, kinds: &[EdgeKind]) -> Vec<bool> {
        let mut removed = vec![false; g.edges.len()];
        for &k in kinds {
            removed[edge_id(g, k)] = true;
        }
        removed
    }

    #[test]
    fn square_strip_has_four_strands_with_corner_to_corner_windings() {
        for n in [2usize, 4, 6, 8] {
            let g = build_square_strip(n).unwrap();
            let paths = zigzag_paths(&g);
            assert_eq!(paths.len(), 4);
            let h = (n / 2) as i64;
            assert_eq!(
                sorted_windings(&paths),
                vec![(-h, -1), (-h, 1), (h, -1), (h, 1)]
            );
            assert_eq!(paths.iter().map(ZigZagPath::len).sum::<usize>(), 8 * n);
        }
    }

    #[test]
    fn hexagon_strip_strand_windings_follow_the_triangle() {
        for n in [2usize, 4, 6, 10] {
            let g = build_hexagon_strip(n).unwrap();
            let paths = zigzag_paths(&g);
            assert_eq!(paths.len(), 4);
            let h = (n / 2) as i64;
            assert_eq!(
                sorted_windings(&paths),
                vec![(-h, 1), (0, -1), (0, -1), (h, 1)]
            );
            let sum = paths.iter().fold((0, 0), |acc, p| {
                (acc.0 + p.winding.0, acc.1 + p.winding.1)
            });
            assert_eq!(sum, (0, 0));
        }
    }

    #[test]
    fn every_dart_once_and_every_edge_twice() {
        for g in [build_square_strip(6).unwrap(), build_hexagon_strip(6).unwrap()] {
            let paths = zigzag_paths(&g);
            let mut dart_seen = vec![0usize; g.num_darts()];
            let mut edge_seen = vec![0usize; g.edges.len()];
            for p in &paths {
                for &d in &p.darts {
                    dart_seen[d] += 1;
                    edge_seen[d / 2] += 1;
                }
            }
            assert!(dart_seen.iter().all(|&c| c == 1));
            assert!(edge_seen.iter().all(|&c| c == 2));
        }
    }

    #[test]
    fn strands_alternate_node_colors() {
        let g = build_square_strip(4).unwrap();
        for p in &zigzag_paths(&g) {
            for pair in p.darts.windows(2) {
                assert_eq!(g.dart_head(pair[0]), g.dart_tail(pair[1]));
            }
            assert_eq!(g.dart_head(*p.darts.last().unwrap()), g.dart_tail(p.darts[0]));
        }
    }

    #[test]
    fn boundary_matchings_leave_strands_intact() {
        // Removing the arcs of the w-weight +1 matching of the n=4 square
        // strip (both rows matched horizontally, offsets 0 and 1) destroys the
        // two strands that run along those horizontals and preserves the
        // other two.
        let g = build_square_strip(4).unwrap();
        let paths = zigzag_paths(&g);
        let removed = removal(
            &g,
            &[
                EdgeKind::Horizontal { row: 0, col: 0 },
                EdgeKind::Horizontal { row: 0, col: 2 },
                EdgeKind::Horizontal { row: 1, col: 1 },
                EdgeKind::Horizontal { row: 1, col: 3 },
            ],
        );
        let preserved = paths.iter().filter(|p| p.avoids(&removed)).count();
        assert_eq!(preserved, 2);

        // The top-weight all-vertical matching also preserves exactly two.
        let all_up = removal(
            &g,
            &[
                EdgeKind::Vertical { row: 1, col: 0 },
                EdgeKind::Vertical { row: 0, col: 1 },
                EdgeKind::Vertical { row: 1, col: 2 },
                EdgeKind::Vertical { row: 0, col: 3 },
            ],
        );
        assert_eq!(paths.iter().filter(|p| p.avoids(&all_up)).count(), 2);

        // Empty removal keeps everything.
        let none = vec![false; g.edges.len()];
        assert_eq!(paths.iter().filter(|p| p.avoids(&none)).count(), 4);
    }

    #[test]
    fn hexagon_corner_matchings_preserve_at_least_one_strand() {
        let g = build_hexagon_strip(2).unwrap();
        let paths = zigzag_paths(&g);
        // all-vertical (z-weight 1), w-weight +1, w-weight -1 matchings
        let cases = [
            (
                vec![
                    EdgeKind::Vertical { row: 1, col: 0 },
                    EdgeKind::Vertical { row: 0, col: 1 },
                ],
                2usize,
            ),
            (
                vec![
                    EdgeKind::Horizontal { row: 0, col: 0 },
                    EdgeKind::Horizontal { row: 1, col: 1 },
                ],
                1,
            ),
            (
                vec![
                    EdgeKind::Horizontal { row: 0, col: 1 },
                    EdgeKind::Horizontal { row: 1, col: 0 },
                ],
                1,
            ),
        ];
        for (kinds, expected) in cases {
            let removed = removal(&g, &kinds);
            let preserved = paths.iter().filter(|p| p.avoids(&removed)).count();
            assert_eq!(preserved, expected);
            assert!(preserved >= 1);
        }
    }
}
