//! Edge sign assignment satisfying the face flatness condition.

use strip_lattice::StripGraph;

/// A sign in `{+1, -1}` per edge id such that around every face of length
/// `2k` the product of edge signs is `-(-1)^k`: `-1` for faces of length
/// divisible by four, `+1` for the others.  With such signs the determinant
/// of the black-by-white adjacency block counts matchings with coherent signs
/// per exponent parity class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KasteleynOrientation {
    /// `signs[e]` is the sign of edge `e`.
    pub signs: Vec<i8>,
}

impl KasteleynOrientation {
    /// Product of edge signs around one face (darts traverse each boundary
    /// slot once; an edge bounding the face on both sides contributes twice).
    pub fn face_product(&self, graph: &StripGraph, face: usize) -> i8 {
        graph.faces()[face]
            .iter()
            .map(|&d| self.signs[graph.dart_edge(d)])
            .product()
    }

    /// Required sign product for a face of the given boundary length.
    pub fn face_target(len: usize) -> i8 {
        debug_assert!(len % 2 == 0);
        if len % 4 == 0 {
            -1
        } else {
            1
        }
    }

    /// True when every face product matches its target.
    pub fn satisfies_face_condition(&self, graph: &StripGraph) -> bool {
        (0..graph.faces().len())
            .all(|f| self.face_product(graph, f) == Self::face_target(graph.faces()[f].len()))
    }
}

/// Deterministically construct an orientation satisfying the face condition.
///
/// A breadth-first spanning forest (edges taken in ascending-id order) is
/// fixed at `+1`; the remaining edges become GF(2) unknowns, one linear
/// constraint per face.  On a torus the system has one more unknown than
/// equations and the constraint total is consistent (every edge borders
/// exactly two face slots), so a solution always exists; free variables are
/// pinned to `+1` to make the result reproducible.
pub fn find_orientation(graph: &StripGraph) -> KasteleynOrientation {
    let num_edges = graph.edges.len();
    if num_edges == 0 {
        return KasteleynOrientation { signs: Vec::new() };
    }

    // Breadth-first spanning forest, scanning neighbors in ascending edge id.
    let mut adjacency = vec![Vec::new(); graph.nodes.len()];
    for e in &graph.edges {
        adjacency[e.black].push((e.id, e.white));
        adjacency[e.white].push((e.id, e.black));
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    let mut in_tree = vec![false; num_edges];
    let mut visited = vec![false; graph.nodes.len()];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..graph.nodes.len() {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &(eid, u) in &adjacency[v] {
                if !visited[u] {
                    visited[u] = true;
                    in_tree[eid] = true;
                    queue.push_back(u);
                }
            }
        }
    }

    // Unknowns: one GF(2) variable per co-tree edge (true = sign -1).
    let mut var_of_edge = vec![usize::MAX; num_edges];
    let mut num_vars = 0;
    for e in 0..num_edges {
        if !in_tree[e] {
            var_of_edge[e] = num_vars;
            num_vars += 1;
        }
    }

    // One row per face: sum of co-tree incidences (mod 2) = face target bit.
    // Row layout: `num_vars` coefficient bools followed by the rhs bool.
    let mut rows = Vec::with_capacity(graph.faces().len());
    for cycle in graph.faces() {
        let mut row = vec![false; num_vars + 1];
        for &d in cycle {
            let e = graph.dart_edge(d);
            if var_of_edge[e] != usize::MAX {
                row[var_of_edge[e]] ^= true;
            }
        }
        row[num_vars] = KasteleynOrientation::face_target(cycle.len()) < 0;
        rows.push(row);
    }

    // Gaussian elimination over GF(2); free variables stay false.
    let mut assignment = vec![false; num_vars];
    let mut pivot_row_of_col = vec![usize::MAX; num_vars];
    let mut next_row = 0;
    for col in 0..num_vars {
        let Some(pivot) = (next_row..rows.len()).find(|&r| rows[r][col]) else {
            continue;
        };
        rows.swap(next_row, pivot);
        for r in 0..rows.len() {
            if r != next_row && rows[r][col] {
                let (pivot_row, other) = if r < next_row {
                    let (a, b) = rows.split_at_mut(next_row);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = rows.split_at_mut(r);
                    (&a[next_row], &mut b[0])
                };
                for c in col..=num_vars {
                    other[c] ^= pivot_row[c];
                }
            }
        }
        pivot_row_of_col[col] = next_row;
        next_row += 1;
    }
    for row in rows.iter().skip(next_row) {
        assert!(
            !row[num_vars],
            "face sign constraints must be consistent for a torus embedding"
        );
    }
    for col in 0..num_vars {
        if pivot_row_of_col[col] != usize::MAX {
            assignment[col] = rows[pivot_row_of_col[col]][num_vars];
        }
    }

    let signs = (0..num_edges)
        .map(|e| {
            if var_of_edge[e] != usize::MAX && assignment[var_of_edge[e]] {
                -1
            } else {
                1
            }
        })
        .collect();
    KasteleynOrientation { signs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use strip_lattice::{build_hexagon_strip, build_square_strip, build_square_torus};

    #[test]
    fn face_condition_holds_on_strips_and_tori() {
        for g in [
            build_square_strip(2).unwrap(),
            build_square_strip(4).unwrap(),
            build_square_strip(6).unwrap(),
            build_square_strip(8).unwrap(),
            build_hexagon_strip(2).unwrap(),
            build_hexagon_strip(4).unwrap(),
            build_hexagon_strip(6).unwrap(),
            build_hexagon_strip(10).unwrap(),
            build_square_torus(4, 4).unwrap(),
            build_square_torus(4, 6).unwrap(),
            build_square_torus(6, 6).unwrap(),
        ] {
            let orientation = find_orientation(&g);
            assert_eq!(orientation.signs.len(), g.edges.len());
            assert!(
                orientation.satisfies_face_condition(&g),
                "face condition failed on {:?} {}x{}",
                g.shape,
                g.m,
                g.n
            );
        }
    }

    #[test]
    fn quad_faces_want_minus_one_and_hex_faces_plus_one() {
        assert_eq!(KasteleynOrientation::face_target(4), -1);
        assert_eq!(KasteleynOrientation::face_target(6), 1);
        assert_eq!(KasteleynOrientation::face_target(8), -1);
    }

    #[test]
    fn orientation_is_deterministic() {
        let g = build_square_strip(6).unwrap();
        assert_eq!(find_orientation(&g), find_orientation(&g));
        let h = build_hexagon_strip(8).unwrap();
        assert_eq!(find_orientation(&h), find_orientation(&h));
    }

    #[test]
    fn gauge_flips_preserve_the_face_condition() {
        // Flipping every edge at one node multiplies each face product by
        // (+1) twice per visit, so the condition is preserved; this gives a
        // supply of genuinely different valid orientations for other tests.
        let g = build_square_strip(4).unwrap();
        let mut orientation = find_orientation(&g);
        for v in [0usize, 3, 5] {
            for e in g.edges_at(v) {
                orientation.signs[e] = -orientation.signs[e];
            }
            assert!(orientation.satisfies_face_condition(&g));
        }
        assert_ne!(orientation, find_orientation(&g));
    }

    #[test]
    fn empty_graph_gets_an_empty_orientation() {
        let g = strip_lattice::StripGraph::empty();
        let orientation = find_orientation(&g);
        assert!(orientation.signs.is_empty());
        assert!(orientation.satisfies_face_condition(&g));
    }
}
