//! Spin words and their translation to and from matchings.

use std::fmt;

use strip_lattice::{Color, EdgeKind, Shape, StripGraph};

use crate::SpinError;

/// Direction of one black node's dimer, pointing at the white node it covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Spin {
    Up,
    Down,
    Left,
    Right,
}

/// Directions in word-symbol order, indexable by `spin as usize`.
const DIRECTIONS: [Spin; 4] = [Spin::Up, Spin::Down, Spin::Left, Spin::Right];

impl Spin {
    pub fn arrow(self) -> char {
        match self {
            Spin::Up => '↑',
            Spin::Down => '↓',
            Spin::Left => '←',
            Spin::Right => '→',
        }
    }
}

/// A perfect matching of a 2×n strip written as one direction per black node.
///
/// Black nodes are numbered 1..=n/2 along the top row and n/2+1..=n along the
/// bottom row, both left to right; the word lists the directions in that
/// order. The all-up word is the unique matching in which every dimer lies on
/// the vertical edge that crosses between the rows the "short way" (the wrap
/// edge on the top row, the interior edge on the bottom row).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinState {
    shape: Shape,
    word: Vec<Spin>,
}

fn check_shape(shape: Shape) -> Result<(), SpinError> {
    match shape {
        Shape::SquareStrip | Shape::HexagonStrip => Ok(()),
        Shape::SquareGeneral => Err(SpinError::UnsupportedGraph {
            shape: shape.as_str(),
        }),
    }
}

fn check_word_length(n: usize) -> Result<(), SpinError> {
    if n < 2 || n % 2 != 0 {
        return Err(SpinError::InvalidDimension {
            value: n as i64,
            requirement: "even and at least 2",
        });
    }
    Ok(())
}

impl SpinState {
    /// The all-up word on `n` black nodes: the unique matching of top weight.
    pub fn highest_weight(shape: Shape, n: usize) -> Result<SpinState, SpinError> {
        check_shape(shape)?;
        check_word_length(n)?;
        Ok(SpinState {
            shape,
            word: vec![Spin::Up; n],
        })
    }

    /// Wraps an explicit word. Checks the shape constraints (even length at
    /// least 2; no `down` on the hexagon strip) but not decodability — use
    /// [`matching_from_spin`] to test whether the word is a matching.
    pub fn from_word(shape: Shape, word: Vec<Spin>) -> Result<SpinState, SpinError> {
        check_shape(shape)?;
        check_word_length(word.len())?;
        if shape == Shape::HexagonStrip && word.contains(&Spin::Down) {
            return Err(SpinError::InvalidWord {
                reason: "the hexagon strip has no downward direction",
            });
        }
        Ok(SpinState { shape, word })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// Number of black nodes (= word length).
    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[Spin] {
        &self.word
    }

    /// Direction at the 1-based node index `x`.
    pub fn spin_at(&self, x: usize) -> Result<Spin, SpinError> {
        if x == 0 || x > self.word.len() {
            return Err(SpinError::IndexOutOfRange {
                x,
                n: self.word.len(),
            });
        }
        Ok(self.word[x - 1])
    }

    pub fn num_down(&self) -> usize {
        self.word.iter().filter(|&&s| s == Spin::Down).count()
    }

    pub fn num_left(&self) -> usize {
        self.word.iter().filter(|&&s| s == Spin::Left).count()
    }

    pub fn num_right(&self) -> usize {
        self.word.iter().filter(|&&s| s == Spin::Right).count()
    }

    /// Moves below the all-up word: p = #down + #left.
    pub fn level(&self) -> usize {
        self.num_down() + self.num_left()
    }

    /// Number of b-moves used: q = #left.
    pub fn b_move_count(&self) -> usize {
        self.num_left()
    }

    /// n/2 − level. For move-generated words this equals the vertical
    /// crossing weight of the decoded matching; the two fully horizontal
    /// wrap matchings (outside the move closure) break the identity.
    pub fn nominal_weight(&self) -> i64 {
        self.word.len() as i64 / 2 - self.level() as i64
    }

    /// Whether left and right symbols pair up, as they do in every
    /// move-generated word.
    pub fn is_balanced(&self) -> bool {
        self.num_left() == self.num_right()
    }
}

impl fmt::Display for SpinState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for &s in &self.word {
            write!(f, "{}", s.arrow())?;
        }
        write!(f, "⟩")
    }
}

/// Precomputed translation tables between node labels, directions, edge ids,
/// and white targets for one strip graph.
pub(crate) struct StripCode {
    n: usize,
    num_edges: usize,
    /// label (0-based) → per-direction edge id; absent directions are None.
    edge_of: Vec<[Option<usize>; 4]>,
    /// label (0-based) → per-direction white slot in 0..n.
    white_of: Vec<[Option<usize>; 4]>,
    /// edge id → (label, direction seen from the black endpoint).
    spin_of_edge: Vec<(usize, Spin)>,
}

impl StripCode {
    pub(crate) fn new(g: &StripGraph) -> Result<StripCode, SpinError> {
        check_shape(g.shape)?;
        let n = g.n;
        check_word_length(n)?;

        // Edge lookup by grid position: [col][row].
        let mut horizontal = vec![[None::<usize>; 2]; n];
        let mut vertical = vec![[None::<usize>; 2]; n];
        for e in &g.edges {
            match e.kind {
                EdgeKind::Horizontal { row, col } => horizontal[col][row] = Some(e.id),
                EdgeKind::Vertical { row, col } => vertical[col][row] = Some(e.id),
            }
        }

        // Compact white slots in node-index order.
        let mut white_slot = vec![usize::MAX; g.nodes.len()];
        let mut next = 0usize;
        for (v, node) in g.nodes.iter().enumerate() {
            if node.color == Color::White {
                white_slot[v] = next;
                next += 1;
            }
        }

        let mut edge_of = Vec::with_capacity(n);
        let mut white_of = Vec::with_capacity(n);
        for label in 0..n {
            let (row, col) = if label < n / 2 {
                (0usize, 2 * label)
            } else {
                (1usize, 2 * (label - n / 2) + 1)
            };
            debug_assert_eq!(g.nodes[g.node_index(row, col)].color, Color::Black);
            // Up is the vertical edge based in the other row (the one the
            // hexagon strip keeps); down is the parallel edge based in the
            // node's own row. Both reach the white node of the same column.
            let up = vertical[col][1 - row];
            let down = vertical[col][row];
            let right = horizontal[col][row];
            let left = horizontal[(col + n - 1) % n][row];
            let w_vertical = white_slot[g.node_index(1 - row, col)];
            let w_right = white_slot[g.node_index(row, (col + 1) % n)];
            let w_left = white_slot[g.node_index(row, (col + n - 1) % n)];
            debug_assert!(w_vertical < n && w_right < n && w_left < n);
            edge_of.push([up, down, left, right]);
            white_of.push([
                up.map(|_| w_vertical),
                down.map(|_| w_vertical),
                left.map(|_| w_left),
                right.map(|_| w_right),
            ]);
        }

        let mut spin_of_edge = vec![(usize::MAX, Spin::Up); g.edges.len()];
        for (label, dirs) in edge_of.iter().enumerate() {
            for (d, id) in dirs.iter().enumerate() {
                if let Some(id) = *id {
                    debug_assert_eq!(spin_of_edge[id].0, usize::MAX);
                    spin_of_edge[id] = (label, DIRECTIONS[d]);
                }
            }
        }
        debug_assert!(spin_of_edge.iter().all(|&(label, _)| label != usize::MAX));

        Ok(StripCode {
            n,
            num_edges: g.edges.len(),
            edge_of,
            white_of,
            spin_of_edge,
        })
    }

    /// Edge ids of the word's dimers (in label order), or why the word does
    /// not decode to a perfect matching.
    pub(crate) fn decode(&self, word: &[Spin]) -> Result<Vec<usize>, SpinError> {
        debug_assert_eq!(word.len(), self.n);
        let mut taken = vec![false; self.n];
        let mut edges = Vec::with_capacity(self.n);
        for (label, &s) in word.iter().enumerate() {
            let d = s as usize;
            let edge = self.edge_of[label][d].ok_or(SpinError::InvalidWord {
                reason: "a spin points along a direction with no edge on this shape",
            })?;
            let w = self.white_of[label][d].expect("edge and white tables are built together");
            if taken[w] {
                return Err(SpinError::NotAMatching {
                    reason: "two spins point at the same white node",
                });
            }
            taken[w] = true;
            edges.push(edge);
        }
        // n distinct whites out of n ⇒ every node is covered exactly once.
        Ok(edges)
    }

    /// Fast validity check for the generator: every white claimed once.
    pub(crate) fn decodes(&self, word: &[Spin]) -> bool {
        debug_assert!(self.n <= 64);
        let mut mask = 0u64;
        for (label, &s) in word.iter().enumerate() {
            match self.white_of[label][s as usize] {
                Some(w) => {
                    let bit = 1u64 << w;
                    if mask & bit != 0 {
                        return false;
                    }
                    mask |= bit;
                }
                None => return false,
            }
        }
        true
    }

    /// Reads one direction per black node off a perfect matching.
    pub(crate) fn encode(&self, matching: &[usize]) -> Result<Vec<Spin>, SpinError> {
        if matching.len() != self.n {
            return Err(SpinError::NotAMatching {
                reason: "the edge count differs from the number of black nodes",
            });
        }
        let mut word = vec![None::<Spin>; self.n];
        let mut white_seen = vec![false; self.n];
        for &e in matching {
            if e >= self.num_edges {
                return Err(SpinError::NotAMatching {
                    reason: "an edge id does not belong to the graph",
                });
            }
            let (label, s) = self.spin_of_edge[e];
            if word[label].is_some() {
                return Err(SpinError::NotAMatching {
                    reason: "a black node is covered twice",
                });
            }
            word[label] = Some(s);
            let w = self.white_of[label][s as usize].expect("edge and white tables are built together");
            if white_seen[w] {
                return Err(SpinError::NotAMatching {
                    reason: "a white node is covered twice",
                });
            }
            white_seen[w] = true;
        }
        word.into_iter()
            .collect::<Option<Vec<Spin>>>()
            .ok_or(SpinError::NotAMatching {
                reason: "a black node is uncovered",
            })
    }
}

/// Writes a perfect matching (edge ids) of a two-row strip as a spin word.
pub fn spin_from_matching(g: &StripGraph, matching: &[usize]) -> Result<SpinState, SpinError> {
    let code = StripCode::new(g)?;
    let word = code.encode(matching)?;
    Ok(SpinState {
        shape: g.shape,
        word,
    })
}

/// Decodes a spin word back to its matching's sorted edge ids.
pub fn matching_from_spin(g: &StripGraph, s: &SpinState) -> Result<Vec<usize>, SpinError> {
    if s.shape != g.shape || s.n() != g.n {
        return Err(SpinError::GraphMismatch {
            state_shape: s.shape.as_str(),
            state_n: s.n(),
            graph_shape: g.shape.as_str(),
            graph_n: g.n,
        });
    }
    let code = StripCode::new(g)?;
    let mut edges = code.decode(&s.word)?;
    edges.sort_unstable();
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use strip_lattice::{build_hexagon_strip, build_square_strip, build_square_torus};

    /// Edge ids of the all-up matching: the wrap vertical at even columns,
    /// the interior vertical at odd columns.
    fn all_up_edges(g: &StripGraph) -> Vec<usize> {
        g.edges
            .iter()
            .filter(|e| match e.kind {
                EdgeKind::Vertical { row, col } => {
                    if col % 2 == 0 {
                        row == 1
                    } else {
                        row == 0
                    }
                }
                EdgeKind::Horizontal { .. } => false,
            })
            .map(|e| e.id)
            .collect()
    }

    #[test]
    fn highest_weight_is_the_all_up_word() {
        let s = SpinState::highest_weight(Shape::SquareStrip, 4).unwrap();
        assert_eq!(s.word(), &[Spin::Up; 4]);
        assert_eq!(s.to_string(), "|↑↑↑↑⟩");
        assert_eq!(s.level(), 0);
        assert_eq!(s.nominal_weight(), 2);
        assert!(s.is_balanced());
        let h = SpinState::highest_weight(Shape::HexagonStrip, 2).unwrap();
        assert_eq!(h.to_string(), "|↑↑⟩");
    }

    #[test]
    fn constructors_reject_bad_inputs() {
        assert_eq!(
            SpinState::highest_weight(Shape::SquareStrip, 3).unwrap_err(),
            SpinError::InvalidDimension {
                value: 3,
                requirement: "even and at least 2"
            }
        );
        assert!(SpinState::highest_weight(Shape::SquareStrip, 0).is_err());
        assert_eq!(
            SpinState::highest_weight(Shape::SquareGeneral, 4).unwrap_err(),
            SpinError::UnsupportedGraph {
                shape: "square-general"
            }
        );
        assert_eq!(
            SpinState::from_word(Shape::HexagonStrip, vec![Spin::Down, Spin::Up]).unwrap_err(),
            SpinError::InvalidWord {
                reason: "the hexagon strip has no downward direction"
            }
        );
        assert!(SpinState::from_word(Shape::SquareStrip, vec![Spin::Down, Spin::Up]).is_ok());
    }

    #[test]
    fn all_vertical_matching_encodes_to_all_up() {
        for g in [build_square_strip(6).unwrap(), build_hexagon_strip(6).unwrap()] {
            let m = all_up_edges(&g);
            assert_eq!(m.len(), 6);
            let s = spin_from_matching(&g, &m).unwrap();
            assert_eq!(s, SpinState::highest_weight(g.shape, 6).unwrap());
            let mut sorted = m.clone();
            sorted.sort_unstable();
            assert_eq!(matching_from_spin(&g, &s).unwrap(), sorted);
        }
    }

    #[test]
    fn two_column_horizontal_words_decode_to_distinct_matchings() {
        let g = build_square_strip(2).unwrap();
        let rl = SpinState::from_word(Shape::SquareStrip, vec![Spin::Right, Spin::Left]).unwrap();
        let lr = SpinState::from_word(Shape::SquareStrip, vec![Spin::Left, Spin::Right]).unwrap();
        let m_rl = matching_from_spin(&g, &rl).unwrap();
        let m_lr = matching_from_spin(&g, &lr).unwrap();
        assert_ne!(m_rl, m_lr);
        for m in [&m_rl, &m_lr] {
            assert!(m
                .iter()
                .all(|&e| matches!(g.edges[e].kind, EdgeKind::Horizontal { .. })));
        }
    }

    #[test]
    fn mismatched_graph_and_state_are_rejected() {
        let g4 = build_square_strip(4).unwrap();
        let g6 = build_square_strip(6).unwrap();
        let hex4 = build_hexagon_strip(4).unwrap();
        let s = SpinState::highest_weight(Shape::SquareStrip, 4).unwrap();
        assert!(matching_from_spin(&g4, &s).is_ok());
        assert!(matches!(
            matching_from_spin(&g6, &s).unwrap_err(),
            SpinError::GraphMismatch { .. }
        ));
        assert!(matches!(
            matching_from_spin(&hex4, &s).unwrap_err(),
            SpinError::GraphMismatch { .. }
        ));
        let big = build_square_torus(4, 4).unwrap();
        assert_eq!(
            spin_from_matching(&big, &[]).unwrap_err(),
            SpinError::UnsupportedGraph {
                shape: "square-general"
            }
        );
    }

    #[test]
    fn non_matchings_are_rejected() {
        let g = build_square_strip(4).unwrap();
        // Wrong edge count.
        assert!(matches!(
            spin_from_matching(&g, &[0]).unwrap_err(),
            SpinError::NotAMatching { .. }
        ));
        // Unknown edge id.
        assert!(matches!(
            spin_from_matching(&g, &[0, 1, 2, 999]).unwrap_err(),
            SpinError::NotAMatching { .. }
        ));
        // The two parallel verticals of one column cover the same nodes.
        let col0: Vec<usize> = g
            .edges
            .iter()
            .filter(|e| matches!(e.kind, EdgeKind::Vertical { col: 0, .. }))
            .map(|e| e.id)
            .collect();
        assert_eq!(col0.len(), 2);
        let bad = vec![col0[0], col0[1], col0[0], col0[1]];
        assert!(matches!(
            spin_from_matching(&g, &bad).unwrap_err(),
            SpinError::NotAMatching { .. }
        ));
    }

    #[test]
    fn spin_at_checks_bounds() {
        let s = SpinState::highest_weight(Shape::SquareStrip, 4).unwrap();
        assert_eq!(s.spin_at(1).unwrap(), Spin::Up);
        assert_eq!(s.spin_at(4).unwrap(), Spin::Up);
        assert_eq!(
            s.spin_at(0).unwrap_err(),
            SpinError::IndexOutOfRange { x: 0, n: 4 }
        );
        assert_eq!(
            s.spin_at(5).unwrap_err(),
            SpinError::IndexOutOfRange { x: 5, n: 4 }
        );
    }
}
