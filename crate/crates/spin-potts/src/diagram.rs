//! Level-by-level generation of the move closure from the all-up word.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use strip_lattice::{build_hexagon_strip, build_square_strip, Shape};

use crate::moves::{db_partner, DbSide};
use crate::state::{Spin, SpinState, StripCode};
use crate::SpinError;

/// Exhaustive generation is limited to this many black nodes.
pub const GENERATION_LIMIT: usize = 12;

/// One move in the level diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// a-move: up → down at x.
    A { x: usize },
    /// b-move: the up pair (x, y) → a left/right pair.
    B { x: usize, y: usize, side: DbSide },
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::A { x } => write!(f, "d_a({x})"),
            Move::B { x, y, .. } => write!(f, "d_b({x},{y})"),
        }
    }
}

/// A move arrow between two generated states, by state index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveArrow {
    pub from: usize,
    pub to: usize,
    pub mov: Move,
}

/// One generated state with its level coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramState {
    pub state: SpinState,
    /// Moves below the all-up word: p = #down + #left.
    pub p: usize,
    /// b-moves used: q = #left.
    pub q: usize,
}

/// State totals for one level, refined by the number of b-moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelCount {
    pub p: usize,
    pub total: u64,
    /// Index q = number of b-moves; length p + 1.
    pub by_q: Vec<u64>,
}

/// Breadth-first closure of the all-up word under the two moves. States are
/// stored in discovery order (level by level); every valid move application
/// is recorded as an arrow, so repeated routes to one state all appear.
#[derive(Debug, Clone)]
pub struct LevelDiagram {
    shape: Shape,
    n: usize,
    states: Vec<DiagramState>,
    arrows: Vec<MoveArrow>,
    levels: Vec<LevelCount>,
}

/// Packs a word two bits per symbol for deduplication.
fn word_key(word: &[Spin]) -> u64 {
    debug_assert!(word.len() <= 32);
    word.iter()
        .fold(0u64, |acc, &s| (acc << 2) | s as u64)
}

fn level_of(word: &[Spin]) -> (usize, usize) {
    let down = word.iter().filter(|&&s| s == Spin::Down).count();
    let left = word.iter().filter(|&&s| s == Spin::Left).count();
    (down + left, left)
}

/// All valid moves out of `word`, in a fixed order: a-moves by x, then
/// b-moves by (x, east/west).
fn candidate_moves(shape: Shape, word: &[Spin]) -> Vec<(Move, Vec<Spin>)> {
    let n = word.len();
    let mut out = Vec::new();
    if shape == Shape::SquareStrip {
        for x in 1..=n {
            if word[x - 1] == Spin::Up {
                let mut w = word.to_vec();
                w[x - 1] = Spin::Down;
                out.push((Move::A { x }, w));
            }
        }
    }
    for x in 1..=n / 2 {
        if word[x - 1] != Spin::Up {
            continue;
        }
        for side in [DbSide::East, DbSide::West] {
            let y = db_partner(n, x, side);
            if word[y - 1] != Spin::Up {
                continue;
            }
            let (dx, dy) = match side {
                DbSide::East => (Spin::Right, Spin::Left),
                DbSide::West => (Spin::Left, Spin::Right),
            };
            let mut w = word.to_vec();
            w[x - 1] = dx;
            w[y - 1] = dy;
            out.push((Move::B { x, y, side }, w));
        }
    }
    out
}

/// Generates every state reachable from the all-up word, grouped into levels
/// p = 0, 1, … and refined by the number of b-moves q. Deterministic: states
/// are discovered in a fixed order and deduplicated by word.
pub fn level_counts(shape: Shape, n: usize) -> Result<LevelDiagram, SpinError> {
    if n > GENERATION_LIMIT {
        return Err(SpinError::GenerationTooLarge {
            n,
            limit: GENERATION_LIMIT,
        });
    }
    let start = SpinState::highest_weight(shape, n)?;
    let g = match shape {
        Shape::SquareStrip => build_square_strip(n),
        Shape::HexagonStrip => build_hexagon_strip(n),
        Shape::SquareGeneral => unreachable!("rejected while building the start word"),
    }
    .expect("n was validated with the start word");
    let code = StripCode::new(&g)?;

    let mut states = vec![DiagramState {
        state: start,
        p: 0,
        q: 0,
    }];
    let mut index_of: HashMap<u64, usize> = HashMap::new();
    index_of.insert(word_key(states[0].state.word()), 0);
    let mut arrows: Vec<MoveArrow> = Vec::new();

    let mut frontier: Vec<usize> = vec![0];
    while !frontier.is_empty() {
        let mut next: Vec<usize> = Vec::new();
        for &si in &frontier {
            let word = states[si].state.word().to_vec();
            for (mov, flipped) in candidate_moves(shape, &word) {
                // Every move is re-validated against the graph; the word
                // bookkeeping alone is never trusted.
                assert!(
                    code.decodes(&flipped),
                    "a generated move must decode to a matching"
                );
                let key = word_key(&flipped);
                let ti = match index_of.get(&key) {
                    Some(&i) => i,
                    None => {
                        let (p, q) = level_of(&flipped);
                        debug_assert_eq!(p, states[si].p + 1);
                        let state = SpinState::from_word(shape, flipped)
                            .expect("moves preserve the shape constraints");
                        let i = states.len();
                        states.push(DiagramState { state, p, q });
                        index_of.insert(key, i);
                        next.push(i);
                        i
                    }
                };
                arrows.push(MoveArrow { from: si, to: ti, mov });
            }
        }
        frontier = next;
    }

    let max_p = states.iter().map(|s| s.p).max().unwrap_or(0);
    let mut levels: Vec<LevelCount> = (0..=max_p)
        .map(|p| LevelCount {
            p,
            total: 0,
            by_q: vec![0; p + 1],
        })
        .collect();
    for st in &states {
        levels[st.p].total += 1;
        levels[st.p].by_q[st.q] += 1;
    }

    Ok(LevelDiagram {
        shape,
        n,
        states,
        arrows,
        levels,
    })
}

impl LevelDiagram {
    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Per-level totals with their q-refinements, for p = 0 up to the
    /// deepest reached level.
    pub fn levels(&self) -> &[LevelCount] {
        &self.levels
    }

    /// Generated states in discovery order (level by level).
    pub fn states(&self) -> &[DiagramState] {
        &self.states
    }

    /// Every move application, including repeated routes into one state.
    pub fn arrows(&self) -> &[MoveArrow] {
        &self.arrows
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    /// Graphviz rendering of the diagram: one rank per level, spin words as
    /// node labels, solid arrows for a-moves and dotted arrows for b-moves.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph spin_levels {\n");
        out.push_str("  rankdir=LR;\n");
        out.push_str("  node [shape=plaintext];\n");
        for level in &self.levels {
            out.push_str("  { rank=same;");
            for (i, st) in self.states.iter().enumerate() {
                if st.p == level.p {
                    write!(out, " s{i} [label=\"{}\"];", st.state).expect("writing to a string");
                }
            }
            out.push_str(" }\n");
        }
        for a in &self.arrows {
            let style = match a.mov {
                Move::A { .. } => "solid",
                Move::B { .. } => "dotted",
            };
            writeln!(
                out,
                "  s{} -> s{} [label=\"{}\", style={}];",
                a.from, a.to, a.mov, style
            )
            .expect("writing to a string");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn totals(d: &LevelDiagram) -> Vec<u64> {
        d.levels().iter().map(|l| l.total).collect()
    }

    #[test]
    fn square_four_levels() {
        let d = level_counts(Shape::SquareStrip, 4).unwrap();
        assert_eq!(totals(&d), vec![1, 8, 16, 8, 1]);
        assert_eq!(d.num_states(), 34);
        assert_eq!(d.levels()[2].by_q, vec![6, 8, 2]);
        assert_eq!(d.levels()[0].by_q, vec![1]);
    }

    #[test]
    fn hexagon_four_levels() {
        let d = level_counts(Shape::HexagonStrip, 4).unwrap();
        assert_eq!(totals(&d), vec![1, 4, 2]);
        assert_eq!(d.levels()[1].by_q, vec![0, 4]);
        assert_eq!(d.levels()[2].by_q, vec![0, 0, 2]);
    }

    #[test]
    fn two_column_levels() {
        let d = level_counts(Shape::SquareStrip, 2).unwrap();
        assert_eq!(totals(&d), vec![1, 4, 1]);
        assert_eq!(d.levels()[1].by_q, vec![2, 2]);
        let h = level_counts(Shape::HexagonStrip, 2).unwrap();
        assert_eq!(totals(&h), vec![1, 2]);
    }

    #[test]
    fn the_start_level_has_exactly_one_state() {
        for shape in [Shape::SquareStrip, Shape::HexagonStrip] {
            for n in [2usize, 6, 10] {
                let d = level_counts(shape, n).unwrap();
                assert_eq!(d.levels()[0].total, 1);
                assert_eq!(d.states()[0].state.word(), vec![Spin::Up; n]);
            }
        }
    }

    #[test]
    fn guards_reject_bad_inputs() {
        assert_eq!(
            level_counts(Shape::SquareStrip, 14).unwrap_err(),
            SpinError::GenerationTooLarge { n: 14, limit: 12 }
        );
        assert!(matches!(
            level_counts(Shape::SquareStrip, 5).unwrap_err(),
            SpinError::InvalidDimension { .. }
        ));
        assert_eq!(
            level_counts(Shape::SquareGeneral, 4).unwrap_err(),
            SpinError::UnsupportedGraph {
                shape: "square-general"
            }
        );
    }

    #[test]
    fn dot_dump_lists_levels_states_and_arrows() {
        let d = level_counts(Shape::HexagonStrip, 4).unwrap();
        let dot = d.to_dot();
        assert!(dot.starts_with("digraph spin_levels {"));
        assert_eq!(dot.matches("rank=same").count(), 3);
        assert_eq!(dot.matches(" -> ").count(), 8);
        assert!(dot.contains("|↑↑↑↑⟩"));
        assert!(dot.contains("style=dotted"));
        assert!(!dot.contains("style=solid"));
        let sq = level_counts(Shape::SquareStrip, 2).unwrap().to_dot();
        assert!(sq.contains("style=solid"));
        // Both parallel moves of the two-column strip appear under one label.
        assert_eq!(sq.matches("d_b(1,2)").count(), 2);
    }

    #[test]
    fn arrow_counts_match_the_moves_out_of_each_state() {
        let d = level_counts(Shape::SquareStrip, 4).unwrap();
        // From the all-up word: 4 a-moves + 4 b-moves.
        let from_start = d.arrows().iter().filter(|a| a.from == 0).count();
        assert_eq!(from_start, 8);
        // Every arrow drops exactly one level.
        for a in d.arrows() {
            assert_eq!(d.states()[a.to].p, d.states()[a.from].p + 1);
        }
    }
}
