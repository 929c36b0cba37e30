//! Direction-spin encodings of strip matchings.
//!
//! Every perfect matching of a 2×n torus strip assigns each black node the
//! direction of its dimer, turning the matching into a word over
//! {up, down, left, right} — one symbol per black node, with the hexagon
//! strip dropping `down` because each of its black nodes keeps only one
//! vertical edge. Two weight-lowering moves act on these words: an a-move
//! flips a single spin from up to down (swapping a vertical dimer onto the
//! parallel vertical edge of the same column), and a b-move turns an up pair
//! into a left/right pair around the plaquette between them. Breadth-first
//! closure from the all-up word generates exactly the matchings with zero
//! horizontal winding, level by level, refined by the number of b-moves; the
//! per-level counts reproduce the coefficient tables in `strip-formulas`.

mod diagram;
mod moves;
mod state;

pub use diagram::{
    level_counts, DiagramState, LevelCount, LevelDiagram, Move, MoveArrow, GENERATION_LIMIT,
};
pub use moves::{apply_da, apply_db, apply_db_side, db_partner, DbSide};
pub use state::{matching_from_spin, spin_from_matching, Spin, SpinState};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpinError {
    #[error("n = {value} is invalid: must be {requirement}")]
    InvalidDimension { value: i64, requirement: &'static str },
    #[error("graph shape {shape} is not a two-row strip")]
    UnsupportedGraph { shape: &'static str },
    #[error("word is invalid: {reason}")]
    InvalidWord { reason: &'static str },
    #[error("edge set is not a perfect matching: {reason}")]
    NotAMatching { reason: &'static str },
    #[error("state was built for {state_shape} with n = {state_n}, not {graph_shape} with n = {graph_n}")]
    GraphMismatch {
        state_shape: &'static str,
        state_n: usize,
        graph_shape: &'static str,
        graph_n: usize,
    },
    #[error("node index {x} is out of range 1..={n}")]
    IndexOutOfRange { x: usize, n: usize },
    #[error("{mov} is invalid here: {reason}")]
    MoveInvalid { mov: String, reason: String },
    #[error("n = {n} exceeds the exhaustive generation limit {limit}")]
    GenerationTooLarge { n: usize, limit: usize },
}
