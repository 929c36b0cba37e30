//! The two weight-lowering moves on spin words.

use strip_lattice::{build_hexagon_strip, build_square_strip, Shape, StripGraph};

use crate::state::{Spin, SpinState, StripCode};
use crate::SpinError;

/// Which neighbouring plaquette a b-move closes around, seen from the top
/// node x: `East` turns x right and its right-hand bottom partner left,
/// `West` turns x left and its left-hand bottom partner right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DbSide {
    East,
    West,
}

/// Bottom-row partner of top node `x` (1-based, `x <= n/2`) on `side`:
/// n/2+x to the east, n/2+x−1 to the west, wrapping to n for x = 1.
pub fn db_partner(n: usize, x: usize, side: DbSide) -> usize {
    debug_assert!(x >= 1 && x <= n / 2);
    match side {
        DbSide::East => n / 2 + x,
        DbSide::West => {
            if x == 1 {
                n
            } else {
                n / 2 + x - 1
            }
        }
    }
}

fn build_graph(shape: Shape, n: usize) -> StripGraph {
    match shape {
        Shape::SquareStrip => build_square_strip(n),
        Shape::HexagonStrip => build_hexagon_strip(n),
        Shape::SquareGeneral => unreachable!("spin states never carry this shape"),
    }
    .expect("spin states always have even n >= 2")
}

/// Re-decodes a flipped word to confirm it is still a perfect matching.
/// The decode is the ground truth for move validity, guarding the label
/// bookkeeping against convention mistakes.
fn finish_move(shape: Shape, word: Vec<Spin>, mov: String) -> Result<SpinState, SpinError> {
    let g = build_graph(shape, word.len());
    let code = StripCode::new(&g)?;
    code.decode(&word).map_err(|e| SpinError::MoveInvalid {
        mov: mov.clone(),
        reason: format!("the flipped word is not a matching ({e})"),
    })?;
    SpinState::from_word(shape, word)
}

/// a-move: flips the spin at `x` from up to down, lowering the weight by 1.
pub fn apply_da(s: &SpinState, x: usize) -> Result<SpinState, SpinError> {
    let n = s.n();
    if x == 0 || x > n {
        return Err(SpinError::IndexOutOfRange { x, n });
    }
    let mov = format!("d_a({x})");
    if s.shape() == Shape::HexagonStrip {
        return Err(SpinError::MoveInvalid {
            mov,
            reason: "the hexagon strip has no downward direction".into(),
        });
    }
    if s.spin_at(x)? != Spin::Up {
        return Err(SpinError::MoveInvalid {
            mov,
            reason: "the spin at x must point up".into(),
        });
    }
    let mut word = s.word().to_vec();
    word[x - 1] = Spin::Down;
    finish_move(s.shape(), word, mov)
}

/// b-move in side form: turns the up pair (x, partner) into a left/right
/// pair around the plaquette on `side`, lowering the weight by 1. This form
/// is total: it distinguishes the two moves of the n = 2 strip, whose
/// partner labels coincide.
pub fn apply_db_side(s: &SpinState, x: usize, side: DbSide) -> Result<SpinState, SpinError> {
    let n = s.n();
    if x == 0 || x > n {
        return Err(SpinError::IndexOutOfRange { x, n });
    }
    if x > n / 2 {
        return Err(SpinError::MoveInvalid {
            mov: format!("d_b({x},_)"),
            reason: "x must index a top-row node (1..=n/2)".into(),
        });
    }
    let y = db_partner(n, x, side);
    let mov = format!("d_b({x},{y})");
    if s.spin_at(x)? != Spin::Up || s.spin_at(y)? != Spin::Up {
        return Err(SpinError::MoveInvalid {
            mov,
            reason: "both paired spins must point up".into(),
        });
    }
    let (dx, dy) = match side {
        DbSide::East => (Spin::Right, Spin::Left),
        DbSide::West => (Spin::Left, Spin::Right),
    };
    let mut word = s.word().to_vec();
    word[x - 1] = dx;
    word[y - 1] = dy;
    finish_move(s.shape(), word, mov)
}

/// b-move in pair form: `y` must be a bottom-row partner of `x` (n/2+x to
/// the east, n/2+x−1 — wrapping to n for x = 1 — to the west). On the n = 2
/// strip the two partner labels coincide and the pair form is ambiguous;
/// use [`apply_db_side`] there.
pub fn apply_db(s: &SpinState, x: usize, y: usize) -> Result<SpinState, SpinError> {
    let n = s.n();
    if x == 0 || x > n {
        return Err(SpinError::IndexOutOfRange { x, n });
    }
    if y == 0 || y > n {
        return Err(SpinError::IndexOutOfRange { x: y, n });
    }
    let mov = format!("d_b({x},{y})");
    if x > n / 2 {
        return Err(SpinError::MoveInvalid {
            mov,
            reason: "x must index a top-row node (1..=n/2)".into(),
        });
    }
    let east = db_partner(n, x, DbSide::East);
    let west = db_partner(n, x, DbSide::West);
    if east == west {
        if y == east {
            return Err(SpinError::MoveInvalid {
                mov,
                reason: "ambiguous pair on the two-column strip; use apply_db_side".into(),
            });
        }
    } else if y == east {
        return apply_db_side(s, x, DbSide::East);
    } else if y == west {
        return apply_db_side(s, x, DbSide::West);
    }
    Err(SpinError::MoveInvalid {
        mov,
        reason: "y is not a bottom-row neighbour of x".into(),
    })
}
