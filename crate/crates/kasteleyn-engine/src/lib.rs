//! Kasteleyn machinery for strip and torus dimer graphs.
//!
//! The pipeline implemented here turns a [`strip_lattice::StripGraph`] into
//! the signed weight polynomial of its perfect matchings without ever
//! enumerating them:
//!
//! 1. [`find_orientation`] assigns each edge a sign in `{+1, -1}` so that
//!    every face satisfies the classical flatness condition (the product of
//!    signs around a face of length `2k` is `-(-1)^k`).
//! 2. [`kasteleyn_matrix`] builds the black-by-white adjacency block whose
//!    entries are signed monomials `±z^{e_z} w^{e_w}` in the Laurent ring.
//! 3. [`newton_polynomial_det`] takes an exact symbolic determinant
//!    (fraction-free elimination, with an expansion-by-minors cross-check
//!    route) and normalizes the result so the coefficient of `z^{n_z} w^{n_w}`
//!    is `(-1)^{n_z + n_w + n_z n_w}` times the number of matchings at that
//!    weight.
//! 4. [`total_matchings`] and [`matching_count`] recover the total number of
//!    perfect matchings from the signed polynomial, and
//!    [`identify_a_values`] / [`product_formula`] tie the four evaluations
//!    `P(±1, ±1)` to the trigonometric double products.

mod determinant;
mod matrix;
mod orientation;
mod product;

use laurent_core::{BigInt, BigRational, LaurentPoly2};
use num_traits::{Signed, Zero};
use thiserror::Error;

pub use determinant::{det_bareiss, det_minors, BAREISS_LIMIT, MINORS_LIMIT};
pub use matrix::{kasteleyn_matrix, KasteleynMatrix};
pub use orientation::{find_orientation, KasteleynOrientation};
pub use product::{product_formula, ProductEvaluation};

/// Errors produced by the Kasteleyn pipeline.
#[derive(Debug, Error)]
pub enum EngineError {
    /// The determinant routines refuse matrices above their size guards.
    #[error("matrix of size {size} exceeds the {routine} limit of {limit}")]
    MatrixTooLarge {
        routine: &'static str,
        size: usize,
        limit: usize,
    },
    /// No global sign and variable twist makes the determinant obey the
    /// alternating sign convention.  This would indicate a graph whose
    /// matching classes do not split by exponent parity.
    #[error("determinant cannot be normalized to the alternating sign convention")]
    NormalizationFailed,
    /// `total_matchings` insists on the square-strip convention `P(1,1) = 0`;
    /// polynomials that do not vanish there (e.g. hexagon strips) must be
    /// counted through [`matching_count`] instead.
    #[error("signed polynomial evaluates to {value} at (1,1); expected 0")]
    ConventionViolation { value: BigInt },
    /// Floating-point and escalated fixed-point evaluation both failed to
    /// round the product formula to an unambiguous integer.
    #[error("product formula could not be rounded unambiguously (residual {residual:e})")]
    PrecisionInsufficient { residual: f64 },
}

/// Compute the signed weight polynomial of `graph` via the Kasteleyn
/// determinant, normalized to the alternating sign convention: the
/// coefficient of `z^{n_z} w^{n_w}` equals
/// `(-1)^{n_z + n_w + n_z n_w} * N_{n_z, n_w}` where `N` counts perfect
/// matchings of that weight.  Equivalently, coefficients are positive exactly
/// on the (even, even) exponent parity class and negative elsewhere.
pub fn newton_polynomial_det(graph: &strip_lattice::StripGraph) -> Result<LaurentPoly2, EngineError> {
    let orientation = find_orientation(graph);
    let matrix = kasteleyn_matrix(graph, &orientation);
    let raw = det_bareiss(&matrix.entries)?;
    normalize_alternating(&raw).ok_or(EngineError::NormalizationFailed)
}

/// Search the eight global unit transforms `g * P(sz * z, sw * w)` with
/// `g, sz, sw ∈ {+1, -1}` for the one that satisfies the alternating sign
/// convention (positive coefficients exactly on the (even, even) parity
/// class).  Returns `None` when no transform works.  The zero polynomial
/// normalizes to itself.
pub fn normalize_alternating(raw: &LaurentPoly2) -> Option<LaurentPoly2> {
    if raw.is_zero() {
        return Some(raw.clone());
    }
    for &global in &[1i8, -1] {
        for &sz in &[1i8, -1] {
            for &sw in &[1i8, -1] {
                let mut candidate = raw.twist(sz, sw);
                if global < 0 {
                    candidate = candidate.neg();
                }
                if obeys_alternating_convention(&candidate) {
                    return Some(candidate);
                }
            }
        }
    }
    None
}

/// True when every coefficient of `p` is positive on the (even, even)
/// exponent parity class and negative on the other three classes.
pub fn obeys_alternating_convention(p: &LaurentPoly2) -> bool {
    p.terms().all(|(&(ez, ew), coeff)| {
        let even_even = ez.rem_euclid(2) == 0 && ew.rem_euclid(2) == 0;
        if even_even {
            coeff.is_positive()
        } else {
            coeff.is_negative()
        }
    })
}

/// Total number of perfect matchings recovered from a signed polynomial that
/// obeys the square-strip convention `P(1,1) = 0`.  Uses the four-evaluation
/// bracket `(-P(1,1) + P(1,-1) + P(-1,1) + P(-1,-1)) / 2`.
///
/// Returns [`EngineError::ConventionViolation`] when `P(1,1) != 0`; counts
/// for such polynomials are available through [`matching_count`].
pub fn total_matchings(p: &LaurentPoly2) -> Result<BigInt, EngineError> {
    let at_pp = p.eval_pm(1, 1);
    if !at_pp.is_zero() {
        return Err(EngineError::ConventionViolation { value: at_pp });
    }
    Ok(four_evaluation_bracket(p))
}

/// The four-evaluation bracket `(-P(1,1) + P(1,-1) + P(-1,1) + P(-1,-1)) / 2`.
///
/// For any polynomial obeying the alternating sign convention this equals the
/// sum of the absolute values of the coefficients: each exponent parity class
/// picks up `+2` times its coefficient total across the bracket, regardless
/// of the class.  The division by two is exact.
pub fn four_evaluation_bracket(p: &LaurentPoly2) -> BigInt {
    let sum = -p.eval_pm(1, 1) + p.eval_pm(1, -1) + p.eval_pm(-1, 1) + p.eval_pm(-1, -1);
    sum / BigInt::from(2)
}

/// Number of perfect matchings encoded by a signed polynomial, read off as
/// the sum of absolute coefficient values.  Works for every shape, including
/// those where `P(1,1) != 0`.
pub fn matching_count(p: &LaurentPoly2) -> BigInt {
    p.coeff_norm()
}

/// Halved evaluations `A_i = P(±1, ±1) / 2` as exact rationals, in the order
/// `A_1 = P(1,1)/2`, `A_2 = P(1,-1)/2`, `A_3 = P(-1,1)/2`,
/// `A_4 = P(-1,-1)/2`.  The total count is `-A_1 + A_2 + A_3 + A_4`, and the
/// values coincide with the trigonometric double products of
/// [`product_formula`] on square tori.
pub fn identify_a_values(p: &LaurentPoly2) -> [BigRational; 4] {
    let half = |v: BigInt| BigRational::new(v, BigInt::from(2));
    [
        half(p.eval_pm(1, 1)),
        half(p.eval_pm(1, -1)),
        half(p.eval_pm(-1, 1)),
        half(p.eval_pm(-1, -1)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use laurent_core::rat;
    use num_traits::One;
    use std::str::FromStr;

    fn poly(text: &str) -> LaurentPoly2 {
        LaurentPoly2::from_str(text).expect("test polynomial parses")
    }

    #[test]
    fn alternating_convention_checker() {
        let good = poly("4 + -1*z^1 + -1*z^-1 + -1*w^1 + -1*w^-1");
        assert!(obeys_alternating_convention(&good));
        let bad_sign = poly("4 + 1*z^1 + -1*z^-1 + -1*w^1 + -1*w^-1");
        assert!(!obeys_alternating_convention(&bad_sign));
        let bad_even = poly("-4 + -1*z^1");
        assert!(!obeys_alternating_convention(&bad_even));
    }

    #[test]
    fn normalization_finds_the_unique_twist() {
        let target = poly("4 + -1*z^1 + -1*z^-1 + -1*w^1 + -1*w^-1");
        // Scramble with every unit transform; normalization must recover the
        // same canonical representative each time.
        for &global in &[1i8, -1] {
            for &sz in &[1i8, -1] {
                for &sw in &[1i8, -1] {
                    let mut scrambled = target.twist(sz, sw);
                    if global < 0 {
                        scrambled = scrambled.neg();
                    }
                    let normalized = normalize_alternating(&scrambled).expect("normalizable");
                    assert_eq!(normalized, target);
                }
            }
        }
    }

    #[test]
    fn normalization_rejects_mixed_signs_within_a_class() {
        // z^2 - z^-2 has both signs on the (even, even) class; no unit
        // transform can fix that.
        let mixed = poly("1*z^2 + -1*z^-2");
        assert!(normalize_alternating(&mixed).is_none());
    }

    #[test]
    fn bracket_equals_coefficient_norm_under_the_convention() {
        let p = poly("16 + -8*z^1 + -8*z^-1 + 1*z^2 + 1*z^-2 + -1*w^1 + -1*w^-1");
        assert_eq!(four_evaluation_bracket(&p), p.coeff_norm());
        assert_eq!(total_matchings(&p).unwrap(), BigInt::from(36));
    }

    #[test]
    fn convention_violation_reports_the_value() {
        // Hexagon-style polynomial: P(1,1) = 2 - 4 + 1 - 1 - 1 = -3.
        let p = poly("2 + -4*z^1 + 1*z^2 + -1*w^1 + -1*w^-1");
        match total_matchings(&p) {
            Err(EngineError::ConventionViolation { value }) => {
                assert_eq!(value, BigInt::from(-3));
            }
            other => panic!("expected convention violation, got {other:?}"),
        }
        // The coefficient norm still counts its matchings.
        assert_eq!(matching_count(&p), BigInt::from(9));
        // And the bracket agrees with it even though P(1,1) != 0.
        assert_eq!(four_evaluation_bracket(&p), BigInt::from(9));
    }

    #[test]
    fn identified_a_values_match_hand_computation() {
        let p = poly("4 + -1*z^1 + -1*z^-1 + -1*w^1 + -1*w^-1");
        let a = identify_a_values(&p);
        assert_eq!(a[0], rat(0, 1));
        assert_eq!(a[1], rat(2, 1));
        assert_eq!(a[2], rat(2, 1));
        assert_eq!(a[3], rat(4, 1));
        let total = -a[0].clone() + &a[1] + &a[2] + &a[3];
        assert_eq!(total, rat(8, 1));
        assert!(a[3].denom().is_one());
    }
}
