//! Trigonometric double products for the four twisted evaluations.
//!
//! For the m-by-n torus of squares the four twisted determinant evaluations
//! factor into double products
//!
//! ```text
//! A_i = 1/2 * prod_{k=1..m/2} prod_{l=1..n/2}
//!         4 * ( sin^2((2k - a) pi / m) + sin^2((2l - b) pi / n) )
//! ```
//!
//! with `(a, b)` running over `(0,0), (0,1), (1,0), (1,1)` for
//! `A_1, A_2, A_3, A_4`; the matching total is `-A_1 + A_2 + A_3 + A_4`.
//! Evaluation happens in `f64` first; when rounding the total to an integer
//! is ambiguous, the whole computation is redone in 192-fractional-bit
//! fixed-point arithmetic before giving up.

use crate::EngineError;
use laurent_core::{BigInt, BigRational};
use num_traits::{Signed, ToPrimitive, Zero};

/// Relative slack allowed between the floating total and its nearest integer.
const ROUNDING_TOLERANCE: f64 = 1e-6;

/// Result of evaluating the product formula.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductEvaluation {
    /// The four twisted evaluations `A_1..A_4` (halved double products).
    pub a: [f64; 4],
    /// The exactly rounded matching total `-A_1 + A_2 + A_3 + A_4`.
    pub z: BigInt,
    /// True when fixed-point escalation was needed for unambiguous rounding.
    pub escalated: bool,
}

/// The twist offsets pairing each `A_i` with a sign choice: `a` twists the
/// vertical (z) direction, `b` the horizontal (w) one.
const TWISTS: [(u64, u64); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];

/// Evaluate the double products for the m-by-n torus of squares and round the
/// alternating combination to the exact matching total.
///
/// Both dimensions must be even and at least 2.  The `f64` route is accurate
/// to roughly 13 significant digits for the supported sizes; if the total
/// still fails to round unambiguously, the calculation escalates to exact
/// fixed-point arithmetic and only then reports
/// [`EngineError::PrecisionInsufficient`].
pub fn product_formula(m: usize, n: usize) -> Result<ProductEvaluation, EngineError> {
    assert!(m >= 2 && m % 2 == 0, "m must be even and at least 2");
    assert!(n >= 2 && n % 2 == 0, "n must be even and at least 2");

    let a = a_values_f64(m, n);
    let total = -a[0] + a[1] + a[2] + a[3];
    let rounded = total.round();
    let slack = ROUNDING_TOLERANCE * rounded.abs().max(1.0);
    if (total - rounded).abs() <= slack && rounded.abs() < 2f64.powi(52) {
        return Ok(ProductEvaluation {
            a,
            z: BigInt::from(rounded as i64),
            escalated: false,
        });
    }

    let exact = a_values_fixed_point(m, n);
    let total_fp = -(&exact[0]) + &exact[1] + &exact[2] + &exact[3];
    let rounded_fp = total_fp.round();
    let residual = (&total_fp - &rounded_fp).abs();
    // After 192-bit evaluation the residual must be far below rounding range.
    if residual > BigRational::new(BigInt::from(1), BigInt::from(1u64) << 60) {
        return Err(EngineError::PrecisionInsufficient {
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(ProductEvaluation {
        a: [
            exact[0].to_f64().unwrap_or(f64::NAN),
            exact[1].to_f64().unwrap_or(f64::NAN),
            exact[2].to_f64().unwrap_or(f64::NAN),
            exact[3].to_f64().unwrap_or(f64::NAN),
        ],
        z: rounded_fp.to_integer(),
        escalated: true,
    })
}

fn a_values_f64(m: usize, n: usize) -> [f64; 4] {
    let pi = std::f64::consts::PI;
    let mut a = [0.0f64; 4];
    for (i, &(alpha, beta)) in TWISTS.iter().enumerate() {
        let mut product = 0.5f64;
        for k in 1..=(m as u64) / 2 {
            let sz = (pi * ((2 * k - alpha) as f64) / m as f64).sin();
            for l in 1..=(n as u64) / 2 {
                let sw = (pi * ((2 * l - beta) as f64) / n as f64).sin();
                product *= 4.0 * (sz * sz + sw * sw);
            }
        }
        a[i] = product;
    }
    a
}

/// Fractional bits carried by the escalated evaluation.
const FP_BITS: u32 = 192;

/// First 50 decimal digits of pi, scaled by 10^50.
const PI_DIGITS: &str = "314159265358979323846264338327950288419716939937510";

fn pi_fixed_point() -> BigInt {
    let digits: BigInt = PI_DIGITS.parse().expect("constant parses");
    let denominator: BigInt = format!("1{}", "0".repeat(50)).parse().expect("constant parses");
    (digits << FP_BITS) / denominator
}

fn fp_mul(a: &BigInt, b: &BigInt) -> BigInt {
    (a * b) >> FP_BITS
}

/// sin(x) for fixed-point `x` in `[0, pi]` by the alternating Taylor series.
/// Terms shrink monotonically once `2k(2k+1) > x^2`, so the loop terminates
/// as soon as a term underflows to zero at this precision.
fn sin_fixed_point(x: &BigInt) -> BigInt {
    let x_squared = fp_mul(x, x);
    let mut term = x.clone();
    let mut sum = x.clone();
    let mut k = 1u64;
    while !term.is_zero() {
        term = fp_mul(&term, &x_squared) / BigInt::from(2 * k * (2 * k + 1));
        if k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        k += 1;
        debug_assert!(k < 500, "Taylor series must terminate");
    }
    sum
}

/// The four halved double products as exact rationals (with the fixed-point
/// sine values treated as exact inputs; they carry ~57 decimal digits).
fn a_values_fixed_point(m: usize, n: usize) -> [BigRational; 4] {
    let pi = pi_fixed_point();
    let one = BigRational::from_integer(BigInt::from(1));
    let scale = BigRational::new(BigInt::from(1), BigInt::from(1) << FP_BITS);
    let mut out = [one.clone(), one.clone(), one.clone(), one];
    for (i, &(alpha, beta)) in TWISTS.iter().enumerate() {
        let mut product = BigRational::new(BigInt::from(1), BigInt::from(2));
        for k in 1..=(m as u64) / 2 {
            let angle_z = &pi * BigInt::from(2 * k - alpha) / BigInt::from(m as u64);
            let sz = sin_fixed_point(&angle_z);
            let sz2 = BigRational::from_integer(fp_mul(&sz, &sz)) * &scale;
            for l in 1..=(n as u64) / 2 {
                let angle_w = &pi * BigInt::from(2 * l - beta) / BigInt::from(n as u64);
                let sw = sin_fixed_point(&angle_w);
                let sw2 = BigRational::from_integer(fp_mul(&sw, &sw)) * &scale;
                let factor = (&sz2 + &sw2) * BigRational::from_integer(BigInt::from(4));
                product *= factor;
            }
        }
        out[i] = product;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_torus_matches_the_frozen_tuple() {
        let result = product_formula(2, 2).unwrap();
        assert!(!result.escalated);
        let expected = [0.0, 2.0, 2.0, 4.0];
        for (got, want) in result.a.iter().zip(expected) {
            assert!((got - want).abs() < 1e-9, "got {got}, want {want}");
        }
        assert_eq!(result.z, BigInt::from(8));
    }

    #[test]
    fn two_by_four_strip_values() {
        let result = product_formula(2, 4).unwrap();
        let expected = [0.0, 2.0, 16.0, 18.0];
        for (got, want) in result.a.iter().zip(expected) {
            assert!((got - want).abs() < 1e-9, "got {got}, want {want}");
        }
        assert_eq!(result.z, BigInt::from(36));
    }

    #[test]
    fn four_by_four_total() {
        assert_eq!(product_formula(4, 4).unwrap().z, BigInt::from(272));
    }

    #[test]
    fn fixed_point_route_agrees_with_floating_point() {
        for (m, n) in [(2usize, 2usize), (2, 4), (2, 8), (4, 4), (4, 6)] {
            let float = a_values_f64(m, n);
            let exact = a_values_fixed_point(m, n);
            for (f, e) in float.iter().zip(&exact) {
                let e64 = e.to_f64().unwrap();
                assert!(
                    (f - e64).abs() <= 1e-9 * e64.abs().max(1.0),
                    "float {f} vs fixed-point {e64} for {m}x{n}"
                );
            }
            let total = -(&exact[0]) + &exact[1] + &exact[2] + &exact[3];
            assert_eq!(
                total.round().to_integer(),
                product_formula(m, n).unwrap().z
            );
        }
    }

    #[test]
    fn fixed_point_sine_hits_known_values() {
        let pi = pi_fixed_point();
        // sin(pi/2) = 1.
        let half_pi = &pi / BigInt::from(2);
        let one = BigInt::from(1) << FP_BITS;
        let err = (sin_fixed_point(&half_pi) - &one).abs();
        assert!(err < BigInt::from(1u64) << 40, "sin(pi/2) error {err}");
        // sin(pi/6) = 1/2.
        let sixth = &pi / BigInt::from(6);
        let half = BigInt::from(1) << (FP_BITS - 1);
        let err = (sin_fixed_point(&sixth) - &half).abs();
        assert!(err < BigInt::from(1u64) << 40, "sin(pi/6) error {err}");
        // sin(pi) = 0 up to the pi constant's own truncation.
        let err = sin_fixed_point(&pi).abs();
        assert!(err < BigInt::from(1u64) << 40, "sin(pi) error {err}");
    }

    #[test]
    fn diff_by_two_identities_hold_numerically() {
        for half_n in 1..=10usize {
            let n = 2 * half_n;
            let result = product_formula(2, n).unwrap();
            let [a1, a2, a3, a4] = result.a;
            assert!((a2 - a1 - 2.0).abs() < 1e-6, "A2 - A1 at n = {n}");
            assert!((a4 - a3 - 2.0).abs() < 1e-6, "A4 - A3 at n = {n}");
        }
    }
}
