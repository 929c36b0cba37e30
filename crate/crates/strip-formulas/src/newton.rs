//! Signed weight polynomials of the 2×n strips, built from the coefficient
//! tables, from a product recursion, and from closed-form point evaluation.
//!
//! The canonical sign convention throughout the toolkit puts a positive sign
//! exactly on monomials with both exponents even. The historical presentation
//! of the same polynomials carries an extra global factor `(-1)^(n/2)` on the
//! z-part; the `*_printed` variants expose that raw form.

use laurent_core::{BigInt, BigRational, LaurentPoly2};
use num_traits::{One, Zero};

use crate::tables::{a_hex, b_sq};
use crate::FormulaError;

/// Which strip family a closed-form evaluation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripKind {
    Square,
    Hexagon,
}

fn require_even_n(n: u64, min: u64) -> Result<(), FormulaError> {
    if n < min || n % 2 != 0 {
        return Err(FormulaError::InvalidDimension {
            param: "n",
            value: n as i64,
            requirement: if min == 0 {
                "must be even and at least 0"
            } else {
                "must be even and at least 2"
            },
        });
    }
    Ok(())
}

/// Canonical z-part of the square-strip weight polynomial: coefficient
/// `(-1)^e b(n, e + n/2)` at `z^e` for `e = -n/2 ..= n/2`.
pub fn newton_sq_z_part(n: u64) -> Result<LaurentPoly2, FormulaError> {
    require_even_n(n, 2)?;
    let half = (n / 2) as i64;
    let mut acc = LaurentPoly2::zero();
    for p in 0..=n {
        let e = p as i64 - half;
        let mut coeff = b_sq(n, p);
        if e.rem_euclid(2) == 1 {
            coeff = -coeff;
        }
        acc = acc.add(&LaurentPoly2::monomial(coeff, e, 0));
    }
    Ok(acc)
}

/// Canonical z-part of the hexagon-strip weight polynomial: coefficient
/// `(-1)^e a(n, n/2 - e)` at `z^e` for `e = 0 ..= n/2`.
pub fn newton_hex_z_part(n: u64) -> Result<LaurentPoly2, FormulaError> {
    require_even_n(n, 2)?;
    let half = n / 2;
    let mut acc = LaurentPoly2::zero();
    for p in 0..=half {
        let e = (half - p) as i64;
        let mut coeff = a_hex(n, p)?;
        if e.rem_euclid(2) == 1 {
            coeff = -coeff;
        }
        acc = acc.add(&LaurentPoly2::monomial(coeff, e, 0));
    }
    Ok(acc)
}

fn with_w_part(z_part: LaurentPoly2) -> LaurentPoly2 {
    z_part
        .add(&LaurentPoly2::monomial(-1, 0, 1))
        .add(&LaurentPoly2::monomial(-1, 0, -1))
}

/// Full square-strip weight polynomial in the canonical sign convention:
/// the z-part of [`newton_sq_z_part`] minus `w + 1/w`.
pub fn newton_sq(n: u64) -> Result<LaurentPoly2, FormulaError> {
    Ok(with_w_part(newton_sq_z_part(n)?))
}

/// Full hexagon-strip weight polynomial in the canonical sign convention.
pub fn newton_hex(n: u64) -> Result<LaurentPoly2, FormulaError> {
    Ok(with_w_part(newton_hex_z_part(n)?))
}

fn z_part_sign_flip(n: u64, z_part: LaurentPoly2) -> LaurentPoly2 {
    if (n / 2) % 2 == 1 {
        z_part.neg()
    } else {
        z_part
    }
}

/// Square-strip polynomial in the raw historical convention: the z-part
/// carries an extra global factor `(-1)^(n/2)`, the w-part stays `-w - 1/w`.
pub fn newton_sq_printed(n: u64) -> Result<LaurentPoly2, FormulaError> {
    Ok(with_w_part(z_part_sign_flip(n, newton_sq_z_part(n)?)))
}

/// Hexagon-strip polynomial in the raw historical convention.
pub fn newton_hex_printed(n: u64) -> Result<LaurentPoly2, FormulaError> {
    Ok(with_w_part(z_part_sign_flip(n, newton_hex_z_part(n)?)))
}

/// Square-strip z-part built purely from the product recursion
/// `P_n = P_2 * P_(n-2) - P_(n-4)` with seeds `P_0 = 2` and
/// `P_2 = 4 - z - 1/z`, for even `n ≥ 0`.
///
/// Independent of the coefficient tables; must agree with
/// [`newton_sq_z_part`] for every even `n ≥ 2`.
pub fn newton_sq_recursive(n: u64) -> Result<LaurentPoly2, FormulaError> {
    require_even_n(n, 0)?;
    let p2 = LaurentPoly2::constant(4)
        .add(&LaurentPoly2::monomial(-1, 1, 0))
        .add(&LaurentPoly2::monomial(-1, -1, 0));
    let mut prev = LaurentPoly2::constant(2); // P_0
    if n == 0 {
        return Ok(prev);
    }
    let mut curr = p2.clone(); // P_2
    for _ in 1..(n / 2) {
        let next = p2.mul(&curr).sub(&prev);
        prev = curr;
        curr = next;
    }
    Ok(curr)
}

/// Power sums `s_k = (u + sqrt(d))^k + (u - sqrt(d))^k`, computed exactly in
/// rational arithmetic via `s_k = 2u s_(k-1) - (u^2 - d) s_(k-2)`.
fn symmetric_power_sum(u: &BigRational, d: &BigRational, n: u64) -> BigRational {
    let two = BigRational::from(BigInt::from(2));
    let mut prev = two.clone(); // s_0
    if n == 0 {
        return prev;
    }
    let mut curr = &two * u; // s_1
    let norm = u * u - d; // product of the conjugate roots
    for _ in 1..n {
        let next = &two * u * &curr - &norm * &prev;
        prev = curr;
        curr = next;
    }
    curr
}

/// Exact closed-form evaluation of the canonical z-part at a nonzero rational
/// point `z0`, for even `n ≥ 2`.
///
/// Both strips reduce to symmetric power sums of a conjugate root pair:
/// * square: `s_n(z0 - 1, 1 + z0(z0 - 6)) / (-4 z0)^(n/2)`;
/// * hexagon: `(-1)^(n/2) z0^(n/2) s_n(1, 1 - 4/z0) / 2^n`.
pub fn newton_closed_form_eval(
    kind: StripKind,
    n: u64,
    z0: &BigRational,
) -> Result<BigRational, FormulaError> {
    require_even_n(n, 2)?;
    if z0.is_zero() {
        return Err(FormulaError::ZeroEvaluationPoint);
    }
    let one = BigRational::one();
    match kind {
        StripKind::Square => {
            let u = z0 - &one;
            let six = BigRational::from(BigInt::from(6));
            let d = &one + z0 * (z0 - &six);
            let s = symmetric_power_sum(&u, &d, n);
            let minus_four_z0 = BigRational::from(BigInt::from(-4)) * z0;
            let mut denom = BigRational::one();
            for _ in 0..n / 2 {
                denom *= &minus_four_z0;
            }
            Ok(s / denom)
        }
        StripKind::Hexagon => {
            let q0 = -z0.recip();
            let d = &one + BigRational::from(BigInt::from(4)) * &q0;
            let s = symmetric_power_sum(&one, &d, n);
            let mut scale = BigRational::one();
            for _ in 0..n / 2 {
                scale *= z0;
            }
            if (n / 2) % 2 == 1 {
                scale = -scale;
            }
            let mut denom = BigRational::one();
            for _ in 0..n {
                denom *= BigRational::from(BigInt::from(2));
            }
            Ok(scale * s / denom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use laurent_core::rat;
    use num_traits::Signed;

    fn poly(s: &str) -> LaurentPoly2 {
        s.parse().expect("test polynomial must parse")
    }

    #[test]
    fn square_polynomials_match_frozen_forms() {
        assert_eq!(
            newton_sq(2).unwrap(),
            poly("4 + -1*z^1 + -1*z^-1 + -1*w^1 + -1*w^-1")
        );
        assert_eq!(
            newton_sq(6).unwrap(),
            poly(
                "-1*z^-3 + 12*z^-2 + -48*z^-1 + 76 + -48*z^1 + 12*z^2 + -1*z^3 \
                 + -1*w^1 + -1*w^-1"
            )
        );
    }

    #[test]
    fn hexagon_polynomials_match_frozen_forms() {
        assert_eq!(
            newton_hex(2).unwrap(),
            poly("2 + -1*z^1 + -1*w^1 + -1*w^-1")
        );
        assert_eq!(
            newton_hex(4).unwrap(),
            poly("2 + -4*z^1 + 1*z^2 + -1*w^1 + -1*w^-1")
        );
    }

    #[test]
    fn printed_convention_flips_exactly_the_odd_half_lengths() {
        for n in [2u64, 4, 6, 8, 10] {
            let canonical = newton_sq(n).unwrap();
            let printed = newton_sq_printed(n).unwrap();
            if (n / 2) % 2 == 0 {
                assert_eq!(canonical, printed, "n = {n}");
            } else {
                assert_ne!(canonical, printed, "n = {n}");
                let z = newton_sq_z_part(n).unwrap();
                let w = canonical.sub(&z);
                assert_eq!(printed, z.neg().add(&w), "n = {n}");
            }
        }
        // Spot value: the printed square z-part at n = 2 is z + 1/z - 4.
        let printed2 = newton_sq_printed(2).unwrap();
        assert_eq!(printed2.coeff(0, 0), BigInt::from(-4));
        assert_eq!(printed2.coeff(1, 0), BigInt::from(1));
        assert_eq!(printed2.coeff(0, 1), BigInt::from(-1));
        let printed_hex2 = newton_hex_printed(2).unwrap();
        assert_eq!(printed_hex2.coeff(0, 0), BigInt::from(-2));
        assert_eq!(printed_hex2.coeff(1, 0), BigInt::from(1));
    }

    #[test]
    fn product_recursion_reproduces_the_table_polynomials() {
        assert_eq!(newton_sq_recursive(0).unwrap(), LaurentPoly2::constant(2));
        let p2 = newton_sq_recursive(2).unwrap();
        let p4 = newton_sq_recursive(4).unwrap();
        assert_eq!(p4, p2.mul(&p2).sub(&LaurentPoly2::constant(2)));
        for n in (2u64..=16).step_by(2) {
            assert_eq!(
                newton_sq_recursive(n).unwrap(),
                newton_sq_z_part(n).unwrap(),
                "n = {n}"
            );
        }
        assert!(newton_sq_recursive(3).is_err());
    }

    #[test]
    fn closed_form_matches_spot_values() {
        assert_eq!(
            newton_closed_form_eval(StripKind::Square, 2, &rat(1, 1)).unwrap(),
            rat(2, 1)
        );
        assert_eq!(
            newton_closed_form_eval(StripKind::Square, 4, &rat(-1, 1)).unwrap(),
            rat(34, 1)
        );
        assert_eq!(
            newton_closed_form_eval(StripKind::Hexagon, 4, &rat(1, 1)).unwrap(),
            rat(-1, 1)
        );
        assert_eq!(
            newton_closed_form_eval(StripKind::Square, 2, &rat(0, 1)),
            Err(FormulaError::ZeroEvaluationPoint)
        );
    }

    #[test]
    fn closed_form_agrees_with_polynomial_evaluation() {
        let points = [rat(1, 1), rat(-1, 1), rat(2, 3), rat(-5, 2), rat(7, 1)];
        for n in (2u64..=12).step_by(2) {
            let sq = newton_sq_z_part(n).unwrap();
            let hex = newton_hex_z_part(n).unwrap();
            for z0 in &points {
                let w0 = rat(1, 1);
                assert_eq!(
                    newton_closed_form_eval(StripKind::Square, n, z0).unwrap(),
                    sq.eval(z0, &w0).unwrap(),
                    "square n = {n}, z0 = {z0}"
                );
                assert_eq!(
                    newton_closed_form_eval(StripKind::Hexagon, n, z0).unwrap(),
                    hex.eval(z0, &w0).unwrap(),
                    "hexagon n = {n}, z0 = {z0}"
                );
            }
        }
    }

    #[test]
    fn unit_evaluations_stay_pinned_for_long_strips() {
        for n in (2u64..=40).step_by(2) {
            let p = newton_sq(n).unwrap();
            assert_eq!(p.eval_pm(1, 1), BigInt::zero(), "P(1,1) at n = {n}");
            let z = newton_sq_z_part(n).unwrap();
            assert_eq!(z.eval_pm(1, 1), BigInt::from(2), "z-part at n = {n}");
        }
    }

    #[test]
    fn coefficient_signs_follow_the_parity_rule() {
        for n in [2u64, 4, 6, 10] {
            for poly in [newton_sq(n).unwrap(), newton_hex(n).unwrap()] {
                for (&(ez, ew), c) in poly.terms() {
                    let expected_positive = ez % 2 == 0 && ew % 2 == 0;
                    assert_eq!(
                        c.is_positive(),
                        expected_positive,
                        "n = {n}, exponent ({ez}, {ew})"
                    );
                }
            }
        }
    }
}
