//! Truncated univariate power series over an exact coefficient ring.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::LaurentPoly2;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    /// Rational-function expansion needs an invertible constant term downstairs.
    #[error("denominator constant term is not invertible")]
    DenominatorNotInvertible,
}

/// An exact commutative ring element usable as a series coefficient.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

/// A [`Coeff`] with multiplicative inverses (needed to divide series).
pub trait FieldCoeff: Coeff {
    /// Multiplicative inverse, or `None` for non-invertible elements.
    fn inv(&self) -> Option<Self>;
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl FieldCoeff for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coeff for LaurentPoly2 {
    fn zero() -> Self {
        LaurentPoly2::zero()
    }
    fn one() -> Self {
        LaurentPoly2::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly2::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        LaurentPoly2::add(self, other)
    }
    fn neg(&self) -> Self {
        LaurentPoly2::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentPoly2::mul(self, other)
    }
}

/// A power series truncated after `s^order`: it stores exactly `order + 1`
/// coefficients for `s^0 … s^order` and represents the class modulo
/// `s^(order+1)`. Arithmetic truncates to the smaller operand order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries1<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> PowerSeries1<C> {
    /// Series with the given coefficients for `s^0 ..= s^(len-1)`.
    ///
    /// Panics on an empty list: a truncated series always carries at least
    /// the constant term.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs a constant term");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    /// Highest retained power of `s`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `s^k`; `None` beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&C> {
        self.coeffs.get(k)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k].add(&other.coeffs[k]))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(C::neg).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Cauchy product, truncated to the smaller operand order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self { coeffs }
    }

    pub fn scale(&self, k: &C) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.mul(k)).collect(),
        }
    }
}

/// Expands `num(s) / den(s)` as a power series through `s^order`.
///
/// Coefficient lists are ascending (`num[k]` is the `s^k` coefficient);
/// missing entries are zero. Fails when the denominator's constant term is
/// not invertible.
pub fn series_of_rational<C: FieldCoeff>(
    num: &[C],
    den: &[C],
    order: usize,
) -> Result<PowerSeries1<C>, SeriesError> {
    let den0_inv = den
        .first()
        .and_then(FieldCoeff::inv)
        .ok_or(SeriesError::DenominatorNotInvertible)?;
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = num.get(k).cloned().unwrap_or_else(C::zero);
        for j in 1..=k.min(den.len() - 1) {
            acc = acc.sub(&den[j].mul(&coeffs[k - j]));
        }
        coeffs.push(acc.mul(&den0_inv));
    }
    Ok(PowerSeries1 { coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn geometric_series_is_all_ones() {
        let s = series_of_rational(&rats(&[1]), &rats(&[1, -1]), 3).unwrap();
        assert_eq!(s.coeffs(), rats(&[1, 1, 1, 1]).as_slice());
    }

    #[test]
    fn acyclic_count_generating_function_coefficients() {
        // 4s^2 / ((1 - 2s - s^2)(1 - s)); the cubic below is that product.
        let den = [rat(1, 1), rat(-3, 1), rat(1, 1), rat(1, 1)];
        let s = series_of_rational(&rats(&[0, 0, 4]), &den, 6).unwrap();
        assert_eq!(s.coeffs(), rats(&[0, 0, 4, 12, 32, 80, 196]).as_slice());
    }

    #[test]
    fn lucas_like_expansion_at_unit_weight() {
        // (s - 2) / (s^2 + s - 1), i.e. the q = 1 slice of (s - 2)/(s^2 q + s - 1).
        let s = series_of_rational(&rats(&[-2, 1]), &rats(&[-1, 1, 1]), 5).unwrap();
        assert_eq!(s.coeffs(), rats(&[2, 1, 3, 4, 7, 11]).as_slice());
    }

    #[test]
    fn expansion_times_denominator_recovers_numerator() {
        let num = rats(&[3, 0, -5, 7]);
        let den = rats(&[2, -1, 4]);
        let s = series_of_rational(&num, &den, 9).unwrap();
        let den_series = PowerSeries1::from_coeffs({
            let mut d = den.clone();
            d.resize(10, rat(0, 1));
            d
        });
        let prod = s.mul(&den_series);
        let mut expected = num.clone();
        expected.resize(10, rat(0, 1));
        assert_eq!(prod.coeffs(), expected.as_slice());
    }

    #[test]
    fn zero_constant_denominator_is_rejected() {
        let err = series_of_rational(&rats(&[1]), &rats(&[0, 1]), 4).unwrap_err();
        assert_eq!(err, SeriesError::DenominatorNotInvertible);
        let err = series_of_rational::<BigRational>(&rats(&[1]), &[], 4).unwrap_err();
        assert_eq!(err, SeriesError::DenominatorNotInvertible);
    }

    #[test]
    fn series_arithmetic_truncates_to_smaller_order() {
        let a = PowerSeries1::from_coeffs(rats(&[1, 2, 3, 4]));
        let b = PowerSeries1::from_coeffs(rats(&[1, 1]));
        assert_eq!(a.add(&b).coeffs(), rats(&[2, 3]).as_slice());
        assert_eq!(a.mul(&b).coeffs(), rats(&[1, 3]).as_slice());
        assert_eq!(a.truncate(1).coeffs(), rats(&[1, 2]).as_slice());
    }

    #[test]
    fn polynomial_coefficients_support_symbolic_series() {
        // (1 + q s) * (1 - q s) = 1 - q^2 s^2 with q carried symbolically.
        let q = LaurentPoly2::monomial(1, 1, 0);
        let one = LaurentPoly2::one();
        let a = PowerSeries1::from_coeffs(vec![one.clone(), q.clone(), LaurentPoly2::zero()]);
        let b = PowerSeries1::from_coeffs(vec![one.clone(), q.neg(), LaurentPoly2::zero()]);
        let prod = a.mul(&b);
        assert_eq!(
            prod.coeffs(),
            &[one, LaurentPoly2::zero(), q.mul(&q).neg()]
        );
    }
}
