//! Bivariate Laurent polynomials in `z`, `w` with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    /// Substituting 0 for a variable that occurs with a negative exponent.
    #[error("substitution point {var} = 0 hits a negative exponent")]
    ZeroSubstitution { var: char },
    #[error("malformed polynomial text near `{0}`")]
    Parse(String),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

/// A Laurent polynomial in two variables `z` and `w` over `BigInt`.
///
/// Canonical form: no zero coefficient is ever stored, and term iteration is
/// ordered lexicographically by the exponent pair `(e_z, e_w)`. All values are
/// immutable after construction; every operation is pure.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// The single-term polynomial `c * z^ez * w^ew`.
    pub fn monomial(c: impl Into<BigInt>, ez: i64, ew: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((ez, ew), c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// duplicates and dropping zero results.
    pub fn from_terms(iter: impl IntoIterator<Item = ((i64, i64), BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: (i64, i64), c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `z^ez * w^ew` (zero if absent).
    pub fn coeff(&self, ez: i64, ew: i64) -> BigInt {
        self.terms.get(&(ez, ew)).cloned().unwrap_or_default()
    }

    /// Terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    /// Leading term under lexicographic order on `(e_z, e_w)`, if any.
    fn leading(&self) -> Option<(&(i64, i64), &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exponent bounding box `((min_ez, min_ew), (max_ez, max_ew))`, if nonzero.
    pub fn exponent_box(&self) -> Option<((i64, i64), (i64, i64))> {
        if self.is_zero() {
            return None;
        }
        let mut min = (i64::MAX, i64::MAX);
        let mut max = (i64::MIN, i64::MIN);
        for &(ez, ew) in self.terms.keys() {
            min.0 = min.0.min(ez);
            min.1 = min.1.min(ew);
            max.0 = max.0.max(ez);
            max.1 = max.1.max(ew);
        }
        Some((min, max))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(az, aw), ac) in &self.terms {
            for (&(bz, bw), bc) in &other.terms {
                out.add_term((az + bz, aw + bw), ac * bc);
            }
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitutes `z -> sz*z`, `w -> sw*w` for unit signs `sz, sw ∈ {+1, -1}`.
    pub fn twist(&self, sz: i8, sw: i8) -> Self {
        assert!(sz == 1 || sz == -1);
        assert!(sw == 1 || sw == -1);
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(ez, ew), c)| {
                    let mut flip = false;
                    flip ^= sz < 0 && ez.rem_euclid(2) == 1;
                    flip ^= sw < 0 && ew.rem_euclid(2) == 1;
                    ((ez, ew), if flip { -c } else { c.clone() })
                })
                .collect(),
        }
    }

    /// Exact substitution at a nonzero rational point.
    pub fn eval(&self, z0: &BigRational, w0: &BigRational) -> Result<BigRational, PolyError> {
        let mut acc = BigRational::zero();
        for (&(ez, ew), c) in &self.terms {
            let zp = rational_pow(z0, ez).ok_or(PolyError::ZeroSubstitution { var: 'z' })?;
            let wp = rational_pow(w0, ew).ok_or(PolyError::ZeroSubstitution { var: 'w' })?;
            acc += BigRational::from(c.clone()) * zp * wp;
        }
        Ok(acc)
    }

    /// Exact substitution at `(±1, ±1)`; only exponent parities matter.
    pub fn eval_pm(&self, sz: i8, sw: i8) -> BigInt {
        assert!(sz == 1 || sz == -1);
        assert!(sw == 1 || sw == -1);
        let mut acc = BigInt::zero();
        for (&(ez, ew), c) in &self.terms {
            let mut neg = false;
            neg ^= sz < 0 && ez.rem_euclid(2) == 1;
            neg ^= sw < 0 && ew.rem_euclid(2) == 1;
            if neg {
                acc -= c;
            } else {
                acc += c;
            }
        }
        acc
    }

    /// Sum of coefficient absolute values, `Σ |c|`.
    pub fn coeff_norm(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.terms.values() {
            if c.sign() == num_bigint::Sign::Minus {
                acc -= c;
            } else {
                acc += c;
            }
        }
        acc
    }

    /// Exact division in the Laurent ring: returns `q` with `self = q * d`,
    /// or `None` when no such polynomial exists.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // The quotient's exponents are confined to the box spanned by the
        // difference of the two exponent boxes; that bounds the step count.
        let (smin, smax) = self.exponent_box().unwrap();
        let (dmin, dmax) = d.exponent_box().unwrap();
        let qmin = (smin.0 - dmin.0, smin.1 - dmin.1);
        let qmax = (smax.0 - dmax.0, smax.1 - dmax.1);
        if qmin.0 > qmax.0 || qmin.1 > qmax.1 {
            return None;
        }
        let max_steps = ((qmax.0 - qmin.0 + 1) as u64).checked_mul((qmax.1 - qmin.1 + 1) as u64)?;

        let (&dlead_e, dlead_c) = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let mut steps = 0u64;
        while !rem.is_zero() {
            steps += 1;
            if steps > max_steps {
                return None;
            }
            let (&rlead_e, rlead_c) = rem.leading().unwrap();
            let te = (rlead_e.0 - dlead_e.0, rlead_e.1 - dlead_e.1);
            if te.0 < qmin.0 || te.1 < qmin.1 || te.0 > qmax.0 || te.1 > qmax.1 {
                return None;
            }
            let (tc, r) = num_integer::div_rem(rlead_c.clone(), dlead_c.clone());
            if !r.is_zero() {
                return None;
            }
            let t = Self::monomial(tc, te.0, te.1);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Canonical JSON form with big-integer-safe decimal-string coefficients.
    pub fn to_json_string(&self) -> String {
        let repr = PolyJson {
            terms: self
                .terms
                .iter()
                .map(|(&(ez, ew), c)| TermJson {
                    ez,
                    ew,
                    c: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&repr).expect("serialization of plain data cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self, PolyError> {
        let repr: PolyJson = serde_json::from_str(s).map_err(|e| PolyError::Json(e.to_string()))?;
        let mut p = Self::zero();
        for t in repr.terms {
            let c = BigInt::from_str(&t.c).map_err(|e| PolyError::Json(e.to_string()))?;
            p.add_term((t.ez, t.ew), c);
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    ez: i64,
    ew: i64,
    c: String,
}

fn rational_pow(base: &BigRational, exp: i64) -> Option<BigRational> {
    if exp == 0 {
        return Some(BigRational::one());
    }
    if base.is_zero() && exp < 0 {
        return None;
    }
    let mag = exp.unsigned_abs().try_into().ok()?;
    let p = BigRational::new(base.numer().pow(mag), base.denom().pow(mag));
    if exp < 0 {
        Some(p.recip())
    } else {
        Some(p)
    }
}

impl fmt::Display for LaurentPoly2 {
    /// Canonical text form: terms ascending by `(e_z, e_w)`, explicit
    /// coefficients and exponents, joined by ` + ` (signs live in the
    /// coefficients), e.g. `-1*z^-1 + 4 + -1*z^1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(ez, ew), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if ez != 0 {
                write!(f, "*z^{ez}")?;
            }
            if ew != 0 {
                write!(f, "*w^{ew}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly2 {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for raw_term in s.split('+') {
            let term = raw_term.trim();
            if term.is_empty() {
                return Err(PolyError::Parse(raw_term.to_string()));
            }
            let mut coeff: Option<BigInt> = None;
            let mut ez = 0i64;
            let mut ew = 0i64;
            for factor in term.split('*') {
                let factor = factor.trim();
                if let Some(rest) = factor.strip_prefix('z') {
                    ez += parse_exponent(rest).ok_or_else(|| PolyError::Parse(term.into()))?;
                } else if let Some(rest) = factor.strip_prefix('w') {
                    ew += parse_exponent(rest).ok_or_else(|| PolyError::Parse(term.into()))?;
                } else {
                    let c =
                        BigInt::from_str(factor).map_err(|_| PolyError::Parse(term.into()))?;
                    coeff = Some(match coeff {
                        None => c,
                        Some(prev) => prev * c,
                    });
                }
            }
            p.add_term((ez, ew), coeff.unwrap_or_else(BigInt::one));
        }
        Ok(p)
    }
}

fn parse_exponent(rest: &str) -> Option<i64> {
    if rest.is_empty() {
        return Some(1);
    }
    rest.strip_prefix('^')?.parse().ok()
}

impl std::ops::Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        LaurentPoly2::add(self, rhs)
    }
}

impl std::ops::Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        LaurentPoly2::sub(self, rhs)
    }
}

impl std::ops::Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        LaurentPoly2::mul(self, rhs)
    }
}

impl std::ops::Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn p(s: &str) -> LaurentPoly2 {
        s.parse().unwrap()
    }

    #[test]
    fn add_assembles_full_torus_polynomial() {
        let z_part = p("4 + -1*z^1 + -1*z^-1");
        let w_part = p("-1*w^1 + -1*w^-1");
        let full = &z_part + &w_part;
        assert_eq!(full, p("4 + -1*z^1 + -1*z^-1 + -1*w^1 + -1*w^-1"));
        assert_eq!(full.num_terms(), 5);
    }

    #[test]
    fn additive_identity_and_inverse() {
        let q = p("4 + -1*z^1 + -1*z^-1");
        assert_eq!(&q + &LaurentPoly2::zero(), q);
        assert!((&p("1*z^1") + &p("-1*z^1")).is_zero());
    }

    #[test]
    fn square_of_strip_seed_expands_exactly() {
        let q = p("4 + -1*z^1 + -1*z^-1");
        let sq = q.pow(2);
        assert_eq!(sq, p("18 + -8*z^1 + -8*z^-1 + 1*z^2 + 1*z^-2"));
        assert_eq!(&q * &LaurentPoly2::one(), q);
    }

    #[test]
    fn eval_matches_hand_substitution() {
        let full = p("4 + -1*z^1 + -1*z^-1 + -1*w^1 + -1*w^-1");
        let v = full.eval(&rat(1, 1), &rat(-1, 1)).unwrap();
        assert_eq!(v, rat(4, 1));
        assert_eq!(full.eval_pm(1, -1), 4.into());
        assert_eq!(full.eval_pm(1, 1), 0.into());
        assert_eq!(LaurentPoly2::one().eval(&rat(7, 3), &rat(-2, 5)).unwrap(), rat(1, 1));
    }

    #[test]
    fn eval_rejects_zero_at_negative_exponent() {
        let q = p("1*z^-1");
        assert_eq!(
            q.eval(&rat(0, 1), &rat(1, 1)),
            Err(PolyError::ZeroSubstitution { var: 'z' })
        );
        // A plain polynomial part is fine with zero.
        assert_eq!(p("3 + 1*z^2").eval(&rat(0, 1), &rat(5, 1)).unwrap(), rat(3, 1));
    }

    #[test]
    fn display_is_sorted_and_round_trips() {
        let q = p("-1*w^1 + 4 + -1*z^1 + -1*w^-1 + -1*z^-1");
        let text = q.to_string();
        assert_eq!(text, "-1*z^-1 + -1*w^-1 + 4 + -1*w^1 + -1*z^1");
        assert_eq!(text.parse::<LaurentPoly2>().unwrap(), q);
    }

    #[test]
    fn json_round_trips_with_string_coefficients() {
        let q = LaurentPoly2::from_terms([
            ((-1, 0), BigInt::from(-1)),
            ((0, 0), BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap()),
        ]);
        let s = q.to_json_string();
        assert!(s.contains("\"123456789012345678901234567890\""));
        assert_eq!(LaurentPoly2::from_json_str(&s).unwrap(), q);
    }

    #[test]
    fn twist_flips_odd_exponent_signs() {
        let q = p("4 + -1*z^1 + -1*z^-1 + -1*w^1");
        assert_eq!(q.twist(-1, 1), p("4 + 1*z^1 + 1*z^-1 + -1*w^1"));
        assert_eq!(q.twist(1, -1), p("4 + -1*z^1 + -1*z^-1 + 1*w^1"));
        assert_eq!(q.twist(-1, -1).twist(-1, -1), q);
    }

    #[test]
    fn div_exact_inverts_multiplication() {
        let a = p("4 + -1*z^1 + -1*z^-1");
        let b = p("2 + 3*z^2 + -1*w^1 + 5*z^-1*w^-1");
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        // Geometric-series quotient with more terms than either input.
        let num = p("1*z^5 + -1");
        let den = p("1*z^1 + -1");
        let quot = num.div_exact(&den).unwrap();
        assert_eq!(quot, p("1*z^4 + 1*z^3 + 1*z^2 + 1*z^1 + 1"));
        assert_eq!(p("1*z^2 + 1").div_exact(&p("1*z^1 + 1")), None);
        assert_eq!(p("3*z^1").div_exact(&p("2")), None);
    }

    #[test]
    fn coeff_norm_sums_absolute_values() {
        let q = p("4 + -1*z^1 + -1*z^-1 + -1*w^1 + -1*w^-1");
        assert_eq!(q.coeff_norm(), 8.into());
    }
}
