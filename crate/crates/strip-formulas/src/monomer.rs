//! One-dimensional monomer–dimer transfer systems.
//!
//! A chain of `n` sites is filled with monomers and dimers; the partition
//! function is a polynomial in the occupation fugacities. Two flavors appear:
//!
//! * **single-fugacity** — every dimer carries weight `q`, monomers weight 1;
//!   the cycle version generates exactly the hexagon-strip coefficients;
//! * **three-weight** — alternating sites carry monomer weights `u` and `v`,
//!   dimers carry `t`; the substitution `u = -z, v = -1/z, t = 1` produces the
//!   square-strip z-part.
//!
//! Cycle (periodic) partition functions are built from the free ones as
//! `Q_n = P_n + t P_(n-2)`, which fixes the seeds `Q_0 = 2` and, in the
//! three-weight flavor, `Q_2 = 1 + u + v + uv + 2t`; the tests demonstrate
//! that weakening either seed breaks the step-two recursion.

use std::collections::BTreeMap;
use std::fmt;

use laurent_core::{BigInt, LaurentPoly2};
use num_traits::Zero;

use crate::FormulaError;

/// A polynomial in the three fugacities `u`, `v`, `t` with integer
/// coefficients, stored sparsely by exponent triple.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FugacityPoly3 {
    terms: BTreeMap<(u32, u32, u32), BigInt>,
}

impl FugacityPoly3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0, 0)
    }

    /// The single term `c * u^eu * v^ev * t^et`.
    pub fn monomial(c: impl Into<BigInt>, eu: u32, ev: u32, et: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((eu, ev, et), c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, eu: u32, ev: u32, et: u32) -> BigInt {
        self.terms
            .get(&(eu, ev, et))
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&key, c) in &other.terms {
            let entry = terms.entry(key).or_default();
            *entry += c;
            if entry.is_zero() {
                terms.remove(&key);
            }
        }
        Self { terms }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&key, c)| (key, -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<(u32, u32, u32), BigInt> = BTreeMap::new();
        for (&(au, av, at), ac) in &self.terms {
            for (&(bu, bv, bt), bc) in &other.terms {
                let key = (au + bu, av + bv, at + bt);
                let entry = terms.entry(key).or_default();
                *entry += ac * bc;
                if entry.is_zero() {
                    terms.remove(&key);
                }
            }
        }
        Self { terms }
    }

    /// Substitutes `u = -z`, `v = -1/z`, `t = 1`, mapping the three-weight
    /// cycle polynomial onto the square-strip z-part.
    pub fn substitute_square_weights(&self) -> LaurentPoly2 {
        let mut acc = LaurentPoly2::zero();
        for (&(eu, ev, _et), c) in &self.terms {
            let mut coeff = c.clone();
            if (eu + ev) % 2 == 1 {
                coeff = -coeff;
            }
            acc = acc.add(&LaurentPoly2::monomial(coeff, eu as i64 - ev as i64, 0));
        }
        acc
    }
}

impl fmt::Display for FugacityPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(&(eu, ev, et), c)| {
                let mut s = c.to_string();
                for (name, e) in [("u", eu), ("v", ev), ("t", et)] {
                    if e > 0 {
                        s.push_str(&format!("*{name}^{e}"));
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// Chain boundary condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// Open chain of `n` sites.
    Free,
    /// Cycle of `n` sites.
    Periodic,
}

/// Fugacity structure of the monomer–dimer system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdFlavor {
    /// Dimer weight `q`, monomer weight 1.
    Single,
    /// Monomer weights `u` / `v` on alternating sites, dimer weight `t`.
    ThreeWeight,
}

/// A monomer–dimer chain description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomerDimer1D {
    pub boundary: Boundary,
    pub flavor: MdFlavor,
    pub n: u64,
}

/// Partition function of a [`MonomerDimer1D`] chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MdPolynomial {
    /// Coefficients of `q^0, q^1, …` for the single-fugacity flavor.
    Single(Vec<BigInt>),
    /// Trivariate polynomial for the three-weight flavor.
    ThreeWeight(FugacityPoly3),
}

impl MonomerDimer1D {
    /// Computes the chain's partition function.
    ///
    /// Free chains need `n ≥ 1`; periodic chains need even `n ≥ 0`.
    pub fn partition_function(&self) -> Result<MdPolynomial, FormulaError> {
        match (self.boundary, self.flavor) {
            (Boundary::Free, MdFlavor::Single) => Ok(MdPolynomial::Single(md_free_single(self.n)?)),
            (Boundary::Free, MdFlavor::ThreeWeight) => {
                Ok(MdPolynomial::ThreeWeight(md_free_three(self.n)?))
            }
            (Boundary::Periodic, MdFlavor::Single) => {
                require_even(self.n)?;
                Ok(MdPolynomial::Single(md_cycle_single(self.n)))
            }
            (Boundary::Periodic, MdFlavor::ThreeWeight) => {
                Ok(MdPolynomial::ThreeWeight(md_cycle_three(self.n)?))
            }
        }
    }
}

fn require_even(n: u64) -> Result<(), FormulaError> {
    if n % 2 != 0 {
        return Err(FormulaError::InvalidDimension {
            param: "n",
            value: n as i64,
            requirement: "must be even for a periodic chain",
        });
    }
    Ok(())
}

fn require_positive(n: u64) -> Result<(), FormulaError> {
    if n == 0 {
        return Err(FormulaError::InvalidDimension {
            param: "n",
            value: 0,
            requirement: "must be at least 1 for a free chain",
        });
    }
    Ok(())
}

/// Adds `b` shifted up by one power of `q` into `a` (that is, `a + q*b`).
fn step_single(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let len = a.len().max(b.len() + 1);
    let mut out = vec![BigInt::zero(); len];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + 1] += c;
    }
    out
}

/// Free-chain single-fugacity partition function `P_n(q)` as ascending
/// `q`-coefficients: `P_1 = 1`, `P_2 = 1 + q`, `P_(k+1) = P_k + q P_(k-1)`.
pub fn md_free_single(n: u64) -> Result<Vec<BigInt>, FormulaError> {
    require_positive(n)?;
    let mut prev = vec![BigInt::from(1)]; // P_0 = 1 (empty chain)
    let mut curr = vec![BigInt::from(1)]; // P_1
    for _ in 1..n {
        let next = step_single(&curr, &prev);
        prev = curr;
        curr = next;
    }
    Ok(curr)
}

/// Cycle single-fugacity partition function `Q_n(q)` as ascending
/// `q`-coefficients.
///
/// Satisfies the same step `Q_(k+1) = Q_k + q Q_(k-1)` with seeds `Q_0 = 2`
/// and `Q_1 = 1`; defined for every `n ≥ 0` (odd cycles are legitimate
/// monomer–dimer systems, and the generating-function checks use them).
pub fn md_cycle_single(n: u64) -> Vec<BigInt> {
    let mut prev = vec![BigInt::from(2)]; // Q_0
    if n == 0 {
        return prev;
    }
    let mut curr = vec![BigInt::from(1)]; // Q_1
    for _ in 1..n {
        let next = step_single(&curr, &prev);
        prev = curr;
        curr = next;
    }
    curr
}

/// Free-chain three-weight partition function `P_n(u, v, t)`:
/// `P_1 = 1 + u`, then alternately `P_(2k+1) = (1+u) P_(2k) + t P_(2k-1)` and
/// `P_(2k+2) = (1+v) P_(2k+1) + t P_(2k)`.
pub fn md_free_three(n: u64) -> Result<FugacityPoly3, FormulaError> {
    require_positive(n)?;
    Ok(free_three_unchecked(n))
}

fn free_three_unchecked(n: u64) -> FugacityPoly3 {
    let one_plus_u = FugacityPoly3::one().add(&FugacityPoly3::monomial(1, 1, 0, 0));
    let one_plus_v = FugacityPoly3::one().add(&FugacityPoly3::monomial(1, 0, 1, 0));
    let t = FugacityPoly3::monomial(1, 0, 0, 1);
    let mut prev = FugacityPoly3::one(); // P_0
    if n == 0 {
        return prev;
    }
    let mut curr = one_plus_u.clone(); // P_1
    for i in 2..=n {
        let factor = if i % 2 == 1 { &one_plus_u } else { &one_plus_v };
        let next = factor.mul(&curr).add(&t.mul(&prev));
        prev = curr;
        curr = next;
    }
    curr
}

/// Cycle three-weight partition function `Q_n = P_n + t P_(n-2)` for even
/// `n ≥ 2`, with `Q_0 = 2`.
pub fn md_cycle_three(n: u64) -> Result<FugacityPoly3, FormulaError> {
    require_even(n)?;
    if n == 0 {
        return Ok(FugacityPoly3::constant(2));
    }
    let t = FugacityPoly3::monomial(1, 0, 0, 1);
    let p_n = free_three_unchecked(n);
    let p_minus_2 = free_three_unchecked(n - 2);
    Ok(p_n.add(&t.mul(&p_minus_2)))
}
