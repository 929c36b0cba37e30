//! Closed-form coefficient tables for the strip weight polynomials.
//!
//! The square strip's horizontal-dimer counts `b(n, p)` refine by an auxiliary
//! index `q` (the number of doubled steps in the transfer word), and the
//! hexagon strip's counts `a(n, p)` coincide with the diagonal `b(n, p, p)`.

use laurent_core::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::FormulaError;

/// Hexagon-strip coefficient `a(n, p)`: the number of matchings of the 2×n
/// hexagon strip with `p` z-crossing dimers, for even `n ≥ 2`.
///
/// Equals `n/(n-p) * C(n-p, p)`, computed in the integer-safe split form
/// `C(n-p, p) + C(n-p-1, p-1)`. Out-of-range `p` (that is, `p > n/2`)
/// yields zero; odd or too-small `n` is an argument error.
pub fn a_hex(n: u64, p: u64) -> Result<BigInt, FormulaError> {
    if n < 2 || n % 2 != 0 {
        return Err(FormulaError::InvalidDimension {
            param: "n",
            value: n as i64,
            requirement: "must be even and at least 2",
        });
    }
    if 2 * p > n {
        return Ok(BigInt::zero());
    }
    if p == 0 {
        return Ok(BigInt::one());
    }
    let c1 = binomial(BigInt::from(n - p), BigInt::from(p));
    let c2 = binomial(BigInt::from(n - p - 1), BigInt::from(p - 1));
    Ok(c1 + c2)
}

/// Exact factorial as a `BigInt`.
fn factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    acc
}

/// Refined square-strip coefficient `b(n, p, q)`:
/// `n * (n-q-1)! / (q! * (p-q)! * (n-p-q)!)`.
///
/// The reciprocal factorial of a negative integer is taken to be zero, so any
/// argument combination with `q > p` or `p + q > n` yields zero rather than
/// an error. The surviving combinations always leave the numerator factorial
/// argument nonnegative.
pub fn b_sq_refined(n: u64, p: u64, q: u64) -> BigInt {
    if n == 0 || q > p || p + q > n {
        return BigInt::zero();
    }
    // q <= p and p + q <= n force 2q <= n, hence n - q - 1 >= n/2 - 1 >= 0.
    let numerator = BigInt::from(n) * factorial(n - q - 1);
    let denominator = factorial(q) * factorial(p - q) * factorial(n - p - q);
    let (quot, rem) = num_integer::Integer::div_rem(&numerator, &denominator);
    debug_assert!(rem.is_zero(), "refined coefficient must be an integer");
    quot
}

/// Square-strip coefficient `b(n, p)`: the number of matchings of the 2×n
/// square strip with `p` z-crossing dimers. Sum of [`b_sq_refined`] over `q`.
pub fn b_sq(n: u64, p: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for q in 0..=p.min(n.saturating_sub(p)) {
        acc += b_sq_refined(n, p, q);
    }
    acc
}

/// Which strip family a [`CoefficientTable`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// Square strip: marginals `b(n, p)` for `p = 0..=n`, refined by `q`.
    Square,
    /// Hexagon strip: `a(n, p)` for `p = 0..=n/2`.
    Hexagon,
}

/// A full coefficient row for one strip length, with optional refinement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    kind: TableKind,
    n: u64,
    values: Vec<BigInt>,
    refinement: Option<Vec<Vec<BigInt>>>,
}

impl CoefficientTable {
    /// The square-strip table for even `n ≥ 2`, including the `q`-refinement.
    pub fn square(n: u64) -> Result<Self, FormulaError> {
        Self::require_even(n)?;
        let values = (0..=n).map(|p| b_sq(n, p)).collect();
        let refinement = (0..=n)
            .map(|p| (0..=p).map(|q| b_sq_refined(n, p, q)).collect())
            .collect();
        Ok(Self {
            kind: TableKind::Square,
            n,
            values,
            refinement: Some(refinement),
        })
    }

    /// The hexagon-strip table for even `n ≥ 2`.
    pub fn hexagon(n: u64) -> Result<Self, FormulaError> {
        Self::require_even(n)?;
        let values = (0..=n / 2)
            .map(|p| a_hex(n, p))
            .collect::<Result<_, _>>()?;
        Ok(Self {
            kind: TableKind::Hexagon,
            n,
            values,
            refinement: None,
        })
    }

    fn require_even(n: u64) -> Result<(), FormulaError> {
        if n < 2 || n % 2 != 0 {
            return Err(FormulaError::InvalidDimension {
                param: "n",
                value: n as i64,
                requirement: "must be even and at least 2",
            });
        }
        Ok(())
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Marginal coefficients indexed by `p`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Refined coefficients `[p][q]`, present for the square table.
    pub fn refinement(&self) -> Option<&[Vec<BigInt>]> {
        self.refinement.as_deref()
    }

    /// Marginal table as CSV (`n,p,b_np` or `n,p,a_np`).
    pub fn to_csv_string(&self) -> String {
        let header = match self.kind {
            TableKind::Square => "n,p,b_np",
            TableKind::Hexagon => "n,p,a_np",
        };
        let mut out = String::from(header);
        out.push('\n');
        for (p, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{},{},{}\n", self.n, p, v));
        }
        out
    }

    /// Refined table as CSV (`n,p,q,b_npq`); `None` when no refinement exists.
    pub fn to_csv_refined_string(&self) -> Option<String> {
        let refinement = self.refinement.as_ref()?;
        let mut out = String::from("n,p,q,b_npq\n");
        for (p, row) in refinement.iter().enumerate() {
            for (q, v) in row.iter().enumerate() {
                out.push_str(&format!("{},{},{},{}\n", self.n, p, q, v));
            }
        }
        Some(out)
    }
}
