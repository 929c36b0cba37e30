//! Closed-form count of minimum feedback arc sets on the square strip's dual.

use laurent_core::BigInt;

use crate::FormulaError;

/// Number of minimum feedback arc sets of the 2×n square strip's dual
/// digraph, for even `n ≥ 2`.
///
/// Equals the symmetric power sum of the conjugate pair `-1 ± sqrt(2)`,
/// minus 2. For even `n` that pair's power sum agrees with the one for
/// `1 ± sqrt(2)`, so the value is `u_n - 2` with the integer recurrence
/// `u_k = 2 u_(k-1) + u_(k-2)`, `u_0 = u_1 = 2`.
pub fn fas_count_formula(n: u64) -> Result<BigInt, FormulaError> {
    if n < 2 || n % 2 != 0 {
        return Err(FormulaError::InvalidDimension {
            param: "n",
            value: n as i64,
            requirement: "must be even and at least 2",
        });
    }
    let mut prev = BigInt::from(2); // u_0
    let mut curr = BigInt::from(2); // u_1
    for _ in 1..n {
        let next = BigInt::from(2) * &curr + &prev;
        prev = curr;
        curr = next;
    }
    Ok(curr - BigInt::from(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_frozen_counts() {
        assert_eq!(fas_count_formula(2).unwrap(), BigInt::from(4));
        assert_eq!(fas_count_formula(4).unwrap(), BigInt::from(32));
        assert_eq!(fas_count_formula(6).unwrap(), BigInt::from(196));
    }

    #[test]
    fn rejects_odd_or_tiny_lengths() {
        assert!(fas_count_formula(3).is_err());
        assert!(fas_count_formula(0).is_err());
    }
}
