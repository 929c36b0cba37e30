//! Exact symbolic determinants over the Laurent polynomial ring.

use crate::EngineError;
use laurent_core::LaurentPoly2;

/// Size guard for fraction-free elimination.
pub const BAREISS_LIMIT: usize = 64;
/// Size guard for expansion by minors (exponential in the dimension).
pub const MINORS_LIMIT: usize = 12;

fn check_square(entries: &[Vec<LaurentPoly2>]) -> usize {
    let n = entries.len();
    for row in entries {
        assert_eq!(row.len(), n, "determinant requires a square matrix");
    }
    n
}

/// Exact determinant by Bareiss fraction-free elimination.  Every division
/// performed is exact in the Laurent ring (guaranteed by the algorithm over
/// an integral domain), so no fractions ever appear.  Pivots are chosen as
/// the first nonzero entry in each column, keeping the routine deterministic.
pub fn det_bareiss(entries: &[Vec<LaurentPoly2>]) -> Result<LaurentPoly2, EngineError> {
    let n = check_square(entries);
    if n > BAREISS_LIMIT {
        return Err(EngineError::MatrixTooLarge {
            routine: "fraction-free elimination",
            size: n,
            limit: BAREISS_LIMIT,
        });
    }
    if n == 0 {
        return Ok(LaurentPoly2::one());
    }
    let mut m: Vec<Vec<LaurentPoly2>> = entries.to_vec();
    let mut negate = false;
    let mut prev_pivot = LaurentPoly2::one();
    for k in 0..n - 1 {
        let Some(pivot_row) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Ok(LaurentPoly2::zero());
        };
        if pivot_row != k {
            m.swap(k, pivot_row);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let numerator = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = numerator
                    .div_exact(&prev_pivot)
                    .expect("fraction-free elimination divides exactly");
            }
            m[i][k] = LaurentPoly2::zero();
        }
        prev_pivot = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if negate {
        det = det.neg();
    }
    Ok(det)
}

/// Exact determinant by expansion along rows with memoization on column
/// subsets.  Exponential in the dimension, hence the tight size guard; kept
/// as an independent route for cross-checking the elimination code.
pub fn det_minors(entries: &[Vec<LaurentPoly2>]) -> Result<LaurentPoly2, EngineError> {
    let n = check_square(entries);
    if n > MINORS_LIMIT {
        return Err(EngineError::MatrixTooLarge {
            routine: "expansion by minors",
            size: n,
            limit: MINORS_LIMIT,
        });
    }
    if n == 0 {
        return Ok(LaurentPoly2::one());
    }
    // dp[mask] = determinant of the block on rows 0..popcount(mask) and the
    // column set encoded by mask; built layer by layer over the popcount.
    let full = (1u32 << n) - 1;
    let mut dp = vec![None::<LaurentPoly2>; 1 << n];
    dp[0] = Some(LaurentPoly2::one());
    let mut masks_by_count = vec![Vec::new(); n + 1];
    for mask in 0..=full {
        masks_by_count[mask.count_ones() as usize].push(mask);
    }
    for count in 1..=n {
        for &mask in &masks_by_count[count] {
            let row = count - 1;
            let mut acc = LaurentPoly2::zero();
            let mut position = 0;
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let sub = dp[(mask ^ (1 << col)) as usize]
                    .as_ref()
                    .expect("lower layer already filled");
                if !entries[row][col].is_zero() && !sub.is_zero() {
                    let contribution = &entries[row][col] * sub;
                    // Cofactor sign for expansion along the block's last row.
                    acc = if (row + position) % 2 == 0 {
                        &acc + &contribution
                    } else {
                        &acc - &contribution
                    };
                }
                position += 1;
            }
            dp[mask as usize] = Some(acc);
        }
        // Entries of the previous layer are dead; drop them to bound memory.
        if count >= 2 {
            for &mask in &masks_by_count[count - 2] {
                dp[mask as usize] = None;
            }
        }
    }
    Ok(dp[full as usize].take().expect("full mask computed"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use laurent_core::BigInt;

    fn c(v: i64) -> LaurentPoly2 {
        LaurentPoly2::constant(v)
    }

    fn mono(v: i64, ez: i64, ew: i64) -> LaurentPoly2 {
        LaurentPoly2::monomial(BigInt::from(v), ez, ew)
    }

    #[test]
    fn empty_and_single_matrices() {
        assert_eq!(det_bareiss(&[]).unwrap(), LaurentPoly2::one());
        assert_eq!(det_minors(&[]).unwrap(), LaurentPoly2::one());
        let m = vec![vec![mono(3, -1, 2)]];
        assert_eq!(det_bareiss(&m).unwrap(), mono(3, -1, 2));
        assert_eq!(det_minors(&m).unwrap(), mono(3, -1, 2));
    }

    #[test]
    fn two_by_two_with_laurent_entries() {
        // det [[z, w], [w^-1, z^-1]] = z*z^-1 - w*w^-1 = 0.
        let m = vec![
            vec![mono(1, 1, 0), mono(1, 0, 1)],
            vec![mono(1, 0, -1), mono(1, -1, 0)],
        ];
        assert!(det_bareiss(&m).unwrap().is_zero());
        assert!(det_minors(&m).unwrap().is_zero());
    }

    #[test]
    fn pivoting_handles_leading_zeros() {
        // Row swap introduces a sign: det [[0, 1], [1, 0]] = -1.
        let m = vec![vec![c(0), c(1)], vec![c(1), c(0)]];
        assert_eq!(det_bareiss(&m).unwrap(), c(-1));
        assert_eq!(det_minors(&m).unwrap(), c(-1));
    }

    #[test]
    fn singular_matrix_gives_zero() {
        let m = vec![
            vec![c(1), c(2), c(3)],
            vec![c(2), c(4), c(6)],
            vec![c(0), c(1), c(5)],
        ];
        assert!(det_bareiss(&m).unwrap().is_zero());
        assert!(det_minors(&m).unwrap().is_zero());
    }

    #[test]
    fn both_routes_agree_on_a_dense_symbolic_matrix() {
        // Deterministic pseudo-random small Laurent entries.
        let n = 5;
        let mut state = 0x243F6A8885A308D3u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        let m: Vec<Vec<LaurentPoly2>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let v = (next() % 6) as i64 + 1;
                        let ez = (next() % 3) as i64 - 1;
                        let ew = (next() % 3) as i64 - 1;
                        mono(v, ez, ew)
                    })
                    .collect()
            })
            .collect();
        let det = det_bareiss(&m).unwrap();
        assert!(!det.is_zero(), "test matrix should be nonsingular");
        assert_eq!(det, det_minors(&m).unwrap());
    }

    #[test]
    fn size_guards_fire() {
        let big = vec![vec![c(1); 13]; 13];
        assert!(matches!(
            det_minors(&big),
            Err(EngineError::MatrixTooLarge { limit: 12, .. })
        ));
        let huge = vec![vec![c(1); 65]; 65];
        assert!(matches!(
            det_bareiss(&huge),
            Err(EngineError::MatrixTooLarge { limit: 64, .. })
        ));
    }
}
