//! Weight histograms over exact big-integer counts.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use laurent_core::{BigInt, LaurentPoly2};

/// Map from matching weight `(n_z, n_w)` to the exact number of perfect
/// matchings attaining it. Only attained weights are stored, so every stored
/// count is at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightHistogram {
    counts: BTreeMap<(i64, i64), BigInt>,
}

impl WeightHistogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn record(&mut self, weight: (i64, i64), count: u64) {
        if count == 0 {
            return;
        }
        *self.counts.entry(weight).or_default() += count;
    }

    pub(crate) fn merge(&mut self, other: WeightHistogram) {
        for (weight, count) in other.counts {
            *self.counts.entry(weight).or_default() += count;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Count at one weight (zero if unattained).
    pub fn get(&self, nz: i64, nw: i64) -> BigInt {
        self.counts.get(&(nz, nw)).cloned().unwrap_or_default()
    }

    /// All `(weight, count)` pairs, sorted by weight.
    pub fn counts(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.counts.iter()
    }

    pub fn occupied_weights(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.counts.keys().copied()
    }

    /// Total number of matchings.
    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }

    /// Counts at `n_w = 0`, keyed by `n_z`.
    pub fn z_sector(&self) -> BTreeMap<i64, BigInt> {
        self.counts
            .iter()
            .filter(|((_, nw), _)| *nw == 0)
            .map(|(&(nz, _), c)| (nz, c.clone()))
            .collect()
    }

    /// True when the histogram is invariant under `(n_z, n_w) → (−n_z, −n_w)`.
    pub fn is_negation_symmetric(&self) -> bool {
        self.counts
            .iter()
            .all(|(&(nz, nw), c)| self.get(-nz, -nw) == *c)
    }

    /// The signed counting polynomial: each weight's count enters with sign
    /// `(−1)^(n_z + n_w + n_z n_w)`, i.e. `+` exactly on the even/even parity
    /// class. Summing `½(−P(1,1) + P(1,−1) + P(−1,1) + P(−1,−1))` then
    /// recovers the plain total because each parity class picks up `+2`
    /// across the four sign choices except the even/even class, which picks
    /// up `−1 + 1 + 1 + 1 = 2` as well.
    pub fn signed_polynomial(&self) -> LaurentPoly2 {
        LaurentPoly2::from_terms(self.counts.iter().map(|(&(nz, nw), c)| {
            let exponent = nz + nw + nz * nw;
            let signed = if exponent.rem_euclid(2) == 1 {
                -c.clone()
            } else {
                c.clone()
            };
            ((nz, nw), signed)
        }))
    }

    /// CSV rows `nz,nw,count` (with header), sorted by weight.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("nz,nw,count\n");
        for (&(nz, nw), c) in &self.counts {
            writeln!(out, "{nz},{nw},{c}").expect("writing to a String cannot fail");
        }
        out
    }
}
