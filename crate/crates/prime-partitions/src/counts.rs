//! Exact partition counts over the prime spectrum, in arbitrary precision.
//!
//! Two independent routes produce the distinct-prime coefficients:
//!
//! 1. [`count_distinct`] runs a 0/1-knapsack recurrence (primes outer, `n`
//!    descending, so each prime enters at most once);
//! 2. [`genfunc_coefficients`] expands the truncated product
//!    `prod_{p <= n_max} (1 + x^p)` by schoolbook polynomial multiplication
//!    into a fresh buffer per factor.
//!
//! They share no arithmetic beyond big-integer addition, so elementwise
//! agreement is a meaningful cross-check. [`count_unrestricted`] is the
//! bosonic variant (ascending `n`, repetitions allowed) and
//! [`count_restricted`] additionally tracks the number of parts.
//!
//! Counts grow fast — the distinct-prime count near `n = 10^5` already has
//! about a hundred decimal digits — so fixed-width accumulators would be a
//! correctness bug, not a shortcut. Everything here is `BigUint`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use std::sync::OnceLock;
use thiserror::Error;

use crate::primes::sieve_primes;

/// Largest supported table size. Tables scale linearly in memory and
/// quadratically-ish in time; beyond this bound the build is rejected up
/// front instead of exhausting the allocator.
pub const MAX_TABLE_N: usize = 10_000_000;

#[derive(Debug, Error)]
pub enum CountsError {
    #[error("table to n_max={0} exceeds the supported maximum {MAX_TABLE_N}")]
    TableTooLarge(usize),
    #[error("index {index} out of range for table with n_max={n_max}")]
    IndexOutOfRange { index: usize, n_max: usize },
    #[error("count at n={0} is zero, logarithm undefined")]
    LogOfZero(usize),
}

/// Which occupancy rule a table was built under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartitionKind {
    /// Each prime used at most once: counts `Q(n)`, OEIS A000586.
    DistinctPrimes,
    /// Unlimited repetitions: counts `P(n)`, OEIS A000607.
    UnrestrictedPrimes,
}

impl PartitionKind {
    /// Short label used by the cache file format and the CLI.
    pub fn label(self) -> &'static str {
        match self {
            PartitionKind::DistinctPrimes => "distinct",
            PartitionKind::UnrestrictedPrimes => "all",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        match label {
            "distinct" => Some(PartitionKind::DistinctPrimes),
            "all" => Some(PartitionKind::UnrestrictedPrimes),
            _ => None,
        }
    }
}

/// Exact counts for `n = 0..=n_max`, tagged by partition kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTable {
    kind: PartitionKind,
    counts: Vec<BigUint>,
}

impl PartitionTable {
    pub(crate) fn from_parts(kind: PartitionKind, counts: Vec<BigUint>) -> Self {
        assert!(!counts.is_empty());
        PartitionTable { kind, counts }
    }

    pub fn kind(&self) -> PartitionKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, n: usize) -> Result<&BigUint, CountsError> {
        self.counts.get(n).ok_or(CountsError::IndexOutOfRange {
            index: n,
            n_max: self.n_max(),
        })
    }

    /// A copy truncated to a smaller `n_max`. Entries of a table are final as
    /// soon as they are computed, so the prefix of a larger table equals the
    /// table built directly to the smaller bound.
    pub fn prefix(&self, n_max: usize) -> Result<PartitionTable, CountsError> {
        if n_max > self.n_max() {
            return Err(CountsError::IndexOutOfRange {
                index: n_max,
                n_max: self.n_max(),
            });
        }
        Ok(PartitionTable {
            kind: self.kind,
            counts: self.counts[..=n_max].to_vec(),
        })
    }
}

/// Counts of partitions into exactly `N` distinct primes, `N` per row.
///
/// Rows above the largest feasible part count (the largest `N` whose `N`
/// smallest primes still sum to at most `n_max`) are identically zero and not
/// stored; [`RestrictedTable::count`] reports them as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedTable {
    n_max: usize,
    rows: Vec<Vec<BigUint>>,
}

fn zero() -> &'static BigUint {
    static ZERO: OnceLock<BigUint> = OnceLock::new();
    ZERO.get_or_init(BigUint::zero)
}

impl RestrictedTable {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Largest part count with a stored row.
    pub fn n_parts_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn count(&self, n_parts: usize, n: usize) -> Result<&BigUint, CountsError> {
        if n > self.n_max {
            return Err(CountsError::IndexOutOfRange {
                index: n,
                n_max: self.n_max,
            });
        }
        Ok(self.rows.get(n_parts).map_or(zero(), |row| &row[n]))
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    /// Sum of `Q_N(n)` over all stored part counts.
    pub fn row_sum(&self, n: usize) -> Result<BigUint, CountsError> {
        if n > self.n_max {
            return Err(CountsError::IndexOutOfRange {
                index: n,
                n_max: self.n_max,
            });
        }
        Ok(self.rows.iter().map(|row| &row[n]).sum())
    }
}

fn check_size(n_max: usize) -> Result<(), CountsError> {
    if n_max > MAX_TABLE_N {
        return Err(CountsError::TableTooLarge(n_max));
    }
    Ok(())
}

fn table_primes(n_max: usize) -> Vec<usize> {
    if n_max < 2 {
        Vec::new()
    } else {
        // n_max >= 2, so the sieve precondition holds
        sieve_primes(n_max).expect("n_max >= 2").primes().to_vec()
    }
}

/// Builds either table kind, reporting progress at decade boundaries.
///
/// The callback receives `d` once all counts for `n <= d` are final, for
/// `d = 10, 100, ...` up to `n_max`.
pub fn count_table(
    kind: PartitionKind,
    n_max: usize,
    mut progress: Option<&mut dyn FnMut(usize)>,
) -> Result<PartitionTable, CountsError> {
    check_size(n_max)?;
    let mut counts = vec![BigUint::zero(); n_max + 1];
    counts[0] = BigUint::one();
    let primes = table_primes(n_max);
    let mut next_decade = 10usize;
    let mut iter = primes.iter().copied().peekable();
    while let Some(p) = iter.next() {
        match kind {
            PartitionKind::DistinctPrimes => {
                // descending n: each prime contributes at most once
                for n in (p..=n_max).rev() {
                    let (lo, hi) = counts.split_at_mut(n);
                    hi[0] += &lo[n - p];
                }
            }
            PartitionKind::UnrestrictedPrimes => {
                // ascending n: unbounded repetitions
                for n in p..=n_max {
                    let (lo, hi) = counts.split_at_mut(n);
                    hi[0] += &lo[n - p];
                }
            }
        }
        if let Some(cb) = progress.as_deref_mut() {
            let frontier = iter.peek().copied().unwrap_or(n_max + 1);
            while next_decade <= n_max && frontier > next_decade {
                cb(next_decade);
                next_decade *= 10;
            }
        }
    }
    Ok(PartitionTable { kind, counts })
}

/// Number of sets of distinct primes summing to each `n <= n_max`.
pub fn count_distinct(n_max: usize) -> Result<PartitionTable, CountsError> {
    count_table(PartitionKind::DistinctPrimes, n_max, None)
}

/// Number of multisets of primes summing to each `n <= n_max`.
pub fn count_unrestricted(n_max: usize) -> Result<PartitionTable, CountsError> {
    count_table(PartitionKind::UnrestrictedPrimes, n_max, None)
}

/// Largest `N` such that the `N` smallest primes sum to at most `n_max`.
fn max_feasible_parts(primes: &[usize], n_max: usize) -> usize {
    let mut total = 0usize;
    let mut n_parts = 0usize;
    for &p in primes {
        total += p;
        if total > n_max {
            break;
        }
        n_parts += 1;
    }
    n_parts
}

/// Counts of partitions into exactly `N` distinct primes, for
/// `N <= n_parts_max` and `n <= n_max`.
pub fn count_restricted(n_max: usize, n_parts_max: usize) -> Result<RestrictedTable, CountsError> {
    check_size(n_max)?;
    let primes = table_primes(n_max);
    let stored = n_parts_max.min(max_feasible_parts(&primes, n_max));
    let mut rows = vec![vec![BigUint::zero(); n_max + 1]; stored + 1];
    rows[0][0] = BigUint::one();
    for &p in &primes {
        for n_parts in (1..=stored).rev() {
            let (lo_rows, hi_rows) = rows.split_at_mut(n_parts);
            let src = &lo_rows[n_parts - 1];
            let dst = &mut hi_rows[0];
            for n in (p..=n_max).rev() {
                dst[n] += &src[n - p];
            }
        }
    }
    Ok(RestrictedTable { n_max, rows })
}

/// Truncated product of two coefficient vectors, schoolbook style.
fn poly_mul_truncated(a: &[BigUint], b: &[BigUint], n_max: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); n_max + 1];
    for (j, bj) in b.iter().enumerate() {
        if bj.is_zero() || j > n_max {
            continue;
        }
        for (i, ai) in a.iter().enumerate().take(n_max - j + 1) {
            if !ai.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Coefficients of `prod_{p <= n_max} (1 + x^p)` modulo `x^(n_max+1)`.
///
/// This is the generating function of the distinct-prime counts, expanded by
/// direct polynomial multiplication rather than the knapsack recurrence, so
/// it serves as an independent oracle for [`count_distinct`].
pub fn genfunc_coefficients(n_max: usize) -> Result<PartitionTable, CountsError> {
    check_size(n_max)?;
    let mut acc = vec![BigUint::zero(); n_max + 1];
    acc[0] = BigUint::one();
    for p in table_primes(n_max) {
        let mut factor = vec![BigUint::zero(); p + 1];
        factor[0] = BigUint::one();
        factor[p] = BigUint::one();
        acc = poly_mul_truncated(&acc, &factor, n_max);
    }
    Ok(PartitionTable {
        kind: PartitionKind::DistinctPrimes,
        counts: acc,
    })
}

/// Natural log of `table.counts[n]`, accurate to better than 1e-12 relative.
///
/// Exact conversion of a several-hundred-bit integer to `f64` is impossible,
/// but the leading 64 bits fix the logarithm to well below the mantissa
/// truncation level: with bit length `L`, the value is `top * 2^(L-64)` up to
/// a relative error below `2^-63`, so `ln(top) + (L-64) ln 2` suffices.
pub fn log_of_count(table: &PartitionTable, n: usize) -> Result<f64, CountsError> {
    let value = table.count(n)?;
    if value.is_zero() {
        return Err(CountsError::LogOfZero(n));
    }
    let bits = value.bits();
    if bits <= 64 {
        let v = value.to_u64().expect("fits in 64 bits");
        Ok((v as f64).ln())
    } else {
        let top = (value >> (bits - 64)).to_u64().expect("exactly 64 bits");
        Ok((top as f64).ln() + (bits - 64) as f64 * std::f64::consts::LN_2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn as_u64(table: &PartitionTable) -> Vec<u64> {
        table.counts().iter().map(|c| c.to_u64().unwrap()).collect()
    }

    // Independent oracle: enumerate subsets of primes by recursion.
    fn brute_distinct(n: usize) -> u64 {
        let primes: Vec<usize> = table_primes(n);
        fn rec(primes: &[usize], from: usize, rem: usize) -> u64 {
            if rem == 0 {
                return 1;
            }
            let mut total = 0;
            for j in from..primes.len() {
                if primes[j] > rem {
                    break;
                }
                total += rec(primes, j + 1, rem - primes[j]);
            }
            total
        }
        rec(&primes, 0, n)
    }

    // Independent oracle: enumerate multisets (non-decreasing choices).
    fn brute_unrestricted(n: usize) -> u64 {
        let primes: Vec<usize> = table_primes(n);
        fn rec(primes: &[usize], from: usize, rem: usize) -> u64 {
            if rem == 0 {
                return 1;
            }
            let mut total = 0;
            for j in from..primes.len() {
                if primes[j] > rem {
                    break;
                }
                total += rec(primes, j, rem - primes[j]);
            }
            total
        }
        rec(&primes, 0, n)
    }

    #[test]
    fn distinct_first_ten() {
        let t = count_distinct(9).unwrap();
        assert_eq!(as_u64(&t), [1, 0, 1, 1, 0, 2, 0, 2, 1, 1]);
    }

    #[test]
    fn distinct_first_twenty() {
        let t = count_distinct(19).unwrap();
        assert_eq!(
            as_u64(&t),
            [1, 0, 1, 1, 0, 2, 0, 2, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2, 4, 3]
        );
    }

    #[test]
    fn distinct_edge_sizes() {
        assert_eq!(as_u64(&count_distinct(0).unwrap()), [1]);
        assert_eq!(as_u64(&count_distinct(1).unwrap()), [1, 0]);
    }

    #[test]
    fn distinct_matches_subset_enumeration() {
        let t = count_distinct(48).unwrap();
        for n in 0..=48 {
            assert_eq!(
                t.count(n).unwrap().to_u64().unwrap(),
                brute_distinct(n),
                "mismatch at n={n}"
            );
        }
    }

    #[test]
    fn distinct_larger_values() {
        let t = count_distinct(2000).unwrap();
        assert_eq!(t.count(100).unwrap().to_u64().unwrap(), 198);
        assert_eq!(t.count(500).unwrap().to_u64().unwrap(), 2_473_838);
        assert_eq!(t.count(2000).unwrap().to_u64().unwrap(), 47_839_398_752_301);
    }

    #[test]
    fn distinct_zero_set_and_positivity() {
        let t = count_distinct(2000).unwrap();
        let zeros: Vec<usize> = (0..=2000).filter(|&n| t.count(n).unwrap().is_zero()).collect();
        assert_eq!(zeros, [1, 4, 6]);
    }

    #[test]
    fn unrestricted_small() {
        let t = count_unrestricted(4).unwrap();
        assert_eq!(as_u64(&t), [1, 0, 1, 1, 1]);
        let t = count_unrestricted(15).unwrap();
        assert_eq!(as_u64(&t), [1, 0, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9, 10, 12]);
    }

    #[test]
    fn unrestricted_matches_multiset_enumeration() {
        let t = count_unrestricted(28).unwrap();
        for n in 0..=28 {
            assert_eq!(t.count(n).unwrap().to_u64().unwrap(), brute_unrestricted(n));
        }
    }

    #[test]
    fn unrestricted_known_values() {
        let t = count_unrestricted(100).unwrap();
        assert_eq!(t.count(50).unwrap().to_u64().unwrap(), 819);
        assert_eq!(t.count(100).unwrap().to_u64().unwrap(), 40_899);
    }

    #[test]
    fn unrestricted_dominates_distinct() {
        let q = count_distinct(300).unwrap();
        let p = count_unrestricted(300).unwrap();
        for n in 0..=300 {
            assert!(p.count(n).unwrap() >= q.count(n).unwrap());
        }
    }

    #[test]
    fn genfunc_equals_knapsack() {
        for n_max in [0, 9, 137, 500] {
            let dp = count_distinct(n_max).unwrap();
            let gf = genfunc_coefficients(n_max).unwrap();
            assert_eq!(dp.counts(), gf.counts(), "n_max={n_max}");
        }
    }

    #[test]
    fn prefix_stability() {
        let big = count_distinct(120).unwrap();
        let small = count_distinct(50).unwrap();
        assert_eq!(big.prefix(50).unwrap(), small);
        assert!(big.prefix(121).is_err());
    }

    #[test]
    fn restricted_small_cases() {
        let t = count_restricted(5, 2).unwrap();
        assert_eq!(t.count(1, 5).unwrap().to_u64().unwrap(), 1); // {5}
        assert_eq!(t.count(2, 5).unwrap().to_u64().unwrap(), 1); // {2,3}
        assert_eq!(t.count(2, 4).unwrap().to_u64().unwrap(), 0); // 2+2 not distinct
    }

    #[test]
    fn restricted_single_part_is_primality() {
        let t = count_restricted(200, 1).unwrap();
        let primes = sieve_primes(200).unwrap();
        for n in 2..=200 {
            let expected = u64::from(primes.contains(n));
            assert_eq!(t.count(1, n).unwrap().to_u64().unwrap(), expected);
        }
    }

    #[test]
    fn restricted_rows_zero_below_minimal_sum() {
        let t = count_restricted(100, 5).unwrap();
        // three smallest primes sum to 10
        for n in 0..10 {
            assert!(t.count(3, n).unwrap().is_zero());
        }
        assert_eq!(t.count(3, 10).unwrap().to_u64().unwrap(), 1);
    }

    #[test]
    fn restricted_row_sums_recover_unrestricted_part_count() {
        // 17 is the largest feasible part count for n <= 500
        // (the 17 smallest primes sum to 440, the 18 smallest to 501)
        let t = count_restricted(500, 17).unwrap();
        assert_eq!(t.n_parts_max(), 17);
        let q = count_distinct(500).unwrap();
        for n in 0..=500 {
            assert_eq!(&t.row_sum(n).unwrap(), q.count(n).unwrap(), "n={n}");
        }
        assert_eq!(t.row_sum(9).unwrap().to_u64().unwrap(), 1);
    }

    #[test]
    fn restricted_cap_is_applied() {
        let t = count_restricted(500, 40).unwrap();
        assert_eq!(t.n_parts_max(), 17);
        // queries beyond the stored rows read as zero
        assert!(t.count(18, 500).unwrap().is_zero());
        assert!(t.count(40, 300).unwrap().is_zero());
        let small = count_restricted(500, 3).unwrap();
        assert_eq!(small.n_parts_max(), 3);
    }

    #[test]
    fn log_of_count_values() {
        let one = PartitionTable::from_parts(
            PartitionKind::DistinctPrimes,
            vec![BigUint::one()],
        );
        assert_eq!(log_of_count(&one, 0).unwrap(), 0.0);

        let big = PartitionTable::from_parts(
            PartitionKind::DistinctPrimes,
            vec![BigUint::one() << 64],
        );
        let expected = 64.0 * std::f64::consts::LN_2;
        assert!((log_of_count(&big, 0).unwrap() - expected).abs() < 1e-12 * expected);

        let ten30 = BigUint::from(10u8).pow(30);
        let t = PartitionTable::from_parts(PartitionKind::DistinctPrimes, vec![ten30]);
        let expected = 30.0 * 10f64.ln();
        assert!((log_of_count(&t, 0).unwrap() - expected).abs() < 1e-12 * expected);
    }

    #[test]
    fn log_of_count_errors() {
        let t = count_distinct(9).unwrap();
        assert!(matches!(log_of_count(&t, 4), Err(CountsError::LogOfZero(4))));
        assert!(matches!(
            log_of_count(&t, 10),
            Err(CountsError::IndexOutOfRange { index: 10, n_max: 9 })
        ));
    }

    #[test]
    fn progress_reports_decades() {
        let mut seen = Vec::new();
        let mut cb = |d: usize| seen.push(d);
        count_table(PartitionKind::DistinctPrimes, 1000, Some(&mut cb)).unwrap();
        assert_eq!(seen, [10, 100, 1000]);
    }

    #[test]
    fn oversized_table_is_rejected() {
        assert!(matches!(
            count_distinct(MAX_TABLE_N + 1),
            Err(CountsError::TableTooLarge(_))
        ));
    }
}
