//! The prime spectrum: sieve and average density.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PrimesError {
    #[error("sieve limit must be at least 2, got {0}")]
    LimitTooSmall(usize),
    #[error("average prime density requires x > 1, got {0}")]
    DensityDomain(f64),
}

/// All primes up to an inclusive bound, in increasing order.
///
/// Immutable after construction and therefore safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSet {
    limit: usize,
    primes: Vec<usize>,
}

impl PrimeSet {
    /// The inclusive sieve bound this set was built for.
    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn primes(&self) -> &[usize] {
        &self.primes
    }

    /// Number of primes in the set, i.e. pi(limit).
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Membership test by binary search. `n` must not exceed the sieve bound.
    pub fn contains(&self, n: usize) -> bool {
        assert!(n <= self.limit, "query {n} beyond sieve limit {}", self.limit);
        self.primes.binary_search(&n).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.primes.iter().copied()
    }
}

/// Sieve of Eratosthenes with bit-packed marking.
pub fn sieve_primes(limit: usize) -> Result<PrimeSet, PrimesError> {
    if limit < 2 {
        return Err(PrimesError::LimitTooSmall(limit));
    }
    let words = limit / 64 + 1;
    let mut composite = vec![0u64; words];
    let mut i = 2usize;
    while i * i <= limit {
        if composite[i / 64] & (1 << (i % 64)) == 0 {
            let mut j = i * i;
            while j <= limit {
                composite[j / 64] |= 1 << (j % 64);
                j += i;
            }
        }
        i += 1;
    }
    let primes = (2..=limit)
        .filter(|&n| composite[n / 64] & (1 << (n % 64)) == 0)
        .collect();
    Ok(PrimeSet { limit, primes })
}

/// Average density of primes near `x` from the prime number theorem: 1/ln(x).
pub fn average_prime_density(x: f64) -> Result<f64, PrimesError> {
    if !(x > 1.0) {
        return Err(PrimesError::DensityDomain(x));
    }
    Ok(1.0 / x.ln())
}
