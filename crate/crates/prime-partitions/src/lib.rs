//! Counting integer partitions into primes, exactly and asymptotically.
//!
//! The library treats the primes as a single-particle spectrum. Writing an
//! integer `n` as a sum of *distinct* primes corresponds to fermionic
//! occupancies (each prime used at most once); allowing repetitions
//! corresponds to bosonic occupancies. The crate provides
//!
//! - exact tables of the distinct-prime counts `Q(n)` (OEIS A000586), the
//!   unrestricted prime-partition counts `P(n)` (OEIS A000607), and the
//!   part-count-restricted counts `Q_N(n)`, all in arbitrary precision
//!   ([`counts`]);
//! - an independent generating-function expansion of the same coefficients,
//!   used as a cross-check oracle ([`counts::genfunc_coefficients`]);
//! - the numerical constants entering the closed-form asymptotics, recomputed
//!   from their defining series with error bounds ([`constants`]);
//! - log-space evaluation of the leading-order and corrected asymptotic
//!   counting formulas ([`asymptotics`]);
//! - the exact saddle-point machinery over the true prime spectrum: partition
//!   function, entropy derivatives, a Newton/bisection solver for the
//!   stationary point, and the Gaussian density estimate ([`saddle`]);
//! - comparison tables, crossing detection and error summaries for exact
//!   versus asymptotic counts ([`analysis`]);
//! - a plain-text table cache ([`cache`]) and a command-line front end
//!   ([`cli`], exposed through the `prime-partitions` binary).
//!
//! Each major capability has a runnable example under `examples/`.
//!
//! ```
//! use prime_partitions::counts;
//!
//! let table = counts::count_distinct(9).unwrap();
//! let q: Vec<u32> = table.counts().iter().map(|c| c.try_into().unwrap()).collect();
//! assert_eq!(q, [1, 0, 1, 1, 0, 2, 0, 2, 1, 1]);
//! ```

#![forbid(unsafe_code)]

pub mod analysis;
pub mod asymptotics;
pub mod cache;
pub mod cli;
pub mod constants;
pub mod counts;
mod kahan;
pub mod primes;
pub mod saddle;

pub use analysis::{ComparisonRow, ComparisonTable, CrossingReport, Trend};
pub use asymptotics::{AsymptoticForm, ExpValue, Order, Statistics};
pub use constants::ConstantsBundle;
pub use counts::{PartitionKind, PartitionTable, RestrictedTable};
pub use primes::PrimeSet;
pub use saddle::SaddleSolution;
