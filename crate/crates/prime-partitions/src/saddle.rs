//! Exact saddle-point machinery over the true prime spectrum.
//!
//! The canonical entropy is `S(E, beta) = beta E + ln Z(beta)` with
//! `ln Z(beta) = sum_p ln(1 + exp(-beta p))`. Its stationary point `beta0`
//! solves `S'(E, beta0) = 0` and is unique because `S'' > 0` termwise. From
//! the stationary value and curvature, the Gaussian estimate of the density
//! of partitions is `ln rho = S - ln(2 pi S'')/2`.
//!
//! Sums over the spectrum are truncated at a limit chosen from the requested
//! tolerance: the terms are bounded by `exp(-beta p)`, so cutting at
//! `P = ceil(ln(1/(tol beta))/beta)` leaves a tail below
//! `exp(-beta P)/beta = tol`. Occupancies are accumulated in the form
//! `p t/(1+t)` with `t = exp(-beta p)`, which stays in range for every
//! `beta p` (large arguments underflow harmlessly to zero), and all spectrum
//! sums are compensated — near the root, `S'` is a cancellation of two
//! quantities of size `E`, and plain summation noise would exceed the
//! `1e-10` residual target.

use std::f64::consts::PI;
use thiserror::Error;

use crate::constants::ConstantsBundle;
use crate::kahan::KahanSum;
use crate::primes::{sieve_primes, PrimeSet};

#[derive(Debug, Error)]
pub enum SaddleError {
    #[error("beta must be positive, got {0}")]
    BetaNotPositive(f64),
    #[error("beta must lie in (0, 1), got {0}")]
    BetaOutOfUnitRange(f64),
    #[error("energy must be at least 2, got {0}")]
    EnergyDomain(f64),
    #[error("tolerance {0} outside (0, 1e-6]")]
    ToleranceDomain(f64),
    #[error(
        "prime set sieved to {available} is too small for beta={beta}, tol={tol}: need {required}"
    )]
    InsufficientPrimeLimit {
        available: usize,
        required: usize,
        beta: f64,
        tol: f64,
    },
    #[error(
        "saddle solve did not converge after {iterations} iterations; \
         bracket [{bracket_low}, {bracket_high}], residual {residual:e}"
    )]
    NoConvergence {
        iterations: usize,
        bracket_low: f64,
        bracket_high: f64,
        residual: f64,
    },
    #[error("quadrature did not reach tolerance {tol} (deepest interval [{a}, {b}])")]
    Quadrature { a: f64, b: f64, tol: f64 },
}

/// Output of [`solve_saddle`].
#[derive(Debug, Clone, PartialEq)]
pub struct SaddleSolution {
    /// Target energy (the integer being partitioned, as a real).
    pub energy: f64,
    /// Stationary inverse temperature.
    pub beta0: f64,
    /// Entropy at the stationary point.
    pub entropy: f64,
    /// Second entropy derivative at the stationary point; positive.
    pub s2: f64,
    /// Log of the Gaussian density estimate: `entropy - ln(2 pi s2)/2`.
    pub ln_rho: f64,
    /// `|S'(beta0)|` actually achieved.
    pub residual: f64,
    /// Number of solver iterations used.
    pub iterations: usize,
}

/// Spectrum cutoff needed so the truncated-tail bound `exp(-beta P)/beta`
/// stays below `tol`.
pub fn required_prime_limit(beta: f64, tol: f64) -> usize {
    ((1.0 / beta) * (1.0 / (tol * beta)).ln()).ceil().max(2.0) as usize
}

fn check_tol(tol: f64) -> Result<(), SaddleError> {
    if !(tol > 0.0 && tol <= 1e-6) {
        return Err(SaddleError::ToleranceDomain(tol));
    }
    Ok(())
}

fn check_truncation(beta: f64, tol: f64, primes: &PrimeSet) -> Result<usize, SaddleError> {
    if !(beta > 0.0) {
        return Err(SaddleError::BetaNotPositive(beta));
    }
    let required = required_prime_limit(beta, tol);
    if primes.limit() < required {
        return Err(SaddleError::InsufficientPrimeLimit {
            available: primes.limit(),
            required,
            beta,
            tol,
        });
    }
    Ok(required)
}

/// `ln Z(beta) = sum_{p <= P} ln(1 + exp(-beta p))` with truncation error
/// below `tol`.
pub fn ln_z_exact(beta: f64, tol: f64, primes: &PrimeSet) -> Result<f64, SaddleError> {
    let cutoff = check_truncation(beta, tol, primes)?;
    let mut sum = KahanSum::new();
    for p in primes.iter().take_while(|&p| p <= cutoff) {
        sum.add((-beta * p as f64).exp().ln_1p());
    }
    Ok(sum.value())
}

/// Entropy and its first two beta-derivatives at `(energy, beta)`:
/// `S = beta E + ln Z`, `S' = E - sum_p p t/(1+t)`,
/// `S'' = sum_p p^2 t/(1+t)^2` with `t = exp(-beta p)`.
pub fn entropy_derivatives(
    energy: f64,
    beta: f64,
    primes: &PrimeSet,
    tol: f64,
) -> Result<(f64, f64, f64), SaddleError> {
    let cutoff = check_truncation(beta, tol, primes)?;
    let mut ln_z = KahanSum::new();
    let mut occupation = KahanSum::new();
    let mut curvature = KahanSum::new();
    for p in primes.iter().take_while(|&p| p <= cutoff) {
        let pf = p as f64;
        let t = (-beta * pf).exp();
        let denom = 1.0 + t;
        ln_z.add(t.ln_1p());
        occupation.add(pf * t / denom);
        curvature.add(pf * pf * t / (denom * denom));
    }
    let s = beta * energy + ln_z.value();
    let s1 = energy - occupation.value();
    let s2 = curvature.value();
    Ok((s, s1, s2))
}

const MAX_SOLVER_ITERATIONS: usize = 200;

/// Find the unique stationary point of the entropy in `beta` and assemble the
/// Gaussian density estimate.
///
/// Newton iteration from the asymptotic initial guess
/// `beta = pi / sqrt(6 E ln E)`, safeguarded by a sign-change bracket that
/// every accepted step must stay inside; a step outside the bracket falls
/// back to bisection, so termination is guaranteed. The prime set is sieved
/// on demand and extended whenever an iterate moves below the range the
/// current sieve can serve.
pub fn solve_saddle(energy: f64, tol: f64) -> Result<SaddleSolution, SaddleError> {
    if !(energy >= 2.0) {
        return Err(SaddleError::EnergyDomain(energy));
    }
    check_tol(tol)?;

    let beta_init = PI / (6.0 * energy * energy.ln()).sqrt();
    let mut primes = sieve_for(beta_init, tol)?;
    let mut iterations = 0usize;
    let eval = |beta: f64, primes: &mut PrimeSet| -> Result<f64, SaddleError> {
        if primes.limit() < required_prime_limit(beta, tol) {
            *primes = sieve_for(beta, tol)?;
        }
        Ok(entropy_derivatives(energy, beta, primes, tol)?.1)
    };

    // bracket the root: S' is increasing in beta, negative for small beta
    let mut lo;
    let mut hi;
    let s_init = eval(beta_init, &mut primes)?;
    iterations += 1;
    if s_init >= 0.0 {
        hi = beta_init;
        lo = beta_init / 2.0;
        while eval(lo, &mut primes)? > 0.0 {
            iterations += 1;
            hi = lo;
            lo /= 2.0;
            if iterations > MAX_SOLVER_ITERATIONS {
                return Err(no_convergence(iterations, lo, hi, f64::NAN));
            }
        }
        iterations += 1;
    } else {
        lo = beta_init;
        hi = beta_init * 2.0;
        while eval(hi, &mut primes)? < 0.0 {
            iterations += 1;
            lo = hi;
            hi *= 2.0;
            if iterations > MAX_SOLVER_ITERATIONS {
                return Err(no_convergence(iterations, lo, hi, f64::NAN));
            }
        }
        iterations += 1;
    }

    let mut beta = 0.5 * (lo + hi);
    loop {
        let (_, s1, s2) = {
            if primes.limit() < required_prime_limit(beta, tol) {
                primes = sieve_for(beta, tol)?;
            }
            entropy_derivatives(energy, beta, &primes, tol)?
        };
        iterations += 1;
        if s1.abs() <= tol {
            let (s, s1_final, s2_final) =
                entropy_derivatives(energy, beta, &primes, tol)?;
            let ln_rho = s - 0.5 * (2.0 * PI * s2_final).ln();
            return Ok(SaddleSolution {
                energy,
                beta0: beta,
                entropy: s,
                s2: s2_final,
                ln_rho,
                residual: s1_final.abs(),
                iterations,
            });
        }
        if s1 < 0.0 {
            lo = beta;
        } else {
            hi = beta;
        }
        if iterations > MAX_SOLVER_ITERATIONS || hi - lo <= f64::EPSILON * hi {
            return Err(no_convergence(iterations, lo, hi, s1.abs()));
        }
        let newton = beta - s1 / s2;
        beta = if newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }
}

fn no_convergence(iterations: usize, lo: f64, hi: f64, residual: f64) -> SaddleError {
    SaddleError::NoConvergence {
        iterations,
        bracket_low: lo,
        bracket_high: hi,
        residual,
    }
}

fn sieve_for(beta: f64, tol: f64) -> Result<PrimeSet, SaddleError> {
    // a third of margin avoids immediate re-sieving as the iterate drifts
    let required = required_prime_limit(beta, tol);
    let limit = required + required / 3;
    sieve_primes(limit.max(2)).map_err(|_| SaddleError::BetaNotPositive(beta))
}

/// Two-term asymptotic expansion of `ln Z` for small beta:
/// `[-c1 + c2/ln(beta)] / (beta ln(beta))` with the fermionic coefficients.
pub fn ln_z_asymptotic(beta: f64, constants: &ConstantsBundle) -> Result<f64, SaddleError> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(SaddleError::BetaOutOfUnitRange(beta));
    }
    let ln_beta = beta.ln();
    Ok((-constants.fermi_c1 + constants.fermi_c2 / ln_beta) / (beta * ln_beta))
}

/// Smooth-spectrum approximation of `ln Z`: the integral
/// `int_2^inf ln(1 + exp(-beta x)) / ln(x) dx`, evaluated by adaptive
/// Simpson quadrature with absolute tolerance `tol`.
pub fn ln_z_integral(beta: f64, tol: f64) -> Result<f64, SaddleError> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(SaddleError::BetaOutOfUnitRange(beta));
    }
    check_tol(tol)?;
    let integrand = |x: f64| (-beta * x).exp().ln_1p() / x.ln();
    // beyond this point the integrand is below tol * beta and the remaining
    // tail integrates to less than tol
    let upper = required_prime_limit(beta, tol) as f64;
    // power-of-two panels give the adaptive pass a scale-aware start
    let mut edges = vec![2.0];
    let mut edge = 4.0;
    while edge < upper {
        edges.push(edge);
        edge *= 2.0;
    }
    edges.push(upper);
    let panel_tol = tol / edges.len() as f64;
    let mut total = 0.0;
    for pair in edges.windows(2) {
        total += adaptive_simpson(&integrand, pair[0], pair[1], panel_tol)?;
    }
    Ok(total)
}

fn adaptive_simpson(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<f64, SaddleError> {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: usize,
    ) -> Result<f64, SaddleError> {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * tol {
            return Ok(left + right + delta / 15.0);
        }
        if depth == 0 {
            return Err(SaddleError::Quadrature { a, b, tol });
        }
        Ok(recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)?
            + recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)?)
    }
    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    let whole = simpson(fa, fm, fb, a, b);
    recurse(f, a, b, fa, fm, fb, whole, tol, 48)
}
