//! Saddle-point solves over the true prime spectrum, plus the three routes
//! to ln Z: exact sum, smooth-density integral, small-beta expansion.
//!
//! ```bash
//! cargo run --example saddle_solve
//! ```

use prime_partitions::constants::constants_bundle;
use prime_partitions::primes::sieve_primes;
use prime_partitions::saddle::{
    ln_z_asymptotic, ln_z_exact, ln_z_integral, required_prime_limit, solve_saddle,
};

fn main() {
    for energy in [1_000.0, 10_000.0, 100_000.0] {
        let sol = solve_saddle(energy, 1e-10).expect("solve");
        println!(
            "E = {energy:>7}: beta0 = {:.9}, S = {:.4}, S'' = {:.4e}, ln rho = {:.4} \
             ({} iterations, residual {:.1e})",
            sol.beta0, sol.entropy, sol.s2, sol.ln_rho, sol.iterations, sol.residual
        );
    }

    println!();
    let c = constants_bundle().expect("bundle");
    let tol = 1e-12;
    for beta in [0.01, 0.001] {
        let primes = sieve_primes(required_prime_limit(beta, tol)).expect("sieve");
        let exact = ln_z_exact(beta, tol, &primes).unwrap();
        let integral = ln_z_integral(beta, 1e-9).unwrap();
        let series = ln_z_asymptotic(beta, &c).unwrap();
        println!(
            "beta = {beta}: ln Z exact = {exact:.6}, integral = {integral:.6}, \
             two-term series = {series:.6}"
        );
    }
}
