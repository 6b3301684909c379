//! The numerical constants behind the asymptotic formulas, with their
//! certified error bounds.
//!
//! ```bash
//! cargo run --example constants_bundle
//! ```

use prime_partitions::constants::{
    alternating_log_series, constants_bundle, log_series,
};

fn main() {
    let (alt, alt_bound) = alternating_log_series(1e-12).expect("series");
    println!("sum (-1)^(k-1) ln(k)/k^2 = {alt:.15}  (bound {alt_bound:.1e})");

    let (logs, logs_bound) = log_series(1e-12).expect("series");
    println!("sum ln(k)/k^2            = {logs:.15}  (bound {logs_bound:.1e})");

    let b = constants_bundle().expect("bundle");
    println!();
    println!("gamma = {:.10}", b.gamma);
    println!("F1 = {:.10}   F2 = {:.10}   (fermionic entropy coefficients)", b.fermi_c1, b.fermi_c2);
    println!("f1 = {:.10}   f2 = {:.10}   (bosonic entropy coefficients)", b.bose_c1, b.bose_c2);
    println!("bF = {:.10}   bB = {:.10}", b.b_fermi, b.b_bose);
    println!("uniform error bound: {:.3e}", b.err_bound);
}
