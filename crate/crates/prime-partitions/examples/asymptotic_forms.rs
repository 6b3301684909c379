//! Log-space evaluation of the asymptotic counting forms, and leaving log
//! space safely.
//!
//! ```bash
//! cargo run --example asymptotic_forms
//! ```

use prime_partitions::asymptotics::{ln_p_as, ln_q0, ln_q_as, value_of};
use prime_partitions::constants::constants_bundle;

fn main() {
    let c = constants_bundle().expect("bundle");
    println!("{:>10} {:>14} {:>14} {:>14}", "n", "ln Q0", "ln Q_as", "ln P_as");
    for n in [100.0, 1_000.0, 10_000.0, 100_000.0] {
        println!(
            "{n:>10} {:>14.4} {:>14.4} {:>14.4}",
            ln_q0(n).unwrap(),
            ln_q_as(n, &c).unwrap(),
            ln_p_as(n, &c).unwrap()
        );
    }

    println!();
    for n in [100_000.0, 10_000_000.0] {
        let ln_v = ln_q_as(n, &c).unwrap();
        // value_of reports overflow explicitly instead of returning inf
        println!("n = {n}: ln Q_as = {ln_v:.3}, Q_as = {}", value_of(ln_v));
    }
}
