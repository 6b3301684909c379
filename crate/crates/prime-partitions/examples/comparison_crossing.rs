//! Exact counts against their asymptotic forms: comparison rows, crossing
//! detection, and the error trend.
//!
//! Uses a table to n = 20000 to stay quick; the corrected distinct-prime
//! form crosses the exact counts near n = 51000, so run the CLI `compare`
//! subcommand with a larger table to see that bracket.
//!
//! ```bash
//! cargo run --example comparison_crossing
//! ```

use prime_partitions::analysis::{build_comparison, find_crossing, summarize_error};
use prime_partitions::constants::constants_bundle;
use prime_partitions::counts::{count_distinct, count_unrestricted};

fn main() {
    let c = constants_bundle().expect("bundle");

    let q = count_distinct(20_000).expect("table");
    let cmp = build_comparison(&q, 2_000, 20_000, 50, &c).expect("rows");
    println!("distinct primes: {} rows, {} skipped", cmp.rows.len(), cmp.skipped_zero);
    match find_crossing(&cmp.rows).unwrap() {
        Some(r) => println!("  corrected form crosses exact in ({}, {})", r.bracket_low, r.bracket_high),
        None => println!("  no crossing below 20000 (it sits near 51000)"),
    }
    let (max_abs, trend) = summarize_error(&cmp.rows).unwrap();
    println!("  max |rel diff| = {max_abs:.4e}, trend {}", trend.label());

    // the bosonic twin overshoots earlier
    let p = count_unrestricted(20_000).expect("table");
    let cmp = build_comparison(&p, 2_000, 20_000, 50, &c).expect("rows");
    match find_crossing(&cmp.rows).unwrap() {
        Some(r) => println!(
            "unrestricted primes: corrected form crosses exact in ({}, {})",
            r.bracket_low, r.bracket_high
        ),
        None => println!("unrestricted primes: no crossing below 20000"),
    }
}
