//! Exact counting tables: distinct, unrestricted, and part-count-restricted.
//!
//! ```bash
//! cargo run --example exact_counts
//! ```

use prime_partitions::counts::{
    count_distinct, count_restricted, count_unrestricted, log_of_count,
};

fn main() {
    let distinct = count_distinct(100).expect("table");
    let first: Vec<String> = distinct.counts()[..10].iter().map(|c| c.to_string()).collect();
    println!("distinct-prime counts Q(0..=9): {}", first.join(" "));
    println!("Q(100) = {}", distinct.count(100).unwrap());

    let unrestricted = count_unrestricted(100).expect("table");
    println!("P(100) = {} (repetitions allowed)", unrestricted.count(100).unwrap());
    let dominated = (0..=100)
        .all(|n| unrestricted.count(n).unwrap() >= distinct.count(n).unwrap());
    println!("P(n) >= Q(n) on 0..=100: {dominated}");

    // how many ways to write 100 as a sum of exactly N distinct primes
    let restricted = count_restricted(100, 8).expect("table");
    for n_parts in 1..=restricted.n_parts_max() {
        println!(
            "  exactly {n_parts} distinct primes summing to 100: {}",
            restricted.count(n_parts, 100).unwrap()
        );
    }
    println!(
        "  row sum = {} (equals Q(100))",
        restricted.row_sum(100).unwrap()
    );

    // logs of huge counts come from the top 64 bits plus the bit length
    let big = count_distinct(5_000).expect("table");
    println!(
        "Q(5000) has {} bits; ln Q(5000) = {:.6}",
        big.count(5_000).unwrap().bits(),
        log_of_count(&big, 5_000).unwrap()
    );
}
