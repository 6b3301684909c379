use std::process::exit;

fn main() {
    exit(prime_partitions::cli::run(std::env::args_os()))
}
