//! Emit comparison data as CSV plus a gnuplot script.
//!
//! Writes `counts_to_2000.csv` and `counts_to_2000.gp` into the current
//! directory; render with `gnuplot -p counts_to_2000.gp`.
//!
//! ```bash
//! cargo run --example figure_data
//! ```

use std::path::Path;

use prime_partitions::analysis::build_comparison;
use prime_partitions::cli::{emit_plot_data, PlotStyle};
use prime_partitions::constants::constants_bundle;
use prime_partitions::counts::count_distinct;

fn main() {
    let c = constants_bundle().expect("bundle");
    let table = count_distinct(2_000).expect("table");
    let cmp = build_comparison(&table, 2, 2_000, 1, &c).expect("rows");

    let csv = Path::new("counts_to_2000.csv");
    let script = Path::new("counts_to_2000.gp");
    emit_plot_data(&cmp.rows, csv, Some(script), PlotStyle::LogCounts)
        .expect("emit");
    println!("wrote {} ({} rows) and {}", csv.display(), cmp.rows.len(), script.display());
}
