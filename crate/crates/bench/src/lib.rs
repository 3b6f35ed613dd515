//! Shared inputs for the benchmarks.

use adoseries::knots::{knot_table, BraidWord};

/// Knots benchmarked at every size.
pub const BENCH_KNOTS: [&str; 4] = ["trefoil", "figure8", "5_2", "6_1"];

/// Braid presentation of a benchmark knot.
pub fn braid(name: &str) -> BraidWord {
    knot_table(name).expect("benchmark knots are in the table")
}
