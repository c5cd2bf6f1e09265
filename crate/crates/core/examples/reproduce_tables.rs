//! Recomputes both stored homology tables and reports per-cell timings.
//!
//! ```text
//! cargo run --release --example reproduce_tables
//! ```

use ybh::cli::{reproduce_table, TABLE_1, TABLE_2};
use ybh::complex::DEFAULT_GUARD;

fn main() {
    for (name, blocks) in [("table 1", TABLE_1), ("table 2", TABLE_2)] {
        let cells = reproduce_table(blocks, DEFAULT_GUARD).unwrap();
        let total: f64 = cells.iter().map(|c| c.seconds).sum();
        let matched = cells.iter().filter(|c| c.matches).count();
        println!("{name}: {matched}/{} cells match, {total:.2}s", cells.len());
        for c in cells.iter().filter(|c| !c.matches) {
            println!("  {} {} n={}: {} vs {}", c.biquandle, c.theory, c.degree, c.computed, c.expected);
        }
    }
}
