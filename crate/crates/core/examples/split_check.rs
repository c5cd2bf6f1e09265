//! Compares `H^YB` with `H^NYB + H^D` degree by degree.
//!
//! ```text
//! cargo run --release --example split_check -- alexander:8:5:5 3
//! ```

use ybh::cli::{load_biquandle, split_rows};
use ybh::complex::DEFAULT_GUARD;

fn main() {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "cyclic:3".into());
    let max = args.next().map_or(3, |m| m.parse().expect("numeric degree"));
    let x = load_biquandle(&spec).unwrap_or_else(|e| panic!("{e}"));
    for row in split_rows(&x, max, DEFAULT_GUARD).expect("within guard") {
        let sum = row.nyb.direct_sum(&row.deg);
        println!("n={} YB = {}  NYB + D = {}  {}", row.degree, row.yb, sum, if row.splits { "ok" } else { "MISMATCH" });
    }
}
