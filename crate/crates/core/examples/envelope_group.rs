//! Presentations of enveloping groups.
//!
//! ```text
//! cargo run --example envelope_group -- alexander:5:2:4
//! ```

use ybh::cli::load_biquandle;
use ybh::knots::envgroup_presentation;

fn main() {
    let specs: Vec<String> = std::env::args().skip(1).collect();
    let specs = if specs.is_empty() { vec!["cyclic:3".into(), "swap:3".into()] } else { specs };
    for spec in specs {
        let x = load_biquandle(&spec).unwrap_or_else(|e| panic!("{e}"));
        let p = envgroup_presentation(&x);
        println!("{spec}: {} relations\n  {p}", p.relations.len());
    }
}
