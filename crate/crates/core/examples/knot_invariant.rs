//! Coloring counts and homological state sums for the bundled diagrams.
//!
//! ```text
//! cargo run --release --example knot_invariant -- alexander:8:3:5
//! ```

use std::path::Path;

use ybh::cli::load_biquandle;
use ybh::knots::{homological_invariant, Diagram};

fn main() {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "cyclic:3".into());
    let x = load_biquandle(&spec).unwrap_or_else(|e| panic!("{e}"));
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("manifest.json")).unwrap()).unwrap();
    for entry in manifest["diagrams"].as_array().unwrap() {
        let file = entry["file"].as_str().unwrap();
        let d = Diagram::parse(&std::fs::read_to_string(dir.join(file)).unwrap()).unwrap();
        let inv = homological_invariant(&d, &x).unwrap();
        println!(
            "{:<13} {:<25} crossings {:<2} colorings {:<3} {inv}",
            entry["link"].as_str().unwrap(),
            file,
            d.crossings().len(),
            inv.coloring_count
        );
    }
}
