//! Colorings of a braid closure. Generators are signed strand indices.
//!
//! ```text
//! cargo run --example braid_colorings -- cyclic:3 2 1 1 1
//! ```

use ybh::cli::load_biquandle;
use ybh::knots::{colorings, represented_cycle, Diagram};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (spec, width, word) = match args.as_slice() {
        [spec, width, word @ ..] => (
            spec.clone(),
            width.parse::<usize>().expect("braid width"),
            word.iter().map(|g| g.parse::<i64>().expect("generator")).collect::<Vec<_>>(),
        ),
        _ => ("cyclic:3".to_string(), 2, vec![1, 1, 1]),
    };
    let x = load_biquandle(&spec).unwrap_or_else(|e| panic!("{e}"));
    let d = Diagram::from_braid(width, &word).unwrap();
    println!("{} semi-arcs, {} components, writhe {}", d.semi_arcs(), d.components(), d.writhe());
    for c in colorings(&d, &x).unwrap() {
        let z = represented_cycle(&d, &c, &x).unwrap();
        let support = z.iter().filter(|v| **v != 0.into()).count();
        println!("{:?}  chain support {support}", c.0);
    }
}
