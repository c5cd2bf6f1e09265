//! Checks the birack and biquandle axioms for a few operators.
//!
//! ```text
//! cargo run --example verify_axioms
//! ```

use ybh::algebra::{verify_axioms, FiniteYB};

fn main() {
    let ops = [
        ("cyclic 5", FiniteYB::cyclic(5).unwrap()),
        ("alexander 8 3 5", FiniteYB::alexander(8, 3, 5).unwrap()),
        ("swap 3", FiniteYB::swap(3).unwrap()),
        ("identity on 2", FiniteYB::from_fn(2, |a, b| (a, b))),
        ("a non-solution", FiniteYB::from_fn(2, |a, b| if a == 1 && b == 1 { (0, 1) } else { (0, 0) })),
    ];
    for (name, x) in &ops {
        let r = verify_axioms(x);
        println!(
            "{name:<18} YBE {:<5} birack {:<5} biquandle {:<5} witness {:?}",
            r.ybe_holds,
            r.is_birack(),
            r.is_biquandle(),
            r.ybe_witness
        );
    }
    let c3 = FiniteYB::cyclic(3).unwrap();
    let bars: Vec<usize> = (0..3).map(|a| c3.bar(a).unwrap()).collect();
    println!("fixed-pair partners in C_3: {bars:?}");
}
