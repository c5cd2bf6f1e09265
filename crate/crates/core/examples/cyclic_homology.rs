//! Homology of the cyclic biquandle `C_n` in all three theories.
//!
//! ```text
//! cargo run --release --example cyclic_homology -- 5 4
//! ```

use ybh::algebra::FiniteYB;
use ybh::complex::{homology, Theory, DEFAULT_GUARD};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("numeric argument"));
    let n = args.next().unwrap_or(3);
    let max = args.next().unwrap_or(3);
    let x = FiniteYB::cyclic(n).expect("n >= 1");
    println!("C_{n}");
    for theory in Theory::ALL {
        let groups = homology(&x, theory, max, DEFAULT_GUARD).expect("within guard");
        for (k, g) in groups.iter().enumerate() {
            println!("  H_{}^{theory} = {g}", k + 1);
        }
    }
}
