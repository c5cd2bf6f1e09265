//! Torsion in the homology of Alexander biquandles `Z_{n;s,t}`, with chain
//! ranks and timings.
//!
//! ```text
//! cargo run --release --example alexander_torsion -- 8 5 5 3
//! ```

use std::time::Instant;

use ybh::algebra::FiniteYB;
use ybh::complex::{chain_rank, homology_at, Theory, DEFAULT_GUARD};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("numeric argument")).collect();
    let (n, s, t, max) = match args[..] {
        [n, s, t, max] => (n as usize, s, t, max as usize),
        [n, s, t] => (n as usize, s, t, 3),
        _ => (8, 3, 5, 3),
    };
    let x = match FiniteYB::alexander(n, s, t) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    println!("Z_{{{n};{s},{t}}}");
    for theory in Theory::ALL {
        for k in 1..=max {
            let start = Instant::now();
            let g = homology_at(&x, theory, k, DEFAULT_GUARD).expect("within guard");
            println!(
                "  {theory:<3} n={k} rank C_n = {:<5} H = {g:<30} {:.3}s",
                chain_rank(n, theory, k).unwrap(),
                start.elapsed().as_secs_f64()
            );
        }
    }
}
