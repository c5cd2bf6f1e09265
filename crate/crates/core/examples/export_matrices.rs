//! Writes boundary matrices as triplet files for use in other tools.
//!
//! ```text
//! cargo run --example export_matrices -- /tmp/c3 cyclic:3 3
//! ```

use std::path::PathBuf;

use ybh::cli::load_biquandle;
use ybh::complex::{boundary_matrix, Theory};

fn main() {
    let mut args = std::env::args().skip(1);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "matrices".into()));
    let spec = args.next().unwrap_or_else(|| "cyclic:3".into());
    let top: usize = args.next().map_or(3, |m| m.parse().expect("numeric degree"));
    let x = load_biquandle(&spec).unwrap_or_else(|e| panic!("{e}"));
    std::fs::create_dir_all(&dir).unwrap();
    for theory in Theory::ALL {
        for n in 1..=top {
            let d = boundary_matrix(&x, theory, n).unwrap();
            d.write_triplets(&dir, &format!("{theory}_d{n}")).unwrap();
            println!("{theory}_d{n}: {}x{} with {} nonzeros", d.rows(), d.cols(), d.nnz());
        }
    }
}
