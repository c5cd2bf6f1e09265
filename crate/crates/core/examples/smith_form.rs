//! Smith normal form with transforms, and class coordinates of cycles.
//!
//! ```text
//! cargo run --example smith_form
//! ```

use num_bigint::BigInt;
use ybh::smith::{homology, presentation, snf, IntMatrix};

fn show(name: &str, m: &IntMatrix) {
    println!("{name} =");
    for row in m.to_dense() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>4}")).collect();
        println!("  [{}]", cells.join(""));
    }
}

fn main() {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let s = snf(&a);
    show("A", &a);
    show("D", &s.d);
    show("U", &s.u);
    show("V", &s.v);
    assert_eq!(s.u.mul(&a).mul(&s.v), s.d);

    // cycles modulo the image of a triangle Laplacian: Z + Z_3
    let d1 = IntMatrix::zeros(1, 3);
    let d2 = IntMatrix::from_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
    println!("H = {}", homology(&d1, &d2).unwrap());
    let p = presentation(&d1, &d2).unwrap();
    for z in [[1, -1, 0], [3, -3, 0], [1, 0, 0], [0, 0, 5]] {
        let v: Vec<BigInt> = z.iter().map(|&c| BigInt::from(c)).collect();
        println!("class of {z:?} = {}", p.class_of(&v).unwrap());
    }
}
