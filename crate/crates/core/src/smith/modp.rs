//! Rank over the prime field `F_p`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::IntMatrix;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn inverse(a: u64, p: u64) -> u64 {
    // Fermat, p prime
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Rank of `a` reduced modulo the prime `p`, by incremental sparse echelon
/// reduction of its columns.
pub(crate) fn rank_mod_p(a: &IntMatrix, p: u64) -> usize {
    let pb = BigInt::from(p);
    // leading position -> normalized pivot vector (leading coefficient 1)
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for col in a.columns() {
        let mut v: Vec<(usize, u64)> = col
            .iter()
            .filter_map(|(i, x)| {
                let r = x.mod_floor(&pb).to_u64().expect("residue fits");
                (r != 0).then_some((*i, r))
            })
            .collect();
        while let Some(&(lead, c)) = v.first() {
            match pivots.get(&lead) {
                Some(piv) => v = axpy(&v, p - c, piv, p),
                None => {
                    let inv = inverse(c, p);
                    for e in &mut v {
                        e.1 = (e.1 as u128 * inv as u128 % p as u128) as u64;
                    }
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `x + s * y` over `F_p`, sparse and sorted.
fn axpy(x: &[(usize, u64)], s: u64, y: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
    let mul = |v: u64| (v as u128 * s as u128 % p as u128) as u64;
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_y {
            out.push((y[j].0, mul(y[j].1)));
            j += 1;
        } else {
            let v = (x[i].1 + mul(y[j].1)) % p;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(inverse(3, 7), 5);
    }

    #[test]
    fn laplacian_ranks() {
        let a = IntMatrix::from_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        assert_eq!(rank_mod_p(&a, 3), 1);
        assert_eq!(rank_mod_p(&a, 2), 2);
        assert_eq!(rank_mod_p(&a, 5), 2);
    }
}
