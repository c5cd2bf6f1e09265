use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{snf, AbGroup, IntMatrix, SmithError};

/// Canonical coordinates of a homology class: integers on the free part,
/// residues `0 <= t_i < d_i` on the torsion part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassCoords {
    pub free: Vec<BigInt>,
    pub torsion: Vec<BigInt>,
}

impl ClassCoords {
    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(Zero::is_zero)
    }
}

/// Integers go out as JSON numbers when they fit in `i64`, else as strings.
struct JsonInts<'a>(&'a [BigInt]);

impl Serialize for JsonInts<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|x| match x.to_i64() {
            Some(v) => serde_json::Value::from(v),
            None => serde_json::Value::from(x.to_string()),
        }))
    }
}

impl Serialize for ClassCoords {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ClassCoords", 2)?;
        st.serialize_field("free", &JsonInts(&self.free))?;
        st.serialize_field("torsion", &JsonInts(&self.torsion))?;
        st.end()
    }
}

impl fmt::Display for ClassCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("[0]");
        }
        let join = |v: &[BigInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        match (self.free.is_empty(), self.torsion.is_empty()) {
            (_, true) => write!(f, "[{}]", join(&self.free)),
            (true, false) => write!(f, "[; {}]", join(&self.torsion)),
            (false, false) => write!(f, "[{}; {}]", join(&self.free), join(&self.torsion)),
        }
    }
}

/// Smith data around one degree, able to send any cycle to canonical class
/// coordinates.
///
/// With `D = U * B * V` for the incoming boundary `B` of rank `r`, the
/// coordinates `y = U z` split into torsion residues (first `r`, modulo the
/// diagonal) and a free tail. Cycles project onto a saturated sublattice of
/// the tail, whose basis comes from a second Smith form of
/// `A * U^{-1}` restricted to the tail (`A` the outgoing boundary).
#[derive(Debug, Clone)]
pub struct HomologyPresentation {
    boundary_out: IntMatrix,
    u: IntMatrix,
    diag: Vec<BigInt>,
    tail_inv: IntMatrix,
    tail_rank: usize,
}

impl HomologyPresentation {
    pub(super) fn build(boundary_out: &IntMatrix, boundary_in: &IntMatrix) -> Self {
        let m = boundary_in.rows();
        let first = snf(boundary_in);
        let diag = first.diagonal();
        let r = diag.len();
        let moved = boundary_out.mul(&first.u_inv);
        let tail = IntMatrix::from_columns(
            moved.rows(),
            (r..m).map(|c| moved.column(c).to_vec()).collect(),
        );
        let second = snf(&tail);
        let tail_rank = second.rank();
        Self { boundary_out: boundary_out.clone(), u: first.u, diag, tail_inv: second.v_inv, tail_rank }
    }

    pub fn chain_rank(&self) -> usize {
        self.u.rows()
    }

    pub fn group(&self) -> AbGroup {
        AbGroup {
            free_rank: self.chain_rank() - self.diag.len() - self.tail_rank,
            torsion: self.torsion_orders().iter().map(|d| d.magnitude().clone()).collect(),
        }
    }

    /// Orders of the torsion coordinates, in divisibility order.
    pub fn torsion_orders(&self) -> Vec<BigInt> {
        self.diag.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn class_of(&self, cycle: &[BigInt]) -> Result<ClassCoords, SmithError> {
        if cycle.len() != self.chain_rank() {
            return Err(SmithError::BadLength { got: cycle.len(), expected: self.chain_rank() });
        }
        if let Some(k) = self.boundary_out.mul_vec(cycle).iter().position(|x| !x.is_zero()) {
            return Err(SmithError::NotACycle(k));
        }
        let y = self.u.mul_vec(cycle);
        let r = self.diag.len();
        let torsion = self
            .diag
            .iter()
            .zip(&y)
            .filter(|(d, _)| !d.is_one())
            .map(|(d, yi)| yi.mod_floor(d))
            .collect();
        let w = self.tail_inv.mul_vec(&y[r..]);
        debug_assert!(w[..self.tail_rank].iter().all(Zero::is_zero));
        Ok(ClassCoords { free: w[self.tail_rank..].to_vec(), torsion })
    }

    /// Group law on class coordinates.
    pub fn add(&self, a: &ClassCoords, b: &ClassCoords) -> ClassCoords {
        let free = a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect();
        let torsion = a
            .torsion
            .iter()
            .zip(&b.torsion)
            .zip(self.torsion_orders())
            .map(|((x, y), d)| (x + y).mod_floor(&d))
            .collect();
        ClassCoords { free, torsion }
    }

    /// Integer multiple of a class.
    pub fn scale(&self, k: &BigInt, a: &ClassCoords) -> ClassCoords {
        let free = a.free.iter().map(|x| x * k).collect();
        let torsion =
            a.torsion.iter().zip(self.torsion_orders()).map(|(x, d)| (x * k).mod_floor(&d)).collect();
        let out = ClassCoords { free, torsion };
        debug_assert!(out.torsion.iter().all(|t| !t.is_negative()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smith::presentation as build;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn triangle_laplacian_classes() {
        let d1 = IntMatrix::zeros(1, 3);
        let d2 = IntMatrix::from_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        let p = build(&d1, &d2).unwrap();
        assert_eq!(p.group().to_string(), "Z + Z_3");
        let z = p.class_of(&big(&[1, -1, 0])).unwrap();
        assert!(z.free.iter().all(Zero::is_zero));
        assert!(!z.torsion[0].is_zero());
        assert!(p.class_of(&big(&[3, -3, 0])).unwrap().is_zero());
        assert!(p.class_of(&big(&[0, 0, 0])).unwrap().is_zero());
        for col in 0..3 {
            let b: Vec<BigInt> = (0..3).map(|r| d2.get(r, col)).collect();
            assert!(p.class_of(&b).unwrap().is_zero());
        }
        let a = p.class_of(&big(&[1, 0, 0])).unwrap();
        let b = p.class_of(&big(&[0, 1, 0])).unwrap();
        assert_eq!(p.add(&a, &b), p.class_of(&big(&[1, 1, 0])).unwrap());
    }

    #[test]
    fn rejects_non_cycles() {
        let d1 = IntMatrix::from_rows(&[vec![1, -1]]);
        let d2 = IntMatrix::zeros(2, 0);
        let p = build(&d1, &d2).unwrap();
        assert_eq!(p.group(), AbGroup::free(1));
        assert_eq!(p.class_of(&big(&[1, 0])), Err(SmithError::NotACycle(0)));
        assert!(matches!(p.class_of(&big(&[1])), Err(SmithError::BadLength { .. })));
        let c = p.class_of(&big(&[2, 2])).unwrap();
        assert_eq!(c.free.len(), 1);
        assert_eq!(c.free[0].abs(), BigInt::from(2));
    }
}
