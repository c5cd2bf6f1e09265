//! Exact integer linear algebra: Smith normal form, homology groups of
//! boundary pairs, and class coordinates for cycles.

mod coeff;
mod dense;
mod group;
mod modp;
mod presentation;
mod sparse;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use thiserror::Error;

use coeff::{Coeff, Overflow};
use dense::{dense_snf, Dense};
use sparse::SparseElim;

pub use group::{AbGroup, ParseGroupError};
pub use modp::is_prime;
pub use presentation::{ClassCoords, HomologyPresentation};


/// Matrices with both dimensions at most this size skip the sparse kernel.
pub const DENSE_THRESHOLD: usize = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SmithError {
    #[error("boundary pair is not composable: {0}")]
    DimensionMismatch(String),
    #[error("consecutive boundaries do not compose to zero (entry at ({row}, {col}))")]
    NotAComplex { row: usize, col: usize },
    #[error("vector is not a cycle: its boundary is nonzero at {0}")]
    NotACycle(usize),
    #[error("vector has length {got}, expected {expected}")]
    BadLength { got: usize, expected: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// A sparse integer matrix stored by columns, each column sorted by row.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for (i, col) in m.columns.iter_mut().enumerate() {
            col.push((i, BigInt::from(1)));
        }
        m
    }

    /// Builds from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets<V: Into<BigInt>>(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, V)>,
    ) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet ({r}, {c}) outside {rows}x{cols}");
            m.columns[c].push((r, v.into()));
        }
        for col in &mut m.columns {
            *col = normalize(std::mem::take(col));
        }
        m
    }

    /// Builds from dense row vectors.
    pub fn from_rows<V: Into<BigInt> + Clone>(rows: &[Vec<V>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let trip = rows.iter().enumerate().flat_map(|(i, r)| {
            assert_eq!(r.len(), cols, "ragged rows");
            r.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))
        });
        Self::from_triplets(rows.len(), cols, trip)
    }

    /// Builds from columns given as sparse `(row, value)` lists.
    pub fn from_columns<V: Into<BigInt>>(rows: usize, columns: Vec<Vec<(usize, V)>>) -> Self {
        let cols = columns.len();
        let trip = columns
            .into_iter()
            .enumerate()
            .flat_map(|(c, col)| col.into_iter().map(move |(r, v)| (r, c, v)));
        Self::from_triplets(rows, cols, trip)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn columns(&self) -> &[Vec<(usize, BigInt)>] {
        &self.columns
    }

    pub fn column(&self, c: usize) -> &[(usize, BigInt)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.columns[c]
            .binary_search_by_key(&r, |e| e.0)
            .map(|k| self.columns[c][k].1.clone())
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                out[*r][c] = v.clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let trip = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (c, *r, v.clone())));
        Self::from_triplets(self.cols, self.rows, trip)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let columns = other.columns.iter().map(|col| self.mul_sparse(col)).collect();
        IntMatrix { rows: self.rows, cols: other.cols, columns }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in product");
        let mut out = vec![BigInt::zero(); self.rows];
        for (col, x) in self.columns.iter().zip(v) {
            if x.is_zero() {
                continue;
            }
            for (r, a) in col {
                out[*r] += a * x;
            }
        }
        out
    }

    fn mul_sparse(&self, v: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
        let trip = v
            .iter()
            .flat_map(|(k, x)| self.columns[*k].iter().map(move |(r, a)| (*r, a * x)))
            .collect();
        normalize(trip)
    }

    fn to_dense_coeff<T: Coeff>(&self) -> Option<Dense<T>> {
        let mut d = Dense::zeros(self.rows, self.cols);
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                d.set(*r, c, T::from_bigint(v)?);
            }
        }
        Some(d)
    }

    fn from_dense_coeff<T: Coeff>(d: &Dense<T>) -> Self {
        let trip = (0..d.rows).flat_map(|i| (0..d.cols).map(move |j| (i, j)));
        let trip = trip.filter(|&(i, j)| !d.at(i, j).vanishes()).map(|(i, j)| (i, j, d.at(i, j).to_bigint()));
        Self::from_triplets(d.rows, d.cols, trip)
    }
}

fn normalize(mut entries: Vec<(usize, BigInt)>) -> Vec<(usize, BigInt)> {
    entries.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, BigInt)> = Vec::with_capacity(entries.len());
    for (r, v) in entries {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => *lv += v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

/// `D = U * A * V` with `U`, `V` unimodular and `D` diagonal with
/// `d1 | d2 | ... | dk` followed by zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SnfResult {
    /// The nonzero diagonal entries in order.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d.get(i, i)).take_while(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().len()
    }
}

/// Full Smith normal form with transforms.
pub fn snf(a: &IntMatrix) -> SnfResult {
    fn run<T: Coeff>(a: &IntMatrix) -> Option<SnfResult> {
        let (d, tf) = dense_snf(a.to_dense_coeff::<T>()?, true).ok()?;
        let tf = tf.expect("transforms requested");
        Some(SnfResult {
            d: IntMatrix::from_dense_coeff(&d),
            u: IntMatrix::from_dense_coeff(&tf.u),
            v: IntMatrix::from_dense_coeff(&tf.v),
            u_inv: IntMatrix::from_dense_coeff(&tf.u_inv),
            v_inv: IntMatrix::from_dense_coeff(&tf.v_inv),
        })
    }
    run::<i64>(a).or_else(|| run::<BigInt>(a)).expect("big integer arithmetic cannot overflow")
}

/// Rank and nontrivial invariant factors of a matrix, without transforms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithInvariants {
    pub rank: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<BigUint>,
}

/// Computes rank and invariant factors using the sparse kernel, or the dense
/// kernel for matrices within [`DENSE_THRESHOLD`].
pub fn invariant_factors(a: &IntMatrix) -> SmithInvariants {
    fn sparse<T: Coeff>(a: &IntMatrix) -> Result<Vec<BigInt>, Overflow> {
        let lines = a
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(r, v)| Ok((*r as u32, T::from_bigint(v).ok_or(Overflow)?)))
                    .collect::<Result<Vec<_>, Overflow>>()
            })
            .collect::<Result<Vec<_>, Overflow>>()?;
        Ok(SparseElim::new(a.rows, lines).run()?.iter().map(Coeff::to_bigint).collect())
    }
    fn dense<T: Coeff>(a: &IntMatrix) -> Result<Vec<BigInt>, Overflow> {
        let (d, _) = dense_snf(a.to_dense_coeff::<T>().ok_or(Overflow)?, false)?;
        Ok((0..d.rows.min(d.cols)).map(|i| d.at(i, i).to_bigint()).filter(|x| !x.is_zero()).collect())
    }
    let diag = if a.rows <= DENSE_THRESHOLD && a.cols <= DENSE_THRESHOLD {
        dense::<i64>(a).or_else(|_| dense::<BigInt>(a))
    } else {
        sparse::<i64>(a).or_else(|_| sparse::<BigInt>(a))
    }
    .expect("big integer arithmetic cannot overflow");
    let rank = diag.len();
    let group = AbGroup::from_cyclic_orders(0, diag.iter().map(|d| d.abs().magnitude().clone()));
    SmithInvariants { rank, torsion: group.torsion }
}

fn check_pair(boundary_out: &IntMatrix, boundary_in: &IntMatrix) -> Result<(), SmithError> {
    if boundary_out.cols != boundary_in.rows {
        return Err(SmithError::DimensionMismatch(format!(
            "outgoing boundary has {} columns but incoming boundary has {} rows",
            boundary_out.cols, boundary_in.rows
        )));
    }
    let prod = boundary_out.mul(boundary_in);
    if let Some((c, col)) = prod.columns.iter().enumerate().find(|(_, col)| !col.is_empty()) {
        return Err(SmithError::NotAComplex { row: col[0].0, col: c });
    }
    Ok(())
}

/// `ker(boundary_out) / im(boundary_in)` where `boundary_out` leaves degree
/// `n` and `boundary_in` enters it.
pub fn homology(boundary_out: &IntMatrix, boundary_in: &IntMatrix) -> Result<AbGroup, SmithError> {
    check_pair(boundary_out, boundary_in)?;
    let out = invariant_factors(boundary_out);
    let inn = invariant_factors(boundary_in);
    Ok(homology_from_invariants(boundary_in.rows, &out, &inn))
}

/// Assembles `H_n` from the invariants of the two boundaries around
/// degree `n`, given the chain rank `dim` of `C_n`.
///
/// The cokernel of `C_n -> ker` is free, so the torsion of `ker / im` is
/// exactly the torsion of the incoming boundary.
pub fn homology_from_invariants(dim: usize, out: &SmithInvariants, inn: &SmithInvariants) -> AbGroup {
    AbGroup { free_rank: dim - out.rank - inn.rank, torsion: inn.torsion.clone() }
}

/// Dimension of `H_n` with coefficients in `F_p`.
pub fn homology_mod_p(boundary_out: &IntMatrix, boundary_in: &IntMatrix, p: u64) -> Result<usize, SmithError> {
    if !modp::is_prime(p) {
        return Err(SmithError::NotPrime(p));
    }
    check_pair(boundary_out, boundary_in)?;
    Ok(boundary_in.rows - rank_mod_p(boundary_out, p)? - rank_mod_p(boundary_in, p)?)
}

pub fn rank_mod_p(a: &IntMatrix, p: u64) -> Result<usize, SmithError> {
    if !modp::is_prime(p) {
        return Err(SmithError::NotPrime(p));
    }
    Ok(modp::rank_mod_p(a, p))
}

/// Builds a reusable class-coordinate map for `H_n`.
pub fn presentation(boundary_out: &IntMatrix, boundary_in: &IntMatrix) -> Result<HomologyPresentation, SmithError> {
    check_pair(boundary_out, boundary_in)?;
    Ok(HomologyPresentation::build(boundary_out, boundary_in))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn snf_examples() {
        let a = m(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        let s = snf(&a);
        assert_eq!(s.d, m(&[&[1, 0, 0], &[0, 3, 0], &[0, 0, 0]]));
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
        assert_eq!(snf(&IntMatrix::identity(4)).d, IntMatrix::identity(4));
        assert!(snf(&IntMatrix::zeros(3, 2)).d.is_zero());
    }

    #[test]
    fn invariant_factors_both_kernels() {
        // block diagonal copies of the triangle Laplacian, large enough for the sparse path
        let k = 100;
        let lap = [[2i64, -1, -1], [-1, 2, -1], [-1, -1, 2]];
        let trip = (0..k).flat_map(|b| {
            (0..3).flat_map(move |i| (0..3).map(move |j| (3 * b + i, 3 * b + j, lap[i][j])))
        });
        let big = IntMatrix::from_triplets(3 * k, 3 * k, trip);
        let inv = invariant_factors(&big);
        assert_eq!(inv.rank, 2 * k);
        assert_eq!(inv.torsion, vec![BigUint::from(3u32); k]);
        let small = invariant_factors(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(small.torsion, vec![BigUint::from(6u32)]);
    }

    #[test]
    fn homology_of_triangle_laplacian() {
        // C_1 = Z^3, d_1 = 0, d_2 = Laplacian -> Z + Z_3
        let d1 = IntMatrix::zeros(1, 3);
        let d2 = m(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        assert_eq!(homology(&d1, &d2).unwrap().to_string(), "Z + Z_3");
        assert_eq!(homology_mod_p(&d1, &d2, 3), Ok(2));
        assert_eq!(homology_mod_p(&d1, &d2, 2), Ok(1));
        assert_eq!(homology_mod_p(&d1, &d2, 4), Err(SmithError::NotPrime(4)));
        let z = IntMatrix::zeros(0, 3);
        assert_eq!(homology(&z, &IntMatrix::zeros(3, 0)).unwrap(), AbGroup::free(3));
        assert_eq!(homology_mod_p(&z, &IntMatrix::zeros(3, 0), 7), Ok(3));
    }

    #[test]
    fn rejects_non_complex() {
        let a = m(&[&[1, 0]]);
        let b = m(&[&[1], &[0]]);
        assert_eq!(homology(&a, &b), Err(SmithError::NotAComplex { row: 0, col: 0 }));
        assert!(matches!(homology(&a, &m(&[&[1]])), Err(SmithError::DimensionMismatch(_))));
    }

    #[test]
    fn overflowing_entries_fall_back_to_big_integers() {
        let huge: BigInt = BigInt::from(i64::MAX) * 4;
        let a = IntMatrix::from_triplets(2, 2, [(0, 0, huge.clone()), (1, 1, BigInt::from(2))]);
        let inv = invariant_factors(&a);
        assert_eq!(inv.rank, 2);
        assert_eq!(inv.torsion, vec![BigUint::from(2u32), huge.magnitude().clone()]);
        let s = snf(&a);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
    }
}
