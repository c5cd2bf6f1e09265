//! Dense Smith normal form with optional unimodular transforms.

use super::coeff::{Coeff, Overflow};

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Dense<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: Coeff> Dense<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero_value(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one_value();
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    /// `row[dst] -= q * row[src]`
    fn row_sub(&mut self, dst: usize, src: usize, q: &T) -> Result<(), Overflow> {
        for j in 0..self.cols {
            let s = self.at(src, j);
            if !s.vanishes() {
                let v = self.at(dst, j).sub_mul(q, s)?;
                self.set(dst, j, v);
            }
        }
        Ok(())
    }

    /// `col[dst] -= q * col[src]`
    fn col_sub(&mut self, dst: usize, src: usize, q: &T) -> Result<(), Overflow> {
        for i in 0..self.rows {
            let s = self.at(i, src);
            if !s.vanishes() {
                let v = self.at(i, dst).sub_mul(q, s)?;
                self.set(i, dst, v);
            }
        }
        Ok(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn negate_row(&mut self, r: usize) -> Result<(), Overflow> {
        for j in 0..self.cols {
            let v = self.at(r, j).neg()?;
            self.set(r, j, v);
        }
        Ok(())
    }

    fn negate_col(&mut self, c: usize) -> Result<(), Overflow> {
        for i in 0..self.rows {
            let v = self.at(i, c).neg()?;
            self.set(i, c, v);
        }
        Ok(())
    }
}

/// `D = U * A * V` together with `U^{-1}` and `V^{-1}`.
pub(crate) struct Transforms<T> {
    pub u: Dense<T>,
    pub u_inv: Dense<T>,
    pub v: Dense<T>,
    pub v_inv: Dense<T>,
}

struct Reducer<T> {
    a: Dense<T>,
    tf: Option<Transforms<T>>,
}

impl<T: Coeff> Reducer<T> {
    fn row_sub(&mut self, dst: usize, src: usize, q: &T) -> Result<(), Overflow> {
        self.a.row_sub(dst, src, q)?;
        if let Some(tf) = &mut self.tf {
            tf.u.row_sub(dst, src, q)?;
            // inverse of the elementary operation acts on columns from the right
            tf.u_inv.col_sub(src, dst, &q.neg()?)?;
        }
        Ok(())
    }

    fn col_sub(&mut self, dst: usize, src: usize, q: &T) -> Result<(), Overflow> {
        self.a.col_sub(dst, src, q)?;
        if let Some(tf) = &mut self.tf {
            tf.v.col_sub(dst, src, q)?;
            tf.v_inv.row_sub(src, dst, &q.neg()?)?;
        }
        Ok(())
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(tf) = &mut self.tf {
            tf.u.swap_rows(i, j);
            tf.u_inv.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(tf) = &mut self.tf {
            tf.v.swap_cols(i, j);
            tf.v_inv.swap_rows(i, j);
        }
    }

    fn negate_row(&mut self, r: usize) -> Result<(), Overflow> {
        self.a.negate_row(r)?;
        if let Some(tf) = &mut self.tf {
            tf.u.negate_row(r)?;
            tf.u_inv.negate_col(r)?;
        }
        Ok(())
    }

    /// Smallest nonzero entry of the trailing block starting at `(t, t)`.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let v = self.a.at(i, j);
                if v.vanishes() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.abs_lt(self.a.at(bi, bj))) {
                    best = Some((i, j));
                    if v.is_unit() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) -> Result<(), Overflow> {
        let (m, n) = (self.a.rows, self.a.cols);
        for t in 0..m.min(n) {
            let Some((pi, pj)) = self.min_entry(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..m {
                    if !self.a.at(i, t).vanishes() {
                        let q = self.a.at(i, t).quot(self.a.at(t, t))?;
                        self.row_sub(i, t, &q)?;
                        dirty |= !self.a.at(i, t).vanishes();
                    }
                }
                for j in t + 1..n {
                    if !self.a.at(t, j).vanishes() {
                        let q = self.a.at(t, j).quot(self.a.at(t, t))?;
                        self.col_sub(j, t, &q)?;
                        dirty |= !self.a.at(t, j).vanishes();
                    }
                }
                if dirty {
                    // a remainder is now smaller than the pivot
                    let mut best: Option<(usize, usize)> = None;
                    let cands = (t + 1..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
                    for (i, j) in cands {
                        let v = self.a.at(i, j);
                        if !v.vanishes() && best.is_none_or(|(bi, bj)| v.abs_lt(self.a.at(bi, bj))) {
                            best = Some((i, j));
                        }
                    }
                    let (i, j) = best.expect("dirty pivot line has a remainder");
                    if i != t {
                        self.swap_rows(t, i);
                    } else {
                        self.swap_cols(t, j);
                    }
                    continue;
                }
                let p = self.a.at(t, t).clone();
                let offender = (t + 1..m)
                    .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !p.divides_exactly(self.a.at(i, j)));
                match offender {
                    Some((i, _)) => self.row_sub(t, i, &T::one_value().neg()?)?,
                    None => break,
                }
            }
            if self.a.at(t, t).is_negative() {
                self.negate_row(t)?;
            }
        }
        Ok(())
    }
}

/// Diagonalizes `a` into Smith normal form. The returned matrix is the
/// diagonal `D`; transforms are tracked only when requested.
pub(crate) fn dense_snf<T: Coeff>(
    a: Dense<T>,
    with_transforms: bool,
) -> Result<(Dense<T>, Option<Transforms<T>>), Overflow> {
    let tf = with_transforms.then(|| Transforms {
        u: Dense::identity(a.rows),
        u_inv: Dense::identity(a.rows),
        v: Dense::identity(a.cols),
        v_inv: Dense::identity(a.cols),
    });
    let mut r = Reducer { a, tf };
    r.run()?;
    Ok((r.a, r.tf))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> Dense<i64> {
        let cols = rows.first().map_or(0, |r| r.len());
        Dense { rows: rows.len(), cols, data: rows.iter().flat_map(|r| r.iter().copied()).collect() }
    }

    fn mul(a: &Dense<i64>, b: &Dense<i64>) -> Dense<i64> {
        let mut c = Dense::zeros(a.rows, b.cols);
        for i in 0..a.rows {
            for k in 0..a.cols {
                for j in 0..b.cols {
                    c.data[i * b.cols + j] += a.at(i, k) * b.at(k, j);
                }
            }
        }
        c
    }

    #[test]
    fn laplacian_of_triangle() {
        let a = dense(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        let (d, tf) = dense_snf(a.clone(), true).unwrap();
        assert_eq!(d, dense(&[&[1, 0, 0], &[0, 3, 0], &[0, 0, 0]]));
        let tf = tf.unwrap();
        assert_eq!(mul(&mul(&tf.u, &a), &tf.v), d);
        assert_eq!(mul(&tf.u, &tf.u_inv), Dense::identity(3));
        assert_eq!(mul(&tf.v_inv, &tf.v), Dense::identity(3));
    }

    #[test]
    fn forces_divisibility_chain() {
        let a = dense(&[&[2, 0], &[0, 3]]);
        let (d, _) = dense_snf(a, false).unwrap();
        assert_eq!(d, dense(&[&[1, 0], &[0, 6]]));
    }

    #[test]
    fn overflow_is_reported() {
        let a = dense(&[&[i64::MIN, 1], &[1, i64::MAX]]);
        assert_eq!(dense_snf(a, true).err(), Some(Overflow));
    }
}
