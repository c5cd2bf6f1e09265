//! Sparse integer elimination computing the nonzero diagonal of a Smith
//! form (not yet chained by divisibility) without transforms.
//!
//! Pivots are chosen by smallest magnitude first and Markowitz cost second.
//! Unit pivots are isolated in one sweep. A non-unit pivot reduces its line
//! and its positions by Euclidean division; whenever a remainder survives
//! the global minimum magnitude has dropped, so the loop terminates.

use super::coeff::{Coeff, Overflow};

pub(crate) struct SparseElim<T> {
    lines: Vec<Vec<(u32, T)>>,
    /// `members[c]` lists the live lines holding a nonzero at position `c`.
    members: Vec<Vec<u32>>,
    alive: Vec<bool>,
}

impl<T: Coeff> SparseElim<T> {
    /// `lines` are sparse vectors over positions `0..width`, sorted by position,
    /// without explicit zeros.
    pub fn new(width: usize, lines: Vec<Vec<(u32, T)>>) -> Self {
        let mut members = vec![Vec::new(); width];
        for (i, line) in lines.iter().enumerate() {
            for (c, v) in line {
                debug_assert!(!v.vanishes());
                members[*c as usize].push(i as u32);
            }
        }
        let alive = vec![true; lines.len()];
        Self { lines, members, alive }
    }

    /// Runs elimination to completion, returning the pivot values in the
    /// order they were isolated (absolute values, all nonzero).
    pub fn run(mut self) -> Result<Vec<T>, Overflow> {
        let mut pivots = Vec::new();
        while let Some((r, c)) = self.select_pivot() {
            let p = self.value(r, c).clone();
            if self.reduce_position(r, c, &p)? && self.reduce_line(r, c, &p)? {
                self.drop_line(r);
                pivots.push(if p.is_negative() { p.neg()? } else { p });
            }
        }
        Ok(pivots)
    }

    fn value(&self, r: usize, c: u32) -> &T {
        let line = &self.lines[r];
        let k = line.binary_search_by_key(&c, |e| e.0).expect("entry present");
        &line[k].1
    }

    fn select_pivot(&self) -> Option<(usize, u32)> {
        let mut best: Option<(usize, u32, usize)> = None;
        for (r, line) in self.lines.iter().enumerate() {
            if !self.alive[r] || line.is_empty() {
                continue;
            }
            let row_cost = line.len() - 1;
            for (c, v) in line {
                let cost = row_cost * (self.members[*c as usize].len() - 1);
                let better = match best {
                    None => true,
                    Some((br, bc, bcost)) => {
                        let bv = self.value(br, bc);
                        v.abs_lt(bv) || (!bv.abs_lt(v) && cost < bcost)
                    }
                };
                if better {
                    best = Some((r, *c, cost));
                    if cost == 0 && v.is_unit() {
                        return Some((r, *c));
                    }
                }
            }
        }
        best.map(|(r, c, _)| (r, c))
    }

    /// Clears position `c` in every other line by Euclidean steps against
    /// line `r`. Returns whether all remainders vanished.
    fn reduce_position(&mut self, r: usize, c: u32, p: &T) -> Result<bool, Overflow> {
        let others: Vec<u32> =
            self.members[c as usize].iter().copied().filter(|&i| i as usize != r).collect();
        let mut clean = true;
        for i in others {
            let i = i as usize;
            let q = self.value(i, c).quot(p)?;
            if !q.vanishes() {
                self.line_sub(i, r, &q)?;
            }
            clean &= self.lines[i].binary_search_by_key(&c, |e| e.0).is_err();
        }
        Ok(clean)
    }

    /// With position `c` owned by line `r` alone, a column operation only
    /// touches line `r`, so each entry is replaced by its remainder mod `p`.
    fn reduce_line(&mut self, r: usize, c: u32, p: &T) -> Result<bool, Overflow> {
        let mut line = std::mem::take(&mut self.lines[r]);
        let mut clean = true;
        let mut kept = Vec::with_capacity(line.len());
        for (j, v) in line.drain(..) {
            if j == c {
                kept.push((j, v));
                continue;
            }
            let q = v.quot(p)?;
            let rem = v.sub_mul(&q, p)?;
            if rem.vanishes() {
                remove_member(&mut self.members[j as usize], r as u32);
            } else {
                clean = false;
                kept.push((j, rem));
            }
        }
        self.lines[r] = kept;
        Ok(clean)
    }

    /// `line[dst] -= q * line[src]`, keeping `members` exact.
    fn line_sub(&mut self, dst: usize, src: usize, q: &T) -> Result<(), Overflow> {
        let a = std::mem::take(&mut self.lines[dst]);
        let b = &self.lines[src];
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let tag = dst as u32;
        while i < a.len() || j < b.len() {
            let ca = a.get(i).map(|e| e.0);
            let cb = b.get(j).map(|e| e.0);
            match (ca, cb) {
                (Some(x), Some(y)) if x == y => {
                    let v = a[i].1.sub_mul(q, &b[j].1)?;
                    if v.vanishes() {
                        remove_member(&mut self.members[x as usize], tag);
                    } else {
                        out.push((x, v));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(x), y) if y.is_none_or(|y| x < y) => {
                    out.push(a[i].clone());
                    i += 1;
                }
                (_, Some(y)) => {
                    let v = T::zero_value().sub_mul(q, &b[j].1)?;
                    self.members[y as usize].push(tag);
                    out.push((y, v));
                    j += 1;
                }
                _ => unreachable!(),
            }
        }
        self.lines[dst] = out;
        Ok(())
    }

    fn drop_line(&mut self, r: usize) {
        for (c, _) in std::mem::take(&mut self.lines[r]) {
            remove_member(&mut self.members[c as usize], r as u32);
        }
        self.alive[r] = false;
    }
}

fn remove_member(list: &mut Vec<u32>, tag: u32) {
    if let Some(k) = list.iter().position(|&x| x == tag) {
        list.swap_remove(k);
    }
}
