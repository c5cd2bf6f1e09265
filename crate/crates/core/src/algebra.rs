//! Finite set-theoretic Yang-Baxter operators.
//!
//! A [`FiniteYB`] stores the two component tables of `R = (R1, R2)` on the
//! carrier `0..N`, together with the inverse pair table and the fixed-pair
//! partner map `a -> bar(a)` whenever those exist. Both are computed once at
//! construction.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while building or inverting a Yang-Baxter operator.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("carrier size must be positive")]
    EmptyCarrier,
    #[error("{0} is not a unit modulo {1}")]
    NotAUnit(i64, u64),
    #[error("(1 - s)(1 - t) = {product} is not 0 modulo {modulus}")]
    ConditionFails { product: i64, modulus: u64 },
    #[error("table shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("table entry {value} at ({row}, {col}) is outside 0..{size}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, size: usize },
    #[error("R is not bijective: {first:?} and {second:?} both map to {image:?}")]
    NotBijective { first: (usize, usize), second: (usize, usize), image: (usize, usize) },
    #[error("names list has {got} entries, expected {expected}")]
    BadNames { got: usize, expected: usize },
}

/// A set-theoretic Yang-Baxter operator on `{0, .., N-1}` given by lookup tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteYB {
    size: usize,
    r1: Vec<usize>,
    r2: Vec<usize>,
    r_inv: Option<Vec<(usize, usize)>>,
    bar: Option<Vec<usize>>,
}

impl FiniteYB {
    /// Cyclic biquandle `C_n`: `R(i, j) = (j + 1, i - 1) mod n`.
    pub fn cyclic(n: usize) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        Ok(Self::from_fn(n, |i, j| ((j + 1) % n, (i + n - 1) % n)))
    }

    /// Alexander biquandle `Z_{n;s,t}`: `R(a, b) = ((1-s)a + sb, ta + (1-t)b) mod n`.
    ///
    /// `s` and `t` must be units modulo `n` with `(1-s)(1-t) = 0 mod n`.
    pub fn alexander(n: usize, s: i64, t: i64) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let m = n as i64;
        for u in [s, t] {
            if n > 1 && u.mod_floor(&m).gcd(&m) != 1 {
                return Err(AlgebraError::NotAUnit(u, n as u64));
            }
        }
        let product = (1 - s) * (1 - t);
        if product.mod_floor(&m) != 0 {
            return Err(AlgebraError::ConditionFails { product, modulus: n as u64 });
        }
        let (s, t) = (s.mod_floor(&m), t.mod_floor(&m));
        Ok(Self::from_fn(n, |a, b| {
            let (a, b) = (a as i64, b as i64);
            let x = ((1 - s) * a + s * b).mod_floor(&m);
            let y = (t * a + (1 - t) * b).mod_floor(&m);
            (x as usize, y as usize)
        }))
    }

    /// The swap map `R(a, b) = (b, a)`.
    pub fn swap(n: usize) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        Ok(Self::from_fn(n, |a, b| (b, a)))
    }

    /// Builds an operator from an arbitrary pair function. No axiom is checked.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Self {
        let mut r1 = Vec::with_capacity(n * n);
        let mut r2 = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (x, y) = f(a, b);
                assert!(x < n && y < n, "R({a}, {b}) = ({x}, {y}) leaves the carrier");
                r1.push(x);
                r2.push(y);
            }
        }
        Self::assemble(n, r1, r2)
    }

    /// Builds an operator from the two `N x N` tables, validating shape and range.
    ///
    /// The inverse table and the fixed-pair map are filled in when they exist;
    /// callers wanting axiom guarantees must run [`verify_axioms`].
    pub fn from_tables(r1: &[Vec<usize>], r2: &[Vec<usize>]) -> Result<Self, AlgebraError> {
        let n = r1.len();
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        if r2.len() != n {
            return Err(AlgebraError::ShapeMismatch(format!(
                "r1 has {n} rows but r2 has {}",
                r2.len()
            )));
        }
        let mut flat1 = Vec::with_capacity(n * n);
        let mut flat2 = Vec::with_capacity(n * n);
        for (name, table, flat) in [("r1", r1, &mut flat1), ("r2", r2, &mut flat2)] {
            for (row, entries) in table.iter().enumerate() {
                if entries.len() != n {
                    return Err(AlgebraError::ShapeMismatch(format!(
                        "{name} row {row} has {} entries, expected {n}",
                        entries.len()
                    )));
                }
                for (col, &value) in entries.iter().enumerate() {
                    if value >= n {
                        return Err(AlgebraError::EntryOutOfRange { row, col, value, size: n });
                    }
                    flat.push(value);
                }
            }
        }
        Ok(Self::assemble(n, flat1, flat2))
    }

    fn assemble(size: usize, r1: Vec<usize>, r2: Vec<usize>) -> Self {
        let mut x = Self { size, r1, r2, r_inv: None, bar: None };
        x.r_inv = x.compute_inverse().ok();
        x.bar = x.compute_bar();
        x
    }

    fn compute_inverse(&self) -> Result<Vec<(usize, usize)>, AlgebraError> {
        let n = self.size;
        let mut inv: Vec<Option<(usize, usize)>> = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                let (x, y) = self.apply(a, b);
                let slot = &mut inv[x * n + y];
                if let Some(first) = *slot {
                    return Err(AlgebraError::NotBijective { first, second: (a, b), image: (x, y) });
                }
                *slot = Some((a, b));
            }
        }
        Ok(inv.into_iter().map(|p| p.expect("injective on a finite set")).collect())
    }

    fn compute_bar(&self) -> Option<Vec<usize>> {
        (0..self.size)
            .map(|a| {
                let mut partners = self.fixed_partners(a);
                match (partners.next(), partners.next()) {
                    (Some(b), None) => Some(b),
                    _ => None,
                }
            })
            .collect()
    }

    fn fixed_partners(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(move |&b| self.apply(a, b) == (a, b))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn r1(&self, a: usize, b: usize) -> usize {
        self.r1[a * self.size + b]
    }

    #[inline]
    pub fn r2(&self, a: usize, b: usize) -> usize {
        self.r2[a * self.size + b]
    }

    #[inline]
    pub fn apply(&self, a: usize, b: usize) -> (usize, usize) {
        let k = a * self.size + b;
        (self.r1[k], self.r2[k])
    }

    /// `R^{-1}(a, b)`, when `R` is bijective on pairs.
    pub fn apply_inverse(&self, a: usize, b: usize) -> Option<(usize, usize)> {
        self.r_inv.as_ref().map(|t| t[a * self.size + b])
    }

    /// The fixed-pair partner `bar(a)`, when every element has exactly one.
    pub fn bar(&self, a: usize) -> Option<usize> {
        self.bar.as_ref().map(|t| t[a])
    }

    pub fn bar_table(&self) -> Option<&[usize]> {
        self.bar.as_deref()
    }

    pub fn is_invertible(&self) -> bool {
        self.r_inv.is_some()
    }

    pub fn r1_table(&self) -> Vec<Vec<usize>> {
        self.r1.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn r2_table(&self) -> Vec<Vec<usize>> {
        self.r2.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    /// The table of `R^{-1}`, or the first colliding pair of inputs.
    pub fn invert(&self) -> Result<Vec<Vec<(usize, usize)>>, AlgebraError> {
        let flat = match &self.r_inv {
            Some(t) => t.clone(),
            None => self.compute_inverse()?,
        };
        Ok(flat.chunks(self.size).map(<[(usize, usize)]>::to_vec).collect())
    }

    pub fn to_file(&self) -> BiquandleFile {
        BiquandleFile { size: self.size, r1: self.r1_table(), r2: self.r2_table(), names: None }
    }
}

/// Outcome of the exhaustive birack/biquandle axiom checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub ybe_holds: bool,
    pub ybe_witness: Option<(usize, usize, usize)>,
    pub r_bijective: bool,
    pub bijectivity_witness: Option<((usize, usize), (usize, usize))>,
    pub left_invertible: bool,
    /// `(a, b1, b2)` with `R1(a, b1) = R1(a, b2)`.
    pub left_witness: Option<(usize, usize, usize)>,
    pub right_invertible: bool,
    /// `(b, a1, a2)` with `R2(a1, b) = R2(a2, b)`.
    pub right_witness: Option<(usize, usize, usize)>,
    pub biquandle: bool,
    /// An element with zero or several fixed-pair partners.
    pub fixed_pair_witness: Option<usize>,
    /// Every `b` has exactly one `a` with `R(a, b) = (a, b)`. Only evaluated
    /// when `biquandle` holds.
    pub dual_fixed_pairs: Option<bool>,
}

impl AxiomReport {
    pub fn is_birack(&self) -> bool {
        self.ybe_holds && self.r_bijective && self.left_invertible && self.right_invertible
    }

    pub fn is_biquandle(&self) -> bool {
        self.is_birack() && self.biquandle && self.dual_fixed_pairs == Some(true)
    }
}

/// Checks the Yang-Baxter equation and the birack/biquandle conditions by
/// exhausting the whole domain.
pub fn verify_axioms(x: &FiniteYB) -> AxiomReport {
    let n = x.size();

    let mut ybe_witness = None;
    'ybe: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if ybe_lhs(x, a, b, c) != ybe_rhs(x, a, b, c) {
                    ybe_witness = Some((a, b, c));
                    break 'ybe;
                }
            }
        }
    }

    let bijectivity_witness = match x.compute_inverse() {
        Ok(_) => None,
        Err(AlgebraError::NotBijective { first, second, .. }) => Some((first, second)),
        Err(e) => unreachable!("{e}"),
    };

    let mut left_witness = None;
    'left: for a in 0..n {
        let mut seen = vec![None; n];
        for b in 0..n {
            let c = x.r1(a, b);
            if let Some(prev) = seen[c] {
                left_witness = Some((a, prev, b));
                break 'left;
            }
            seen[c] = Some(b);
        }
    }

    let mut right_witness = None;
    'right: for b in 0..n {
        let mut seen = vec![None; n];
        for a in 0..n {
            let d = x.r2(a, b);
            if let Some(prev) = seen[d] {
                right_witness = Some((b, prev, a));
                break 'right;
            }
            seen[d] = Some(a);
        }
    }

    let fixed_pair_witness = (0..n).find(|&a| x.fixed_partners(a).count() != 1);
    let biquandle = fixed_pair_witness.is_none();
    let dual_fixed_pairs = biquandle
        .then(|| (0..n).all(|b| (0..n).filter(|&a| x.apply(a, b) == (a, b)).count() == 1));

    AxiomReport {
        ybe_holds: ybe_witness.is_none(),
        ybe_witness,
        r_bijective: bijectivity_witness.is_none(),
        bijectivity_witness,
        left_invertible: left_witness.is_none(),
        left_witness,
        right_invertible: right_witness.is_none(),
        right_witness,
        biquandle,
        fixed_pair_witness,
        dual_fixed_pairs,
    }
}

/// `(R x Id)(Id x R)(R x Id)` applied to `(a, b, c)`.
fn ybe_lhs(x: &FiniteYB, a: usize, b: usize, c: usize) -> (usize, usize, usize) {
    let (a, b) = x.apply(a, b);
    let (b, c) = x.apply(b, c);
    let (a, b) = x.apply(a, b);
    (a, b, c)
}

/// `(Id x R)(R x Id)(Id x R)` applied to `(a, b, c)`.
fn ybe_rhs(x: &FiniteYB, a: usize, b: usize, c: usize) -> (usize, usize, usize) {
    let (b, c) = x.apply(b, c);
    let (a, b) = x.apply(a, b);
    let (b, c) = x.apply(b, c);
    (a, b, c)
}

/// On-disk JSON form of a finite operator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiquandleFile {
    pub size: usize,
    pub r1: Vec<Vec<usize>>,
    pub r2: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl BiquandleFile {
    pub fn to_operator(&self) -> Result<FiniteYB, AlgebraError> {
        if let Some(names) = &self.names {
            if names.len() != self.size {
                return Err(AlgebraError::BadNames { got: names.len(), expected: self.size });
            }
        }
        if self.r1.len() != self.size {
            return Err(AlgebraError::ShapeMismatch(format!(
                "size is {} but r1 has {} rows",
                self.size,
                self.r1.len()
            )));
        }
        FiniteYB::from_tables(&self.r1, &self.r2)
    }
}
