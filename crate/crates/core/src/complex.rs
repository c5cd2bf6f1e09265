//! Pre-cubical chain complexes of a Yang-Baxter operator.
//!
//! `C_n` is free on `X^n`. The boundary is
//! `sum_{i=1..n} (-1)^{i+1} (d_i^l - d_i^r)`, where `d_i^l` pulls the `i`-th
//! strand out to the left through `x_{i-1}, .., x_1` and `d_i^r` pulls it
//! out to the right through `x_{i+1}, .., x_n`. Tuples containing a
//! consecutive fixed pair `(x, bar(x))` span the degenerate subcomplex; the
//! normalized complex is the quotient by it.

use std::collections::HashMap;
use std::fmt;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{verify_axioms, FiniteYB};
use crate::smith::{self, AbGroup, IntMatrix, SmithInvariants};

/// Default ceiling on the number of basis tuples in a single chain group.
pub const DEFAULT_GUARD: usize = 100_000;

/// A basis element of `C_n`: a word of length `n` over the carrier.
pub type BasisTuple = Vec<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("face index {index} outside 1..={degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("tuple entry {value} outside the carrier 0..{size}")]
    EntryOutOfRange { value: usize, size: usize },
    #[error("operator fails the Yang-Baxter equation at {0:?}")]
    NotYangBaxter((usize, usize, usize)),
    #[error("operator is not a biquandle, so bar(x) is unavailable")]
    BarUnavailable,
    #[error("degree {degree} chain group has rank {rank}, above the guard of {guard}")]
    GuardExceeded { degree: usize, rank: usize, guard: usize },
    #[error("boundary of degenerate tuple {tuple:?} leaves the degenerate subcomplex at {face:?}")]
    NotClosed { tuple: BasisTuple, face: BasisTuple },
    #[error("boundary degree must be at least 1")]
    ZeroDegree,
}

/// Which complex to work in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Theory {
    #[serde(rename = "YB")]
    Yb,
    #[serde(rename = "DEG")]
    Deg,
    #[serde(rename = "NYB")]
    Nyb,
}

impl Theory {
    pub const ALL: [Theory; 3] = [Theory::Yb, Theory::Deg, Theory::Nyb];

    pub fn label(self) -> &'static str {
        match self {
            Theory::Yb => "YB",
            Theory::Deg => "DEG",
            Theory::Nyb => "NYB",
        }
    }

    fn needs_bar(self) -> bool {
        self != Theory::Yb
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Theory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "yb" => Ok(Theory::Yb),
            "deg" | "d" => Ok(Theory::Deg),
            "nyb" => Ok(Theory::Nyb),
            other => Err(format!("unknown theory `{other}` (expected yb, deg or nyb)")),
        }
    }
}

fn check_word(x: &FiniteYB, w: &[usize]) -> Result<(), ComplexError> {
    match w.iter().find(|&&v| v >= x.size()) {
        Some(&value) => Err(ComplexError::EntryOutOfRange { value, size: x.size() }),
        None => Ok(()),
    }
}

fn check_index(i: usize, n: usize) -> Result<(), ComplexError> {
    if i == 0 || i > n {
        Err(ComplexError::IndexOutOfRange { index: i, degree: n })
    } else {
        Ok(())
    }
}

/// Left face `d_i^l` (1-based `i`).
pub fn face_left(x: &FiniteYB, i: usize, w: &[usize]) -> Result<BasisTuple, ComplexError> {
    check_index(i, w.len())?;
    check_word(x, w)?;
    let mut out = Vec::new();
    face_left_into(x, i, w, &mut out);
    Ok(out)
}

/// Right face `d_i^r` (1-based `i`).
pub fn face_right(x: &FiniteYB, i: usize, w: &[usize]) -> Result<BasisTuple, ComplexError> {
    check_index(i, w.len())?;
    check_word(x, w)?;
    let mut out = Vec::new();
    face_right_into(x, i, w, &mut out);
    Ok(out)
}

fn face_left_into(x: &FiniteYB, i: usize, w: &[usize], out: &mut Vec<usize>) {
    out.clear();
    out.resize(w.len() - 1, 0);
    let mut moving = w[i - 1];
    for j in (0..i - 1).rev() {
        let (a, b) = x.apply(w[j], moving);
        out[j] = b;
        moving = a;
    }
    out[i - 1..].copy_from_slice(&w[i..]);
}

fn face_right_into(x: &FiniteYB, i: usize, w: &[usize], out: &mut Vec<usize>) {
    out.clear();
    out.extend_from_slice(&w[..i - 1]);
    let mut moving = w[i - 1];
    for &next in &w[i..] {
        let (a, b) = x.apply(moving, next);
        out.push(a);
        moving = b;
    }
}

/// Whether `w` contains a consecutive fixed pair `(x, bar(x))`.
pub fn is_degenerate(x: &FiniteYB, w: &[usize]) -> Result<bool, ComplexError> {
    let bar = x.bar_table().ok_or(ComplexError::BarUnavailable)?;
    check_word(x, w)?;
    Ok(degenerate_with(bar, w))
}

fn degenerate_with(bar: &[usize], w: &[usize]) -> bool {
    w.windows(2).any(|p| p[1] == bar[p[0]])
}

/// `|X^n|`, `|D^n|` or the non-degenerate count, as the theory requires.
pub fn chain_rank(size: usize, theory: Theory, n: usize) -> Option<usize> {
    let all = size.checked_pow(n as u32)?;
    let nondeg = if n == 0 { 1 } else { size.checked_mul(size.saturating_sub(1).checked_pow(n as u32 - 1)?)? };
    Some(match theory {
        Theory::Yb => all,
        Theory::Nyb => nondeg,
        Theory::Deg => all - nondeg,
    })
}

/// An ordered basis of one chain group with reverse lookup.
#[derive(Debug, Clone)]
pub struct Basis {
    theory: Theory,
    degree: usize,
    size: usize,
    tuples: Vec<BasisTuple>,
    index: Option<HashMap<u64, usize>>,
}

impl Basis {
    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> &[BasisTuple] {
        &self.tuples
    }

    fn code(&self, w: &[usize]) -> u64 {
        w.iter().fold(0u64, |acc, &v| acc * self.size as u64 + v as u64)
    }

    /// Position of `w` in this basis, if it is a member.
    pub fn index_of(&self, w: &[usize]) -> Option<usize> {
        if w.len() != self.degree || w.iter().any(|&v| v >= self.size) {
            return None;
        }
        let code = self.code(w);
        match &self.index {
            None => Some(code as usize),
            Some(map) => map.get(&code).copied(),
        }
    }
}

/// Enumerates the basis of `C_n` for the theory in lexicographic order.
pub fn enumerate_basis(x: &FiniteYB, theory: Theory, n: usize) -> Result<Basis, ComplexError> {
    enumerate_guarded(x, theory, n, usize::MAX)
}

fn enumerate_guarded(x: &FiniteYB, theory: Theory, n: usize, guard: usize) -> Result<Basis, ComplexError> {
    let bar = if theory.needs_bar() { Some(x.bar_table().ok_or(ComplexError::BarUnavailable)?) } else { None };
    let size = x.size();
    let rank = chain_rank(size, theory, n).unwrap_or(usize::MAX);
    if rank > guard {
        return Err(ComplexError::GuardExceeded { degree: n, rank, guard });
    }
    let mut tuples = Vec::with_capacity(rank);
    let mut w = vec![0usize; n];
    loop {
        let keep = match (theory, bar) {
            (Theory::Yb, _) => true,
            (Theory::Deg, Some(bar)) => degenerate_with(bar, &w),
            (Theory::Nyb, Some(bar)) => !degenerate_with(bar, &w),
            _ => unreachable!(),
        };
        if keep {
            tuples.push(w.clone());
        }
        // odometer, last coordinate fastest
        let mut k = n;
        loop {
            if k == 0 {
                let mut basis = Basis { theory, degree: n, size, tuples, index: None };
                if theory != Theory::Yb {
                    let map = basis.tuples.iter().enumerate().map(|(i, t)| (basis.code(t), i)).collect();
                    basis.index = Some(map);
                }
                return Ok(basis);
            }
            k -= 1;
            w[k] += 1;
            if w[k] < size {
                break;
            }
            w[k] = 0;
        }
    }
}

/// `d_n` between explicit bases, stored by columns.
#[derive(Debug, Clone)]
pub struct BoundaryMatrix {
    pub degree: usize,
    pub row_basis: Basis,
    pub col_basis: Basis,
    columns: Vec<Vec<(usize, i64)>>,
}

impl BoundaryMatrix {
    pub fn rows(&self) -> usize {
        self.row_basis.len()
    }

    pub fn cols(&self) -> usize {
        self.col_basis.len()
    }

    pub fn column(&self, c: usize) -> &[(usize, i64)] {
        &self.columns[c]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.rows(), self.columns.clone())
    }

    /// Writes `<stem>.txt` (header `degree rows cols`, then `r c v` lines)
    /// plus `<stem>.rows` and `<stem>.cols` listing the basis tuples.
    pub fn write_triplets(&self, dir: &Path, stem: &str) -> io::Result<()> {
        let mut f = io::BufWriter::new(std::fs::File::create(dir.join(format!("{stem}.txt")))?);
        writeln!(f, "{} {} {}", self.degree, self.rows(), self.cols())?;
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                writeln!(f, "{r} {c} {v}")?;
            }
        }
        f.flush()?;
        for (ext, basis) in [("rows", &self.row_basis), ("cols", &self.col_basis)] {
            let mut f = io::BufWriter::new(std::fs::File::create(dir.join(format!("{stem}.{ext}")))?);
            for t in basis.tuples() {
                let line: Vec<String> = t.iter().map(ToString::to_string).collect();
                writeln!(f, "{}", line.join(","))?;
            }
            f.flush()?;
        }
        Ok(())
    }
}

/// Signed face images of `w` in `C_{n-1}^{YB}`, merged and without zeros.
fn yb_boundary_terms(x: &FiniteYB, w: &[usize], buf: &mut Vec<usize>) -> Vec<(BasisTuple, i64)> {
    let n = w.len();
    let mut terms: Vec<(BasisTuple, i64)> = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let sign = if i % 2 == 1 { 1 } else { -1 };
        face_left_into(x, i, w, buf);
        terms.push((buf.clone(), sign));
        face_right_into(x, i, w, buf);
        terms.push((buf.clone(), -sign));
    }
    terms.sort();
    let mut merged: Vec<(BasisTuple, i64)> = Vec::with_capacity(terms.len());
    for (t, s) in terms {
        match merged.last_mut() {
            Some((lt, ls)) if *lt == t => *ls += s,
            _ => merged.push((t, s)),
        }
    }
    merged.retain(|e| e.1 != 0);
    merged
}

fn require_operator(x: &FiniteYB, theory: Theory) -> Result<(), ComplexError> {
    let report = verify_axioms(x);
    if let Some(w) = report.ybe_witness {
        return Err(ComplexError::NotYangBaxter(w));
    }
    if theory.needs_bar() && x.bar_table().is_none() {
        return Err(ComplexError::BarUnavailable);
    }
    Ok(())
}

/// The boundary `d_n : C_n -> C_{n-1}` of the chosen theory.
pub fn boundary_matrix(x: &FiniteYB, theory: Theory, n: usize) -> Result<BoundaryMatrix, ComplexError> {
    boundary_guarded(x, theory, n, usize::MAX)
}

/// As [`boundary_matrix`], refusing chain groups larger than `guard`.
pub fn boundary_guarded(
    x: &FiniteYB,
    theory: Theory,
    n: usize,
    guard: usize,
) -> Result<BoundaryMatrix, ComplexError> {
    if n == 0 {
        return Err(ComplexError::ZeroDegree);
    }
    require_operator(x, theory)?;
    let col_basis = enumerate_guarded(x, theory, n, guard)?;
    let row_basis = enumerate_guarded(x, theory, n - 1, guard)?;
    let mut buf = Vec::with_capacity(n);
    let mut columns = Vec::with_capacity(col_basis.len());
    for w in col_basis.tuples() {
        let mut col = Vec::new();
        for (face, coeff) in yb_boundary_terms(x, w, &mut buf) {
            match row_basis.index_of(&face) {
                Some(r) => col.push((r, coeff)),
                // the quotient kills degenerate faces
                None if theory == Theory::Nyb => {}
                None => return Err(ComplexError::NotClosed { tuple: w.clone(), face }),
            }
        }
        col.sort_unstable();
        columns.push(col);
    }
    Ok(BoundaryMatrix { degree: n, row_basis, col_basis, columns })
}

/// Outcome of the structural checks of [`verify_complex`].
#[derive(Debug, Clone, Default, Serialize)]
pub struct ComplexReport {
    pub theory: Option<Theory>,
    pub max_degree: usize,
    /// `(n, holds)` for `d_{n-1} d_n = 0`.
    pub boundary_squares: Vec<(usize, bool)>,
    pub precubical_checked: bool,
    pub closure_checked: bool,
    pub failures: Vec<String>,
}

impl ComplexReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `dd = 0`, the pre-cubical identities (YB) and closure of the
/// degenerate subcomplex (biquandles) through `max_degree`.
pub fn verify_complex(x: &FiniteYB, theory: Theory, max_degree: usize) -> Result<ComplexReport, ComplexError> {
    verify_complex_guarded(x, theory, max_degree, usize::MAX)
}

pub fn verify_complex_guarded(
    x: &FiniteYB,
    theory: Theory,
    max_degree: usize,
    guard: usize,
) -> Result<ComplexReport, ComplexError> {
    let mut report = ComplexReport { theory: Some(theory), max_degree, ..Default::default() };

    let mut prev: Option<IntMatrix> = None;
    for n in 1..=max_degree {
        let d = match boundary_guarded(x, theory, n, guard) {
            Ok(d) => d.to_int_matrix(),
            Err(ComplexError::NotClosed { tuple, face }) => {
                report.failures.push(format!("degree {n}: boundary of {tuple:?} reaches {face:?}"));
                prev = None;
                continue;
            }
            Err(e) => return Err(e),
        };
        if let Some(p) = &prev {
            let prod = p.mul(&d);
            let ok = prod.is_zero();
            report.boundary_squares.push((n, ok));
            if !ok {
                let c = (0..prod.cols()).find(|&c| !prod.column(c).is_empty()).unwrap_or(0);
                report.failures.push(format!("degree {n}: d_{} d_{n} is nonzero on column {c}", n - 1));
            }
        }
        prev = Some(d);
    }

    if theory == Theory::Yb {
        report.precubical_checked = true;
        if let Some(msg) = first_precubical_failure(x, max_degree, guard)? {
            report.failures.push(msg);
        }
    }

    if x.bar_table().is_some() {
        report.closure_checked = true;
        for n in 2..=max_degree {
            if let Some(msg) = first_closure_failure(x, n, guard)? {
                report.failures.push(msg);
            }
        }
    }
    Ok(report)
}

type Face = fn(&FiniteYB, usize, &[usize], &mut Vec<usize>);

const FACES: [(char, Face); 2] = [('l', face_left_into), ('r', face_right_into)];

fn first_precubical_failure(x: &FiniteYB, max_degree: usize, guard: usize) -> Result<Option<String>, ComplexError> {
    let (mut a, mut b, mut c, mut d) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for n in 2..=max_degree {
        let basis = enumerate_guarded(x, Theory::Yb, n, guard)?;
        for w in basis.tuples() {
            for j in 2..=n {
                for i in 1..j {
                    for (eps, fe) in FACES {
                        for (delta, fd) in FACES {
                            fd(x, j, w, &mut a);
                            fe(x, i, &a, &mut b);
                            fe(x, i, w, &mut c);
                            fd(x, j - 1, &c, &mut d);
                            if b != d {
                                return Ok(Some(format!(
                                    "d_{i}^{eps} d_{j}^{delta} != d_{}^{delta} d_{i}^{eps} on {w:?}",
                                    j - 1
                                )));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn first_closure_failure(x: &FiniteYB, n: usize, guard: usize) -> Result<Option<String>, ComplexError> {
    let bar = x.bar_table().ok_or(ComplexError::BarUnavailable)?;
    let basis = enumerate_guarded(x, Theory::Deg, n, guard)?;
    let mut buf = Vec::new();
    for w in basis.tuples() {
        for (face, coeff) in yb_boundary_terms(x, w, &mut buf) {
            if !degenerate_with(bar, &face) {
                return Ok(Some(format!(
                    "degree {n}: boundary of degenerate {w:?} has coefficient {coeff} on {face:?}"
                )));
            }
        }
    }
    Ok(None)
}

/// Homology groups `H_1 .. H_max` of one theory with integer coefficients.
pub fn homology(x: &FiniteYB, theory: Theory, max_degree: usize, guard: usize) -> Result<Vec<AbGroup>, ComplexError> {
    let mut invariants: Vec<SmithInvariants> = Vec::with_capacity(max_degree + 1);
    let mut dims = Vec::with_capacity(max_degree + 1);
    for n in 1..=max_degree + 1 {
        let d = boundary_guarded(x, theory, n, guard)?;
        dims.push(d.cols());
        invariants.push(smith::invariant_factors(&d.to_int_matrix()));
    }
    Ok((0..max_degree)
        .map(|k| smith::homology_from_invariants(dims[k], &invariants[k], &invariants[k + 1]))
        .collect())
}

/// `H_n` for a single degree.
pub fn homology_at(x: &FiniteYB, theory: Theory, n: usize, guard: usize) -> Result<AbGroup, ComplexError> {
    let d_in = boundary_guarded(x, theory, n + 1, guard)?;
    let out = if n == 0 {
        SmithInvariants { rank: 0, torsion: Vec::new() }
    } else {
        smith::invariant_factors(&boundary_guarded(x, theory, n, guard)?.to_int_matrix())
    };
    let inn = smith::invariant_factors(&d_in.to_int_matrix());
    Ok(smith::homology_from_invariants(d_in.rows(), &out, &inn))
}

/// Dimensions of `H_1 .. H_max` with coefficients in `F_p`.
pub fn homology_mod_p(
    x: &FiniteYB,
    theory: Theory,
    max_degree: usize,
    p: u64,
    guard: usize,
) -> Result<Vec<usize>, HomologyError> {
    let mut ranks = Vec::with_capacity(max_degree + 1);
    let mut dims = Vec::with_capacity(max_degree + 1);
    for n in 1..=max_degree + 1 {
        let d = boundary_guarded(x, theory, n, guard)?;
        dims.push(d.cols());
        ranks.push(smith::rank_mod_p(&d.to_int_matrix(), p)?);
    }
    Ok((0..max_degree).map(|k| dims[k] - ranks[k] - ranks[k + 1]).collect())
}

/// Either half of a homology run can fail.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Smith(#[from] smith::SmithError),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> FiniteYB {
        FiniteYB::cyclic(3).unwrap()
    }

    #[test]
    fn face_examples() {
        let x = c3();
        assert_eq!(face_left(&x, 1, &[0, 1, 2]).unwrap(), vec![1, 2]);
        assert_eq!(face_left(&x, 2, &[0, 1, 2]).unwrap(), vec![2, 2]);
        assert_eq!(face_left(&x, 3, &[0, 1, 2]).unwrap(), vec![2, 0]);
        assert_eq!(face_right(&x, 3, &[0, 1, 2]).unwrap(), vec![0, 1]);
        assert_eq!(face_right(&x, 1, &[0, 1, 2]).unwrap(), vec![2, 0]);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(face_right(&x, 1, &[a, b]).unwrap(), vec![x.r1(a, b)]);
                assert_eq!(face_right(&x, 2, &[a, b]).unwrap(), vec![a]);
                assert_eq!(face_left(&x, 2, &[a, b]).unwrap(), vec![x.r2(a, b)]);
            }
        }
        assert_eq!(face_left(&x, 0, &[0, 1]), Err(ComplexError::IndexOutOfRange { index: 0, degree: 2 }));
        assert_eq!(face_right(&x, 3, &[0, 1]), Err(ComplexError::IndexOutOfRange { index: 3, degree: 2 }));
        assert!(matches!(face_left(&x, 1, &[0, 7]), Err(ComplexError::EntryOutOfRange { value: 7, .. })));
    }

    #[test]
    fn degeneracy() {
        let x = c3();
        assert_eq!(is_degenerate(&x, &[0, 2]), Ok(true));
        assert_eq!(is_degenerate(&x, &[0, 1]), Ok(false));
        assert_eq!(is_degenerate(&x, &[1]), Ok(false));
        let no_bar = FiniteYB::from_fn(2, |a, b| (a, b));
        assert_eq!(is_degenerate(&no_bar, &[0, 1]), Err(ComplexError::BarUnavailable));
        assert!(matches!(enumerate_basis(&no_bar, Theory::Deg, 2), Err(ComplexError::BarUnavailable)));
    }

    #[test]
    fn basis_enumeration() {
        let x = c3();
        let deg = enumerate_basis(&x, Theory::Deg, 2).unwrap();
        assert_eq!(deg.tuples(), &[vec![0, 2], vec![1, 0], vec![2, 1]]);
        assert_eq!(enumerate_basis(&x, Theory::Nyb, 2).unwrap().len(), 6);
        let zero = enumerate_basis(&x, Theory::Yb, 0).unwrap();
        assert_eq!(zero.tuples(), &[Vec::<usize>::new()]);
        assert!(enumerate_basis(&x, Theory::Deg, 0).unwrap().is_empty());
        assert!(enumerate_basis(&x, Theory::Deg, 1).unwrap().is_empty());
        let yb = enumerate_basis(&x, Theory::Yb, 3).unwrap();
        for (i, t) in yb.tuples().iter().enumerate() {
            assert_eq!(yb.index_of(t), Some(i));
        }
        assert_eq!(deg.index_of(&[1, 0]), Some(1));
        assert_eq!(deg.index_of(&[1, 1]), None);
    }

    #[test]
    fn boundary_examples() {
        let x = c3();
        let d2 = boundary_matrix(&x, Theory::Yb, 2).unwrap();
        let c = d2.col_basis.index_of(&[0, 1]).unwrap();
        assert_eq!(d2.column(c), &[(0, 1), (1, 1), (2, -2)]);
        let deg = boundary_matrix(&x, Theory::Deg, 2).unwrap();
        assert_eq!(deg.rows(), 0);
        assert!(deg.is_zero());
        for w in enumerate_basis(&x, Theory::Deg, 2).unwrap().tuples() {
            let c = d2.col_basis.index_of(w).unwrap();
            assert!(d2.column(c).is_empty(), "{w:?}");
        }
        let d1 = boundary_matrix(&x, Theory::Yb, 1).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (1, 3));
        assert!(d1.is_zero());
        let d1 = boundary_matrix(&x, Theory::Deg, 1).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (0, 0));
        assert_eq!(boundary_matrix(&x, Theory::Yb, 0).err(), Some(ComplexError::ZeroDegree));
    }

    #[test]
    fn guard_refuses_large_groups() {
        let x = c3();
        assert_eq!(
            boundary_guarded(&x, Theory::Yb, 4, 50).err(),
            Some(ComplexError::GuardExceeded { degree: 4, rank: 81, guard: 50 })
        );
    }

    #[test]
    fn non_ybe_operators_are_refused() {
        let x = FiniteYB::from_fn(2, |a, b| if a == 1 && b == 1 { (0, 1) } else { (0, 0) });
        assert!(matches!(boundary_matrix(&x, Theory::Yb, 2), Err(ComplexError::NotYangBaxter(_))));
    }

    #[test]
    fn verify_examples() {
        assert!(verify_complex(&c3(), Theory::Yb, 4).unwrap().passed());
        let a = FiniteYB::alexander(8, 3, 5).unwrap();
        assert!(verify_complex(&a, Theory::Nyb, 3).unwrap().passed());
        let swap = FiniteYB::swap(3).unwrap();
        let r = verify_complex(&swap, Theory::Yb, 3).unwrap();
        assert!(r.passed() && r.precubical_checked && r.closure_checked);
    }

    #[test]
    fn small_homology() {
        let x = c3();
        let h = homology(&x, Theory::Yb, 2, DEFAULT_GUARD).unwrap();
        assert_eq!(h[0].to_string(), "Z + Z_3");
        assert_eq!(h[1].to_string(), "Z^3");
        assert_eq!(homology_at(&x, Theory::Nyb, 2, DEFAULT_GUARD).unwrap().to_string(), "Z^2");
        assert_eq!(homology_at(&x, Theory::Yb, 0, DEFAULT_GUARD).unwrap().to_string(), "Z");
        assert!(homology(&x, Theory::Deg, 1, DEFAULT_GUARD).unwrap()[0].is_trivial());
        assert_eq!(homology_mod_p(&x, Theory::Yb, 1, 3, DEFAULT_GUARD).unwrap(), vec![2]);
        assert_eq!(homology_mod_p(&x, Theory::Yb, 1, 2, DEFAULT_GUARD).unwrap(), vec![1]);
    }

    #[test]
    fn matrix_export() {
        let dir = tempfile::tempdir().unwrap();
        let d2 = boundary_matrix(&c3(), Theory::Nyb, 2).unwrap();
        d2.write_triplets(dir.path(), "d2_NYB").unwrap();
        let text = std::fs::read_to_string(dir.path().join("d2_NYB.txt")).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("2 3 6"));
        assert_eq!(lines.count(), d2.nnz());
        let cols = std::fs::read_to_string(dir.path().join("d2_NYB.cols")).unwrap();
        assert_eq!(cols.lines().next(), Some("0,0"));
        assert_eq!(cols.lines().count(), 6);
    }
}
