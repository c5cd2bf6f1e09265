//! Oriented link diagrams as signed crossings over semi-arc ids, their
//! biquandle colorings, and the state sum valued in `H_2^NYB`.
//!
//! At a crossing the strand entering on the left leaves on the right and
//! vice versa. A positive crossing sends the incoming colors to the outgoing
//! ones by `R`, a negative crossing by `R^{-1}`. Either way there is a
//! *source* pair whose `R`-image is the other pair: the incoming pair for a
//! positive crossing, the outgoing pair for a negative one. The chain of a
//! colored diagram is the signed sum of its source pairs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::FiniteYB;
use crate::complex::{boundary_matrix, enumerate_basis, Basis, ComplexError, Theory};
use crate::smith::{self, AbGroup, ClassCoords, IntMatrix, SmithError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KnotError {
    #[error("malformed diagram: {0}")]
    Json(String),
    #[error("diagram must have at least one semi-arc")]
    NoSemiArcs,
    #[error("semi-arc {id}: {detail}")]
    DanglingSemiArc { id: usize, detail: String },
    #[error("crossing {crossing}: semi-arc {id} already used in another {slot} slot")]
    DuplicateSlot { crossing: usize, id: usize, slot: &'static str },
    #[error("crossing {crossing}: sign must be 1 or -1, got {sign}")]
    BadSign { crossing: usize, sign: i64 },
    #[error("braid generator {0} does not fit the braid width")]
    BadGenerator(i64),
    #[error("{0} are not supported")]
    Unsupported(&'static str),
    #[error("colorings need a biquandle (invertible R with fixed-pair partners)")]
    NotABiquandle,
    #[error("coloring {0} does not satisfy the crossing relations")]
    InvalidColoring(usize),
    #[error("chain of coloring {0} is not a cycle: crossing convention is inconsistent")]
    NotACycle(usize),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Smith(#[from] SmithError),
}

/// One signed crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub sign: i64,
    pub in_l: usize,
    pub in_r: usize,
    pub out_l: usize,
    pub out_r: usize,
}

impl Crossing {
    pub fn positive(&self) -> bool {
        self.sign > 0
    }

    /// The pair whose image under `R` is the other pair.
    pub fn source(&self) -> (usize, usize) {
        if self.positive() { (self.in_l, self.in_r) } else { (self.out_l, self.out_r) }
    }

    pub fn target(&self) -> (usize, usize) {
        if self.positive() { (self.out_l, self.out_r) } else { (self.in_l, self.in_r) }
    }

    /// A curl: some outgoing semi-arc loops straight back into this crossing.
    pub fn is_kink(&self) -> bool {
        [self.out_l, self.out_r].iter().any(|o| *o == self.in_l || *o == self.in_r)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct DiagramFile {
    semi_arcs: usize,
    crossings: Vec<Crossing>,
    /// Reserved for knotted-surface diagrams.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    triple_points: Option<Vec<serde_json::Value>>,
}

/// A validated closed diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    semi_arcs: usize,
    crossings: Vec<Crossing>,
    components: usize,
}

impl Diagram {
    /// Validates a crossing list. Semi-arcs that touch no crossing are
    /// unknotted circles.
    pub fn new(semi_arcs: usize, crossings: Vec<Crossing>) -> Result<Self, KnotError> {
        if semi_arcs == 0 {
            return Err(KnotError::NoSemiArcs);
        }
        let mut into = vec![None; semi_arcs];
        let mut out_of = vec![None; semi_arcs];
        for (k, c) in crossings.iter().enumerate() {
            if c.sign != 1 && c.sign != -1 {
                return Err(KnotError::BadSign { crossing: k, sign: c.sign });
            }
            for (ids, table, slot) in
                [([c.in_l, c.in_r], &mut into, "incoming"), ([c.out_l, c.out_r], &mut out_of, "outgoing")]
            {
                for id in ids {
                    if id >= semi_arcs {
                        return Err(KnotError::DanglingSemiArc {
                            id,
                            detail: format!("referenced by crossing {k} but only {semi_arcs} semi-arcs exist"),
                        });
                    }
                    if table[id].replace(k).is_some() {
                        return Err(KnotError::DuplicateSlot { crossing: k, id, slot });
                    }
                }
            }
        }
        for id in 0..semi_arcs {
            match (into[id], out_of[id]) {
                (Some(k), None) => {
                    return Err(KnotError::DanglingSemiArc {
                        id,
                        detail: format!("enters crossing {k} but leaves no crossing"),
                    })
                }
                (None, Some(k)) => {
                    return Err(KnotError::DanglingSemiArc {
                        id,
                        detail: format!("leaves crossing {k} but enters no crossing"),
                    })
                }
                _ => {}
            }
        }
        let components = count_components(semi_arcs, &crossings);
        Ok(Self { semi_arcs, crossings, components })
    }

    /// Closure of a braid on `width` strands. Generator `i > 0` is `sigma_i`
    /// (positive crossing of strands `i`, `i + 1`), `-i` its inverse.
    /// The strands at the bottom carry semi-arcs `0..width`; the closure
    /// reconnects the top of each strand to the same id.
    pub fn from_braid(width: usize, word: &[i64]) -> Result<Self, KnotError> {
        if width == 0 {
            return Err(KnotError::NoSemiArcs);
        }
        let mut last = vec![None; width];
        for (k, &g) in word.iter().enumerate() {
            let i = g.unsigned_abs() as usize;
            if i == 0 || i >= width {
                return Err(KnotError::BadGenerator(g));
            }
            last[i - 1] = Some(k);
            last[i] = Some(k);
        }
        let mut current: Vec<usize> = (0..width).collect();
        let mut next_id = width;
        let mut crossings = Vec::with_capacity(word.len());
        for (k, &g) in word.iter().enumerate() {
            let i = g.unsigned_abs() as usize;
            let mut fresh = |pos: usize| {
                if last[pos] == Some(k) {
                    pos
                } else {
                    next_id += 1;
                    next_id - 1
                }
            };
            let (out_l, out_r) = (fresh(i - 1), fresh(i));
            crossings.push(Crossing { sign: g.signum(), in_l: current[i - 1], in_r: current[i], out_l, out_r });
            current[i - 1] = out_l;
            current[i] = out_r;
        }
        Self::new(next_id, crossings)
    }

    pub fn parse(text: &str) -> Result<Self, KnotError> {
        let file: DiagramFile = serde_json::from_str(text).map_err(|e| KnotError::Json(e.to_string()))?;
        if file.triple_points.as_ref().is_some_and(|t| !t.is_empty()) {
            return Err(KnotError::Unsupported("triple points"));
        }
        Self::new(file.semi_arcs, file.crossings)
    }

    pub fn to_json(&self) -> String {
        let file = DiagramFile { semi_arcs: self.semi_arcs, crossings: self.crossings.clone(), triple_points: None };
        serde_json::to_string_pretty(&file).expect("diagram serializes")
    }

    pub fn semi_arcs(&self) -> usize {
        self.semi_arcs
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign).sum()
    }
}

/// Convenience wrapper around [`Diagram::parse`].
pub fn parse_diagram(text: &str) -> Result<Diagram, KnotError> {
    Diagram::parse(text)
}

fn count_components(semi_arcs: usize, crossings: &[Crossing]) -> usize {
    // follow each strand: entering on the left leaves on the right
    let mut next: Vec<Option<usize>> = vec![None; semi_arcs];
    for c in crossings {
        next[c.in_l] = Some(c.out_r);
        next[c.in_r] = Some(c.out_l);
    }
    let mut seen = vec![false; semi_arcs];
    let mut count = 0;
    for start in 0..semi_arcs {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut s = start;
        while !seen[s] {
            seen[s] = true;
            match next[s] {
                Some(t) => s = t,
                None => break,
            }
        }
    }
    count
}

/// Colors of all semi-arcs, indexed by id.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Coloring(pub Vec<usize>);

impl Coloring {
    pub fn color(&self, id: usize) -> usize {
        self.0[id]
    }

    pub fn satisfies(&self, d: &Diagram, x: &FiniteYB) -> bool {
        d.crossings.iter().all(|c| {
            let (s, t) = (c.source(), c.target());
            x.apply(self.0[s.0], self.0[s.1]) == (self.0[t.0], self.0[t.1])
        })
    }
}

fn require_biquandle(x: &FiniteYB) -> Result<(), KnotError> {
    if x.is_invertible() && x.bar_table().is_some() {
        Ok(())
    } else {
        Err(KnotError::NotABiquandle)
    }
}

struct Search<'a> {
    d: &'a Diagram,
    x: &'a FiniteYB,
    /// crossings touching each semi-arc
    touching: Vec<Vec<usize>>,
    found: Vec<Coloring>,
}

impl Search<'_> {
    /// Fills in every pair whose partner pair is fully known. Returns false
    /// on a contradiction.
    fn propagate(&self, colors: &mut [Option<usize>], mut queue: Vec<usize>) -> bool {
        while let Some(k) = queue.pop() {
            let c = &self.d.crossings[k];
            let (s, t) = (c.source(), c.target());
            let derived = match (colors[s.0], colors[s.1], colors[t.0], colors[t.1]) {
                (Some(a), Some(b), _, _) => {
                    let (p, q) = self.x.apply(a, b);
                    [(t.0, p), (t.1, q)]
                }
                (_, _, Some(p), Some(q)) => {
                    let (a, b) = self.x.apply_inverse(p, q).expect("biquandle is invertible");
                    [(s.0, a), (s.1, b)]
                }
                _ => continue,
            };
            for (id, v) in derived {
                match colors[id] {
                    Some(old) if old != v => return false,
                    Some(_) => {}
                    None => {
                        colors[id] = Some(v);
                        queue.extend(&self.touching[id]);
                    }
                }
            }
        }
        true
    }

    /// Next semi-arc to branch on: one whose pair partner is already known,
    /// otherwise the smallest unknown id.
    fn branch_point(&self, colors: &[Option<usize>]) -> Option<usize> {
        for c in &self.d.crossings {
            for (u, v) in [c.source(), c.target()] {
                match (colors[u], colors[v]) {
                    (None, Some(_)) => return Some(u),
                    (Some(_), None) => return Some(v),
                    _ => {}
                }
            }
        }
        colors.iter().position(Option::is_none)
    }

    fn descend(&mut self, colors: Vec<Option<usize>>) {
        let Some(id) = self.branch_point(&colors) else {
            self.found.push(Coloring(colors.into_iter().map(Option::unwrap).collect()));
            return;
        };
        for v in 0..self.x.size() {
            let mut next = colors.clone();
            next[id] = Some(v);
            if self.propagate(&mut next, self.touching[id].clone()) {
                self.descend(next);
            }
        }
    }
}

/// All colorings of `d` by `x`, sorted lexicographically by color vector.
pub fn colorings(d: &Diagram, x: &FiniteYB) -> Result<Vec<Coloring>, KnotError> {
    require_biquandle(x)?;
    let mut touching = vec![Vec::new(); d.semi_arcs];
    for (k, c) in d.crossings.iter().enumerate() {
        for id in [c.in_l, c.in_r, c.out_l, c.out_r] {
            if !touching[id].contains(&k) {
                touching[id].push(k);
            }
        }
    }
    let mut search = Search { d, x, touching, found: Vec::new() };
    search.descend(vec![None; d.semi_arcs]);
    let mut found = search.found;
    found.sort();
    found.dedup();
    for (i, c) in found.iter().enumerate() {
        if !c.satisfies(d, x) {
            return Err(KnotError::InvalidColoring(i));
        }
    }
    Ok(found)
}

/// Number of colorings, `|Col_X(D)|`.
pub fn coloring_count(d: &Diagram, x: &FiniteYB) -> Result<usize, KnotError> {
    colorings(d, x).map(|c| c.len())
}

/// Signed sum of the crossing source pairs as a vector over the normalized
/// degree-2 basis; degenerate pairs vanish. The result is checked against
/// `d_2^NYB`.
pub fn represented_cycle(d: &Diagram, coloring: &Coloring, x: &FiniteYB) -> Result<Vec<BigInt>, KnotError> {
    require_biquandle(x)?;
    let basis = enumerate_basis(x, Theory::Nyb, 2)?;
    let boundary = boundary_matrix(x, Theory::Nyb, 2)?.to_int_matrix();
    cycle_in(d, coloring, x, &basis, &boundary, 0)
}

fn cycle_in(
    d: &Diagram,
    coloring: &Coloring,
    x: &FiniteYB,
    basis: &Basis,
    boundary: &IntMatrix,
    tag: usize,
) -> Result<Vec<BigInt>, KnotError> {
    if !coloring.satisfies(d, x) {
        return Err(KnotError::InvalidColoring(tag));
    }
    let mut z = vec![BigInt::from(0); basis.len()];
    for c in &d.crossings {
        let (a, b) = c.source();
        if let Some(k) = basis.index_of(&[coloring.color(a), coloring.color(b)]) {
            z[k] += c.sign;
        }
    }
    if boundary.mul_vec(&z).iter().any(|v| *v != BigInt::from(0)) {
        return Err(KnotError::NotACycle(tag));
    }
    Ok(z)
}

/// The homological state sum: one class of `H_2^NYB(X)` per coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantValue {
    pub coloring_count: usize,
    /// The group the classes live in.
    pub group: AbGroup,
    /// Classes with multiplicities, in canonical coordinate order.
    #[serde(serialize_with = "serialize_classes")]
    pub classes: BTreeMap<ClassCoords, usize>,
}

fn serialize_classes<S: serde::Serializer>(m: &BTreeMap<ClassCoords, usize>, s: S) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        class: &'a ClassCoords,
        multiplicity: usize,
    }
    s.collect_seq(m.iter().map(|(class, &multiplicity)| Entry { class, multiplicity }))
}

impl fmt::Display for InvariantValue {
    /// Formal sum such as `3·[0]` or `2·[0] + 1·[; 1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.classes.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.classes.iter().map(|(c, m)| format!("{m}·{c}")).collect();
        f.write_str(&terms.join(" + "))
    }
}

pub fn homological_invariant(d: &Diagram, x: &FiniteYB) -> Result<InvariantValue, KnotError> {
    let cols = colorings(d, x)?;
    let basis = enumerate_basis(x, Theory::Nyb, 2)?;
    let d2 = boundary_matrix(x, Theory::Nyb, 2)?.to_int_matrix();
    let d3 = boundary_matrix(x, Theory::Nyb, 3)?.to_int_matrix();
    let pres = smith::presentation(&d2, &d3)?;
    let mut classes = BTreeMap::new();
    for (i, c) in cols.iter().enumerate() {
        let z = cycle_in(d, c, x, &basis, &d2, i)?;
        *classes.entry(pres.class_of(&z)?).or_insert(0) += 1;
    }
    Ok(InvariantValue { coloring_count: cols.len(), group: pres.group(), classes })
}

/// `<g_0, .., g_{N-1} | g_a g_b = g_{R1(a,b)} g_{R2(a,b)}>` with trivial and
/// repeated relations removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnvelopingPresentation {
    pub generators: usize,
    /// Each relation `(lhs, rhs)` reads `g_lhs.0 g_lhs.1 = g_rhs.0 g_rhs.1`.
    pub relations: Vec<((usize, usize), (usize, usize))>,
}

impl fmt::Display for EnvelopingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (0..self.generators).map(|i| format!("g{i}")).collect();
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|((a, b), (c, d))| format!("g{a}*g{b} = g{c}*g{d}"))
            .collect();
        if rels.is_empty() {
            write!(f, "< {} >", gens.join(", "))
        } else {
            write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
        }
    }
}

pub fn envgroup_presentation(x: &FiniteYB) -> EnvelopingPresentation {
    let mut seen = BTreeSet::new();
    let mut relations = Vec::new();
    for a in 0..x.size() {
        for b in 0..x.size() {
            let rhs = x.apply(a, b);
            if rhs == (a, b) {
                continue;
            }
            let key = if (a, b) < rhs { ((a, b), rhs) } else { (rhs, (a, b)) };
            if seen.insert(key) {
                relations.push(((a, b), rhs));
            }
        }
    }
    EnvelopingPresentation { generators: x.size(), relations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> FiniteYB {
        FiniteYB::cyclic(3).unwrap()
    }

    #[test]
    fn parse_examples() {
        let u = parse_diagram(r#"{"semi_arcs":1,"crossings":[]}"#).unwrap();
        assert_eq!(u.components(), 1);
        let t = Diagram::from_braid(2, &[1, 1, 1]).unwrap();
        assert_eq!(t.semi_arcs(), 6);
        assert_eq!(t.components(), 1);
        assert_eq!(parse_diagram(&t.to_json()).unwrap(), t);
        let hopf = Diagram::from_braid(2, &[1, 1]).unwrap();
        assert_eq!(hopf.components(), 2);
    }

    #[test]
    fn parse_errors() {
        let bad_ref = r#"{"semi_arcs":6,"crossings":[{"sign":1,"in_l":0,"in_r":1,"out_l":9,"out_r":2}]}"#;
        assert!(matches!(parse_diagram(bad_ref), Err(KnotError::DanglingSemiArc { id: 9, .. })));
        let open = r#"{"semi_arcs":2,"crossings":[{"sign":1,"in_l":0,"in_r":1,"out_l":1,"out_r":1}]}"#;
        assert!(matches!(parse_diagram(open), Err(KnotError::DuplicateSlot { id: 1, .. })));
        let sign = r#"{"semi_arcs":2,"crossings":[{"sign":2,"in_l":0,"in_r":1,"out_l":1,"out_r":0}]}"#;
        assert_eq!(parse_diagram(sign), Err(KnotError::BadSign { crossing: 0, sign: 2 }));
        let half = r#"{"semi_arcs":3,"crossings":[{"sign":1,"in_l":0,"in_r":1,"out_l":1,"out_r":2}]}"#;
        assert!(matches!(parse_diagram(half), Err(KnotError::DanglingSemiArc { .. })));
        assert!(matches!(parse_diagram("{"), Err(KnotError::Json(_))));
        let tp = r#"{"semi_arcs":1,"crossings":[],"triple_points":[{}]}"#;
        assert!(matches!(parse_diagram(tp), Err(KnotError::Unsupported(_))));
    }

    #[test]
    fn trefoil_and_kink_colorings() {
        let x = c3();
        let t = Diagram::from_braid(2, &[1, 1, 1]).unwrap();
        let cols = colorings(&t, &x).unwrap();
        assert_eq!(cols.len(), 3);
        for c in &cols {
            assert_eq!(c.color(1), x.bar(c.color(0)).unwrap());
        }
        let kink = Diagram::from_braid(2, &[1]).unwrap();
        let cols = colorings(&kink, &x).unwrap();
        assert_eq!(cols.len(), 3);
        let k = kink.crossings()[0];
        assert!(k.is_kink());
        for c in &cols {
            assert_eq!(c.color(k.in_r), x.bar(c.color(k.in_l)).unwrap());
        }
    }

    #[test]
    fn colorings_match_brute_force() {
        let x = FiniteYB::alexander(8, 3, 5).unwrap();
        for word in [vec![1, 1, 1], vec![1, -2, 1, -2], vec![1, 1, -2]] {
            let d = Diagram::from_braid(3, &word).unwrap();
            let n = d.semi_arcs() as u32;
            let brute = (0..8usize.pow(n))
                .filter(|code| {
                    let colors = (0..n).map(|i| code / 8usize.pow(n - 1 - i) % 8).collect();
                    Coloring(colors).satisfies(&d, &x)
                })
                .count();
            assert_eq!(coloring_count(&d, &x).unwrap(), brute, "{word:?}");
        }
    }

    #[test]
    fn cycles_and_invariants() {
        let x = c3();
        let u = parse_diagram(r#"{"semi_arcs":1,"crossings":[]}"#).unwrap();
        let inv = homological_invariant(&u, &x).unwrap();
        assert_eq!(inv.to_string(), "3·[0]");
        let t = Diagram::from_braid(2, &[1, 1, 1]).unwrap();
        for c in colorings(&t, &x).unwrap() {
            assert!(represented_cycle(&t, &c, &x).unwrap().iter().all(|v| *v == BigInt::from(0)));
        }
        assert_eq!(homological_invariant(&t, &x).unwrap().to_string(), "3·[0]");
    }

    #[test]
    fn reidemeister_two_pair_cancels() {
        let x = FiniteYB::alexander(8, 3, 5).unwrap();
        let d = Diagram::from_braid(2, &[1, -1]).unwrap();
        for c in colorings(&d, &x).unwrap() {
            assert!(represented_cycle(&d, &c, &x).unwrap().iter().all(|v| *v == BigInt::from(0)));
        }
        let plain = Diagram::from_braid(2, &[1, 1, 1]).unwrap();
        let padded = Diagram::from_braid(3, &[1, 1, 2, -2, 1, 2]).unwrap();
        assert_eq!(homological_invariant(&plain, &x).unwrap(), homological_invariant(&padded, &x).unwrap());
    }

    #[test]
    fn rejects_non_biquandles() {
        let x = FiniteYB::from_fn(2, |_, _| (0, 0));
        let u = Diagram::from_braid(1, &[]).unwrap();
        assert_eq!(colorings(&u, &x), Err(KnotError::NotABiquandle));
    }

    #[test]
    fn enveloping_group_examples() {
        let p = envgroup_presentation(&c3());
        assert!(p.relations.contains(&((0, 1), (2, 2))));
        assert!(p.to_string().contains("g0*g1 = g2*g2"));
        let s = envgroup_presentation(&FiniteYB::swap(3).unwrap());
        assert_eq!(s.relations.len(), 3);
        assert!(s.relations.iter().all(|((a, b), (c, d))| (a, b) == (d, c)));
        let one = envgroup_presentation(&FiniteYB::cyclic(1).unwrap());
        assert!(one.relations.is_empty());
        assert_eq!(one.to_string(), "< g0 >");
    }
}
