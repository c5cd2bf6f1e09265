use num_bigint::BigInt;
use proptest::prelude::*;

use ybh::algebra::FiniteYB;
use ybh::complex::{self, boundary_matrix, face_left, face_right, Theory};
use ybh::knots::{colorings, homological_invariant, represented_cycle, Diagram};
use ybh::smith::{self, invariant_factors, snf, IntMatrix};

fn small_biquandles() -> Vec<FiniteYB> {
    let mut out = Vec::new();
    for n in 1..=5usize {
        out.push(FiniteYB::cyclic(n).unwrap());
        out.push(FiniteYB::swap(n).unwrap());
        for s in 1..n as i64 {
            for t in 1..n as i64 {
                if let Ok(x) = FiniteYB::alexander(n, s, t) {
                    out.push(x);
                }
            }
        }
    }
    out
}

fn biquandle() -> impl Strategy<Value = FiniteYB> {
    let all = small_biquandles();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn theory() -> impl Strategy<Value = Theory> {
    prop_oneof![Just(Theory::Yb), Just(Theory::Deg), Just(Theory::Nyb)]
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

/// Applies `R` to positions `(k, k + 1)` of a word.
fn act(x: &FiniteYB, w: &mut [usize], k: usize) {
    let (a, b) = x.apply(w[k], w[k + 1]);
    w[k] = a;
    w[k + 1] = b;
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn faces_are_operator_compositions(
        x in biquandle(),
        n in 1usize..=4,
        seed in prop::collection::vec(0usize..1000, 4),
        i_seed in 0usize..100,
    ) {
        let w: Vec<usize> = seed[..n].iter().map(|s| s % x.size()).collect();
        let i = 1 + i_seed % n;
        let mut left = w.clone();
        for k in (0..i - 1).rev() {
            act(&x, &mut left, k);
        }
        left.remove(0);
        let mut right = w.clone();
        for k in i - 1..n - 1 {
            act(&x, &mut right, k);
        }
        right.pop();
        prop_assert_eq!(face_left(&x, i, &w).unwrap(), left);
        prop_assert_eq!(face_right(&x, i, &w).unwrap(), right);
    }

    #[test]
    fn snf_of_small_matrices(
        rows in 1usize..8,
        cols in 1usize..8,
        entries in prop::collection::vec(-20i64..=20, 64),
    ) {
        let a = IntMatrix::from_rows(
            &(0..rows).map(|i| entries[i * 8..i * 8 + cols].to_vec()).collect::<Vec<_>>(),
        );
        let s = snf(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(rows));
        prop_assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(cols));
        let inv = invariant_factors(&a);
        prop_assert_eq!(inv.rank, s.rank());
        // transposition preserves invariant factors
        prop_assert_eq!(invariant_factors(&a.transpose()), inv);
    }

    #[test]
    fn homology_ignores_basis_order(
        x in biquandle(),
        t in theory(),
        n in 1usize..=3,
        perm_seed in prop::collection::vec(any::<u64>(), 1..200),
    ) {
        let out = boundary_matrix(&x, t, n).unwrap().to_int_matrix();
        let inn = boundary_matrix(&x, t, n + 1).unwrap().to_int_matrix();
        let dim = out.cols();
        // Fisher-Yates driven by the seed vector
        let mut perm: Vec<usize> = (0..dim).collect();
        for k in (1..dim).rev() {
            let j = (perm_seed[k % perm_seed.len()] % (k as u64 + 1)) as usize;
            perm.swap(k, j);
        }
        let out_p = IntMatrix::from_columns(
            out.rows(),
            (0..dim).map(|c| out.column(perm[c]).to_vec()).collect(),
        );
        let mut where_to = vec![0; dim];
        for (new, &old) in perm.iter().enumerate() {
            where_to[old] = new;
        }
        let inn_p = IntMatrix::from_columns(
            dim,
            inn.columns().iter().map(|col| col.iter().map(|(r, v)| (where_to[*r], v.clone())).collect()).collect(),
        );
        prop_assert_eq!(smith::homology(&out_p, &inn_p).unwrap(), smith::homology(&out, &inn).unwrap());
    }

    #[test]
    fn euler_characteristic(x in biquandle(), t in theory(), m in 1usize..=3) {
        let groups = complex::homology(&x, t, m, complex::DEFAULT_GUARD).unwrap();
        let mut chain_side = 0i64;
        let mut homology_side = 0i64;
        for n in 1..=m {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            chain_side += sign * complex::chain_rank(x.size(), t, n).unwrap() as i64;
            homology_side += sign * groups[n - 1].free_rank as i64;
        }
        let top = invariant_factors(&boundary_matrix(&x, t, m + 1).unwrap().to_int_matrix()).rank as i64;
        homology_side += if m % 2 == 0 { top } else { -top };
        prop_assert_eq!(chain_side, homology_side);
    }

    #[test]
    fn class_coordinates_are_a_homomorphism(
        x in biquandle(),
        t in prop_oneof![Just(Theory::Yb), Just(Theory::Nyb)],
        z1 in prop::collection::vec(-6i64..=6, 5),
        z2 in prop::collection::vec(-6i64..=6, 5),
        w in prop::collection::vec(-3i64..=3, 25),
        k in -4i64..=4,
    ) {
        // every degree-1 chain is a cycle
        let d1 = boundary_matrix(&x, t, 1).unwrap().to_int_matrix();
        let d2 = boundary_matrix(&x, t, 2).unwrap().to_int_matrix();
        let p = smith::presentation(&d1, &d2).unwrap();
        let dim = d1.cols();
        let big = |v: &[i64], len: usize| -> Vec<BigInt> { v[..len].iter().map(|&a| BigInt::from(a)).collect() };
        let (a, b) = (big(&z1, dim), big(&z2, dim));
        let sum: Vec<BigInt> = a.iter().zip(&b).map(|(p, q)| p + q).collect();
        let (ca, cb) = (p.class_of(&a).unwrap(), p.class_of(&b).unwrap());
        prop_assert_eq!(p.class_of(&sum).unwrap(), p.add(&ca, &cb));
        let scaled: Vec<BigInt> = a.iter().map(|v| v * k).collect();
        prop_assert_eq!(p.class_of(&scaled).unwrap(), p.scale(&BigInt::from(k), &ca));
        let boundary = d2.mul_vec(&big(&w, d2.cols()));
        prop_assert!(p.class_of(&boundary).unwrap().is_zero());
        let shifted: Vec<BigInt> = a.iter().zip(&boundary).map(|(p, q)| p + q).collect();
        prop_assert_eq!(p.class_of(&shifted).unwrap(), ca);
    }
}

/// A braid closure together with the closures of some Markov and
/// Reidemeister variations of it.
#[derive(Debug, Clone)]
struct Braid {
    width: usize,
    word: Vec<i64>,
}

fn braid() -> impl Strategy<Value = Braid> {
    (2usize..=3)
        .prop_flat_map(|width| {
            let gen = (1..width as i64).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
            (Just(width), prop::collection::vec(gen, 0..=5))
        })
        .prop_map(|(width, word)| Braid { width, word })
}

fn variations(b: &Braid, pos: usize, g: i64) -> Vec<Braid> {
    let w = b.width as i64;
    let pos = if b.word.is_empty() { 0 } else { pos % (b.word.len() + 1) };
    let g = 1 + (g.unsigned_abs() as i64 - 1) % (w - 1);
    let mut out = Vec::new();
    // conjugation
    let mut rotated = b.word.clone();
    if !rotated.is_empty() {
        rotated.rotate_left(1);
    }
    out.push(Braid { width: b.width, word: rotated });
    // positive and negative stabilization
    for s in [w, -w] {
        let mut word = b.word.clone();
        word.push(s);
        out.push(Braid { width: b.width + 1, word });
    }
    // a cancelling pair
    let mut word = b.word.clone();
    word.splice(pos..pos, [g, -g]);
    out.push(Braid { width: b.width, word });
    // a triangle move followed by cancellations
    if b.width >= 3 {
        let mut word = b.word.clone();
        word.splice(pos..pos, [1, 2, 1, -2, -1, -2]);
        out.push(Braid { width: b.width, word });
    }
    out
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn invariants_survive_diagram_moves(b in braid(), pos in 0usize..8, g in 1i64..4) {
        let xs = [
            FiniteYB::cyclic(3).unwrap(),
            FiniteYB::cyclic(4).unwrap(),
            FiniteYB::alexander(8, 3, 5).unwrap(),
        ];
        let base = Diagram::from_braid(b.width, &b.word).unwrap();
        for v in variations(&b, pos, g) {
            let d = Diagram::from_braid(v.width, &v.word).unwrap();
            prop_assert_eq!(d.components(), base.components());
            for x in &xs {
                let (lhs, rhs) = (homological_invariant(&base, x).unwrap(), homological_invariant(&d, x).unwrap());
                prop_assert_eq!(lhs, rhs, "{:?} vs {:?}", b, v);
            }
        }
    }

    #[test]
    fn kinks_carry_fixed_pairs(b in braid()) {
        let x = FiniteYB::alexander(8, 5, 5).unwrap();
        let mut word = b.word.clone();
        word.push(b.width as i64);
        let d = Diagram::from_braid(b.width + 1, &word).unwrap();
        for c in colorings(&d, &x).unwrap() {
            for k in d.crossings().iter().filter(|k| k.is_kink()) {
                let (s, t) = (k.source(), k.target());
                prop_assert_eq!((c.color(s.0), c.color(s.1)), (c.color(t.0), c.color(t.1)));
                prop_assert_eq!(x.bar(c.color(s.0)), Some(c.color(s.1)));
            }
            prop_assert!(represented_cycle(&d, &c, &x).is_ok());
        }
    }
}
