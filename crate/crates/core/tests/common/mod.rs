//! Random inputs and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use hilbchow::exactalg::linalg::inverse;
use hilbchow::exactalg::{Field, Matrix, NCPoly, Scalar, Word};
use hilbchow::hilbpts::{is_cyclic, PointedRep};
use hilbchow::normmap::SymTensor;
use hilbchow::repscheme::RepPoint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const SMALL_FIELDS: [Field; 4] = [Field::Rational, Field::Prime(2), Field::Prime(3), Field::Prime(5)];

pub fn pick_field(r: &mut ChaCha8Rng, fields: &[Field]) -> Field {
    *fields.choose(r).expect("nonempty")
}

pub fn scalar(r: &mut ChaCha8Rng, field: Field) -> Scalar {
    field.from_i64(r.gen_range(-3..=3))
}

pub fn matrix(r: &mut ChaCha8Rng, field: Field, n: usize) -> Matrix<Scalar> {
    Matrix::from_vec(n, (0..n * n).map(|_| scalar(r, field)).collect()).expect("square")
}

pub fn invertible(r: &mut ChaCha8Rng, field: Field, n: usize) -> Matrix<Scalar> {
    loop {
        let g = matrix(r, field, n);
        if inverse(&g).is_ok() {
            return g;
        }
    }
}

pub fn rep(r: &mut ChaCha8Rng, field: Field, n: usize, m: usize) -> RepPoint {
    RepPoint::new((0..m).map(|_| matrix(r, field, n)).collect()).expect("valid point")
}

pub fn vector(r: &mut ChaCha8Rng, field: Field, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| scalar(r, field)).collect()
}

pub fn cyclic_point(r: &mut ChaCha8Rng, field: Field, n: usize, m: usize) -> PointedRep {
    loop {
        let pt = PointedRep::new(rep(r, field, n, m), vector(r, field, n)).expect("valid point");
        if is_cyclic(&pt) {
            return pt;
        }
    }
}

pub fn word(r: &mut ChaCha8Rng, m: usize, max_len: usize) -> Word {
    let len = r.gen_range(0..=max_len);
    Word::new((0..len).map(|_| r.gen_range(0..m)).collect())
}

pub fn ncpoly(r: &mut ChaCha8Rng, field: Field, m: usize, max_len: usize, max_terms: usize) -> NCPoly {
    let k = r.gen_range(1..=max_terms);
    NCPoly::from_terms(field, (0..k).map(|_| (word(r, m, max_len), scalar(r, field))).collect::<Vec<_>>())
}

/// A tensor of `A^{⊗n}` in the word basis: ordered tuples of words.
pub type FullTensor = BTreeMap<Vec<Word>, Scalar>;

pub fn add_into(t: &mut FullTensor, key: Vec<Word>, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let s = match t.remove(&key) {
        Some(old) => &old + &c,
        None => c,
    };
    if !s.is_zero() {
        t.insert(key, s);
    }
}

/// `a⊗a⊗…⊗a` (`k` factors), expanded term by term.
pub fn tensor_power(a: &NCPoly, k: usize) -> FullTensor {
    let mut acc: FullTensor = BTreeMap::new();
    acc.insert(Vec::new(), a.field().one());
    for _ in 0..k {
        let mut next = BTreeMap::new();
        for (key, c) in &acc {
            for (w, d) in a.terms() {
                let mut k2 = key.clone();
                k2.push(w.clone());
                add_into(&mut next, k2, c * d);
            }
        }
        acc = next;
    }
    acc
}

/// Shuffle product `TS^i × TS^j → TS^{i+j}`, the image of the divided-power
/// product: interleave the slots of `u` and `v` in every way.
pub fn shuffle(u: &FullTensor, v: &FullTensor) -> FullTensor {
    let mut out = BTreeMap::new();
    for (ku, a) in u {
        for (kv, b) in v {
            let total = ku.len() + kv.len();
            for mask in 0u32..(1 << total) {
                if mask.count_ones() as usize != ku.len() {
                    continue;
                }
                let (mut iu, mut iv) = (0, 0);
                let key: Vec<Word> = (0..total)
                    .map(|p| {
                        if mask >> p & 1 == 1 {
                            iu += 1;
                            ku[iu - 1].clone()
                        } else {
                            iv += 1;
                            kv[iv - 1].clone()
                        }
                    })
                    .collect();
                add_into(&mut out, key, a * b);
            }
        }
    }
    out
}

pub fn full_plus(u: &FullTensor, v: &FullTensor) -> FullTensor {
    let mut out = u.clone();
    for (k, c) in v {
        add_into(&mut out, k.clone(), c.clone());
    }
    out
}

pub fn full_scale(u: &FullTensor, c: &Scalar) -> FullTensor {
    let mut out = BTreeMap::new();
    for (k, a) in u {
        add_into(&mut out, k.clone(), a * c);
    }
    out
}

/// Orbit-sum tensor written out in the full tensor power.
pub fn expand(t: &SymTensor) -> FullTensor {
    let mut out = BTreeMap::new();
    for (key, c) in t.terms() {
        for perm in key.orbit() {
            add_into(&mut out, perm, c.clone());
        }
    }
    out
}

/// Slotwise product in `A^{⊗n}`.
pub fn full_mul(u: &FullTensor, v: &FullTensor) -> FullTensor {
    let mut out = BTreeMap::new();
    for (ku, a) in u {
        for (kv, b) in v {
            let key = ku.iter().zip(kv).map(|(x, y)| x.concat(y)).collect();
            add_into(&mut out, key, a * b);
        }
    }
    out
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &Matrix<Scalar>) -> Scalar {
    let n = m.n();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = m.field().zero();
    for j in 0..n {
        let minor: Vec<Vec<Scalar>> = (1..n)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| m.get(i, c).clone()).collect())
            .collect();
        let term = m.get(0, j) * &cofactor_det(&Matrix::from_rows(minor).expect("square"));
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}
