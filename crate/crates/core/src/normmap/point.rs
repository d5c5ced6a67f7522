//! Points of the target of the norm map, recorded by finite data of `det∘ρ`.

use std::collections::BTreeMap;

use super::law::{law_coefficients, LawCoefficientTable};
use crate::error::{Error, Result};
use crate::exactalg::charpoly::{charpoly, det};
use crate::exactalg::ncpoly::WordProducts;
use crate::exactalg::{CommPoly, Field, NCPoly, Scalar, Word};
use crate::hilbpts::{span_dimension, PointedRep};
use crate::repscheme::RepPoint;

/// Values of the multiplicative law `det∘ρ` at a bounded set of arguments.
/// Two points are compared only through this data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormPoint {
    pub(crate) field: Field,
    pub(crate) n: usize,
    pub(crate) m: usize,
    pub(crate) max_len: usize,
    pub(crate) gen_charpolys: Vec<CommPoly>,
    pub(crate) mixed: LawCoefficientTable,
    pub(crate) word_dets: BTreeMap<Word, Scalar>,
}

impl NormPoint {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Characteristic polynomial of `ρ(x_k)` in `t`.
    pub fn gen_charpolys(&self) -> &[CommPoly] {
        &self.gen_charpolys
    }

    /// Coefficients of `det(Σ_k t_k ρ(x_k))`.
    pub fn mixed_table(&self) -> &LawCoefficientTable {
        &self.mixed
    }

    pub fn word_dets(&self) -> &BTreeMap<Word, Scalar> {
        &self.word_dets
    }

    pub fn word_det(&self, w: &Word) -> Option<&Scalar> {
        self.word_dets.get(w)
    }

    pub fn reduce_mod(&self, p: u64) -> Option<NormPoint> {
        Some(NormPoint {
            field: Field::prime(p).ok()?,
            n: self.n,
            m: self.m,
            max_len: self.max_len,
            gen_charpolys: self
                .gen_charpolys
                .iter()
                .map(|c| c.reduce_mod(p))
                .collect::<Option<_>>()?,
            mixed: self.mixed.reduce_mod(p)?,
            word_dets: self
                .word_dets
                .iter()
                .map(|(w, d)| Some((w.clone(), d.reduce_mod(p)?)))
                .collect::<Option<_>>()?,
        })
    }
}

pub fn det_point(rep: &RepPoint, max_len: usize) -> Result<NormPoint> {
    if max_len == 0 {
        return Err(Error::precondition("word bound must be at least 1"));
    }
    let field = rep.field();
    let m = rep.m();
    let gens: Vec<NCPoly> = (0..m).map(|k| NCPoly::generator(field, k)).collect();
    let mixed = law_coefficients(rep, &gens)?;
    let gen_charpolys = rep.matrices().iter().map(charpoly).collect();
    let mut products = WordProducts::new(rep.matrices());
    let mut word_dets = BTreeMap::new();
    for w in Word::all_up_to(m, 1, max_len) {
        let d = det(&products.product(&w));
        word_dets.insert(w, d);
    }
    Ok(NormPoint {
        field,
        n: rep.n(),
        m,
        max_len,
        gen_charpolys,
        mixed,
        word_dets,
    })
}

/// The image of a Hilbert-scheme point: the determinant point of its
/// representation, after checking that the vector is cyclic.
pub fn hc_point(pt: &PointedRep, max_len: usize) -> Result<NormPoint> {
    let span = span_dimension(pt);
    if span < pt.n() {
        return Err(Error::NotCyclic {
            span_dim: span,
            n: pt.n(),
        });
    }
    det_point(pt.rep(), max_len)
}
