//! Presentations, generic matrices and the representation scheme `Rep^n_A`.
//!
//! The quotient `Rep^n_A // GL_n` is only handled at the level of points: an
//! [`InvariantTable`] records traces of word images and determinants of the
//! generator images. Equal tables are never taken to mean "same orbit".

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactalg::charpoly::det;
use crate::exactalg::commpoly::{vars, CommPoly, Vars};
use crate::exactalg::linalg::{inverse, rref};
use crate::exactalg::ncpoly::WordProducts;
use crate::exactalg::{nc_eval, Field, Matrix, NCPoly, Scalar, Word};

/// `A = k{x1..xm} / (relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    field: Field,
    m: usize,
    relations: Vec<NCPoly>,
}

impl AlgebraPresentation {
    pub fn new(field: Field, m: usize, relations: Vec<NCPoly>) -> Result<Self> {
        if m == 0 {
            return Err(Error::precondition("at least one generator is required"));
        }
        for r in &relations {
            if r.field() != field {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: r.field(),
                });
            }
            if r.min_arity() > m {
                return Err(Error::Arity {
                    expected: m,
                    found: r.min_arity(),
                });
            }
        }
        Ok(AlgebraPresentation { field, m, relations })
    }

    /// The free algebra on `m` generators.
    pub fn free(field: Field, m: usize) -> Result<Self> {
        Self::new(field, m, Vec::new())
    }

    /// `k[x1..xm]`, presented by the commutators `x_i x_j − x_j x_i`, `i < j`.
    pub fn polynomial_ring(field: Field, m: usize) -> Result<Self> {
        let mut rels = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let xi = NCPoly::generator(field, i);
                let xj = NCPoly::generator(field, j);
                rels.push(&(&xi * &xj) - &(&xj * &xi));
            }
        }
        Self::new(field, m, rels)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn relations(&self) -> &[NCPoly] {
        &self.relations
    }

    /// The same relations read over another field (integer coefficients are
    /// reduced; fails on a denominator divisible by the new characteristic).
    pub fn with_field(&self, field: Field) -> Result<Self> {
        if field == self.field {
            return Ok(self.clone());
        }
        let rels = self
            .relations
            .iter()
            .map(|r| NCPoly::parse(field, &r.to_string()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, self.m, rels)
    }

    /// True iff every commutator `x_i x_j − x_j x_i` lies in the linear span
    /// of the supplied relations (not the two-sided ideal they generate).
    pub fn is_commutative(&self) -> bool {
        let mut words: Vec<Word> = self
            .relations
            .iter()
            .flat_map(|r| r.terms().map(|(w, _)| w.clone()))
            .collect();
        for i in 0..self.m {
            for j in i + 1..self.m {
                words.push(Word::new(vec![i, j]));
                words.push(Word::new(vec![j, i]));
            }
        }
        words.sort();
        words.dedup();
        let to_row = |p: &NCPoly| -> Vec<Scalar> { words.iter().map(|w| p.coeff(w)).collect() };
        let mut rows: Vec<Vec<Scalar>> = self.relations.iter().map(to_row).collect();
        let base_rank = rref(self.field, &mut rows, words.len()).len();
        for i in 0..self.m {
            for j in i + 1..self.m {
                let xi = NCPoly::generator(self.field, i);
                let xj = NCPoly::generator(self.field, j);
                let c = &(&xi * &xj) - &(&xj * &xi);
                let mut ext = rows.clone();
                ext.push(to_row(&c));
                if rref(self.field, &mut ext, words.len()).len() != base_rank {
                    return false;
                }
            }
        }
        true
    }
}

/// Name of the generic-matrix indeterminate for entry `(i, j)` of matrix `k`
/// (all 0-based), printed 1-based: `xi_k_i_j`.
pub fn generic_var_name(k: usize, i: usize, j: usize) -> String {
    format!("xi_{}_{}_{}", k + 1, i + 1, j + 1)
}

/// The indeterminates `xi_k_i_j` in matrix-major, row-major order.
pub fn generic_vars(m: usize, n: usize) -> Vars {
    let names: Vec<String> = (0..m)
        .flat_map(|k| (0..n).flat_map(move |i| (0..n).map(move |j| generic_var_name(k, i, j))))
        .collect();
    vars(&names)
}

/// The `m` generic `n x n` matrices; entry `(i, j)` of matrix `k` is the
/// indeterminate `xi_k_i_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenericMatrixSystem {
    n: usize,
    vars: Vars,
    mats: Vec<Matrix<CommPoly>>,
}

impl GenericMatrixSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn matrices(&self) -> &[Matrix<CommPoly>] {
        &self.mats
    }

    /// Index of `xi_k_i_j` in [`Self::vars`].
    pub fn var_index(&self, k: usize, i: usize, j: usize) -> usize {
        k * self.n * self.n + i * self.n + j
    }
}

pub fn build_generic(pres: &AlgebraPresentation, n: usize) -> Result<GenericMatrixSystem> {
    if n == 0 {
        return Err(Error::precondition("dimension must be at least 1"));
    }
    let field = pres.field();
    let vs = generic_vars(pres.m(), n);
    let mats = (0..pres.m())
        .map(|k| {
            Matrix::from_vec(
                n,
                (0..n * n)
                    .map(|e| CommPoly::var(field, vs.clone(), k * n * n + e))
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GenericMatrixSystem { n, vars: vs, mats })
}

/// Generators of the ideal `I` with `Rep^n_A = Spec k[xi]/I`: the entries of
/// every relation evaluated at the generic matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepIdeal {
    pub(crate) field: Field,
    pub(crate) n: usize,
    pub(crate) m: usize,
    pub(crate) gens: Vec<CommPoly>,
}

impl RepIdeal {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn generators(&self) -> &[CommPoly] {
        &self.gens
    }

    /// Whether all generators vanish under `xi_k_i_j ↦ mats[k][i][j]`.
    pub fn vanishes_at(&self, mats: &[Matrix<Scalar>]) -> Result<bool> {
        check_point_shape(self.field, self.m, self.n, mats)?;
        let values: Vec<Scalar> = mats.iter().flat_map(|m| m.entries().iter().cloned()).collect();
        Ok(self.gens.iter().all(|g| g.eval(&values).is_zero()))
    }
}

/// Entries of the relations at the generic matrices, row-major per relation,
/// with zero polynomials dropped.
pub fn rep_ideal(pres: &AlgebraPresentation, n: usize) -> Result<RepIdeal> {
    let sys = build_generic(pres, n)?;
    let mut gens: Vec<CommPoly> = Vec::new();
    for r in pres.relations() {
        let val = nc_eval(r, sys.matrices())?;
        for g in val.entries() {
            if !g.is_zero() {
                gens.push(g.clone());
            }
        }
    }
    Ok(RepIdeal {
        field: pres.field(),
        n,
        m: pres.m(),
        gens,
    })
}

fn check_point_shape(field: Field, m: usize, n: usize, mats: &[Matrix<Scalar>]) -> Result<()> {
    if mats.len() != m {
        return Err(Error::Arity {
            expected: m,
            found: mats.len(),
        });
    }
    for a in mats {
        if a.n() != n {
            return Err(Error::Dimension {
                expected: n,
                found: a.n(),
            });
        }
        if a.field() != field {
            return Err(Error::FieldMismatch {
                left: field,
                right: a.field(),
            });
        }
    }
    Ok(())
}

/// An `m`-tuple of `n x n` matrices over the base field: a point of
/// `Rep^n_A` when it satisfies the relations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepPoint {
    mats: Vec<Matrix<Scalar>>,
}

impl RepPoint {
    pub fn new(mats: Vec<Matrix<Scalar>>) -> Result<Self> {
        let first = mats
            .first()
            .ok_or_else(|| Error::precondition("a point needs at least one matrix"))?;
        check_point_shape(first.field(), mats.len(), first.n(), &mats)?;
        Ok(RepPoint { mats })
    }

    pub fn n(&self) -> usize {
        self.mats[0].n()
    }

    pub fn m(&self) -> usize {
        self.mats.len()
    }

    pub fn field(&self) -> Field {
        self.mats[0].field()
    }

    pub fn matrices(&self) -> &[Matrix<Scalar>] {
        &self.mats
    }

    /// `ρ(a)` for an element of the free algebra.
    pub fn eval(&self, a: &NCPoly) -> Result<Matrix<Scalar>> {
        if a.min_arity() > self.m() {
            return Err(Error::Arity {
                expected: self.m(),
                found: a.min_arity(),
            });
        }
        nc_eval(a, &self.mats)
    }

    /// Entrywise reduction of a rational point modulo `p`.
    pub fn reduce_mod(&self, p: u64) -> Option<RepPoint> {
        let mats = self
            .mats
            .iter()
            .map(|m| m.try_map(|x| x.reduce_mod(p)))
            .collect::<Option<Vec<_>>>()?;
        Some(RepPoint { mats })
    }
}

/// True iff every relation of `pres` evaluates to the zero matrix.
pub fn is_representation(pres: &AlgebraPresentation, mats: &[Matrix<Scalar>]) -> Result<bool> {
    let n = mats.first().map_or(0, Matrix::n);
    check_point_shape(pres.field(), pres.m(), n, mats)?;
    for r in pres.relations() {
        if !nc_eval(r, mats)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `g · ρ · g⁻¹`, generator by generator.
pub fn conjugate(g: &Matrix<Scalar>, pt: &RepPoint) -> Result<RepPoint> {
    if g.n() != pt.n() {
        return Err(Error::Dimension {
            expected: pt.n(),
            found: g.n(),
        });
    }
    if g.field() != pt.field() {
        return Err(Error::FieldMismatch {
            left: pt.field(),
            right: g.field(),
        });
    }
    let g_inv = inverse(g)?;
    Ok(RepPoint {
        mats: pt.mats.iter().map(|a| g.times(a).times(&g_inv)).collect(),
    })
}

/// Trace coordinates of a point of `Rep^n_A // GL_n`: `tr ρ(w)` for all
/// words `1 <= |w| <= max_len` and `det ρ(x_k)` per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTable {
    pub(crate) field: Field,
    pub(crate) m: usize,
    pub(crate) max_len: usize,
    pub(crate) traces: BTreeMap<Word, Scalar>,
    pub(crate) dets: Vec<Scalar>,
}

impl InvariantTable {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn traces(&self) -> &BTreeMap<Word, Scalar> {
        &self.traces
    }

    pub fn trace(&self, w: &Word) -> Option<&Scalar> {
        self.traces.get(w)
    }

    pub fn generator_dets(&self) -> &[Scalar] {
        &self.dets
    }

    pub fn reduce_mod(&self, p: u64) -> Option<InvariantTable> {
        Some(InvariantTable {
            field: Field::prime(p).ok()?,
            m: self.m,
            max_len: self.max_len,
            traces: self
                .traces
                .iter()
                .map(|(w, t)| Some((w.clone(), t.reduce_mod(p)?)))
                .collect::<Option<_>>()?,
            dets: self.dets.iter().map(|d| d.reduce_mod(p)).collect::<Option<_>>()?,
        })
    }
}

/// The default word-length bound `2n − 1`.
pub fn default_max_len(n: usize) -> usize {
    2 * n - 1
}

pub fn invariant_table(pt: &RepPoint, max_len: usize) -> Result<InvariantTable> {
    if max_len == 0 {
        return Err(Error::precondition("max_len must be at least 1"));
    }
    let mut products = WordProducts::new(&pt.mats);
    let traces = Word::all_up_to(pt.m(), 1, max_len)
        .into_iter()
        .map(|w| {
            let t = products.product(&w).trace();
            (w, t)
        })
        .collect();
    Ok(InvariantTable {
        field: pt.field(),
        m: pt.m(),
        max_len,
        traces,
        dets: pt.mats.iter().map(det).collect(),
    })
}
