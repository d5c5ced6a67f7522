//! Field points of the non-commutative Hilbert scheme `Hilb^n_A`.
//!
//! A point is a pointed representation `(ρ, v)` with `v` cyclic, taken up to
//! simultaneous change of basis. A left ideal `I ⊂ A` of codimension `n` is
//! stored through its cyclic quotient `A/I`: a basis of words, the generator
//! actions on that basis, and the position of the class of `1`. Membership
//! `a ∈ I` is then the exact test `ρ(a)·[1] = 0`.

use crate::error::{Error, Result};
use crate::exactalg::linalg::{from_columns, inverse, rank, EchelonBasis};
use crate::exactalg::{nc_eval, Field, Matrix, NCPoly, Scalar, Word};
use crate::repscheme::{conjugate, is_representation, AlgebraPresentation, RepPoint};

/// A representation together with a vector `v ∈ k^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedRep {
    rep: RepPoint,
    v: Vec<Scalar>,
}

impl PointedRep {
    pub fn new(rep: RepPoint, v: Vec<Scalar>) -> Result<Self> {
        if v.len() != rep.n() {
            return Err(Error::Dimension {
                expected: rep.n(),
                found: v.len(),
            });
        }
        if let Some(x) = v.iter().find(|x| x.field() != rep.field()) {
            return Err(Error::FieldMismatch {
                left: rep.field(),
                right: x.field(),
            });
        }
        Ok(PointedRep { rep, v })
    }

    pub fn rep(&self) -> &RepPoint {
        &self.rep
    }

    pub fn vector(&self) -> &[Scalar] {
        &self.v
    }

    pub fn n(&self) -> usize {
        self.rep.n()
    }

    pub fn m(&self) -> usize {
        self.rep.m()
    }

    pub fn field(&self) -> Field {
        self.rep.field()
    }

    pub fn into_rep(self) -> RepPoint {
        self.rep
    }

    /// `g·(ρ, v) = (gρg⁻¹, gv)`.
    pub fn act(&self, g: &Matrix<Scalar>) -> Result<PointedRep> {
        let rep = conjugate(g, &self.rep)?;
        Ok(PointedRep {
            rep,
            v: g.mul_vec(&self.v),
        })
    }

    /// `ρ(w)·v`.
    pub fn word_vector(&self, w: &Word) -> Vec<Scalar> {
        let mats = self.rep.matrices();
        w.letters()
            .iter()
            .rev()
            .fold(self.v.clone(), |acc, &k| mats[k].mul_vec(&acc))
    }

    pub fn reduce_mod(&self, p: u64) -> Option<PointedRep> {
        Some(PointedRep {
            rep: self.rep.reduce_mod(p)?,
            v: self.v.iter().map(|x| x.reduce_mod(p)).collect::<Option<_>>()?,
        })
    }
}

/// Graded-lex-first words whose images `ρ(w)v` are linearly independent,
/// together with those images.
///
/// Only words `x_k·w` with `w` already selected can be new: if `ρ(w)v` lies in
/// the span of smaller words then so does `ρ(x_k w)v`. The search therefore
/// grows the span breadth-first and stops once a round adds nothing.
pub fn krylov_basis(pt: &PointedRep) -> (Vec<Word>, Vec<Vec<Scalar>>) {
    let n = pt.n();
    let mats = pt.rep.matrices();
    let mut basis = EchelonBasis::new(pt.field(), n);
    let mut words = Vec::new();
    let mut vecs = Vec::new();
    let mut frontier = vec![(Word::empty(), pt.v.clone())];
    while !frontier.is_empty() && !basis.is_full() {
        let mut next = Vec::new();
        for (w, x) in frontier {
            if basis.insert(&x) {
                for (k, a) in mats.iter().enumerate() {
                    next.push((w.prepend(k), a.mul_vec(&x)));
                }
                words.push(w);
                vecs.push(x);
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        frontier = next;
    }
    (words, vecs)
}

/// Dimension of `ρ(A)v`.
pub fn span_dimension(pt: &PointedRep) -> usize {
    krylov_basis(pt).0.len()
}

/// Whether `v` generates `k^n` as an `A`-module, i.e. `(ρ, v) ∈ U^n_A`.
pub fn is_cyclic(pt: &PointedRep) -> bool {
    span_dimension(pt) == pt.n()
}

fn require_cyclic(pt: &PointedRep) -> Result<(Vec<Word>, Vec<Vec<Scalar>>)> {
    let (words, vecs) = krylov_basis(pt);
    if words.len() < pt.n() {
        return Err(Error::NotCyclic {
            span_dim: words.len(),
            n: pt.n(),
        });
    }
    Ok((words, vecs))
}

/// A left ideal of codimension `n`, stored as its cyclic quotient module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealPresentation {
    pub(crate) field: Field,
    pub(crate) n: usize,
    pub(crate) basis: Vec<Word>,
    pub(crate) action: Vec<Matrix<Scalar>>,
    pub(crate) cyclic_index: usize,
}

impl IdealPresentation {
    /// Assembles a presentation without checking module consistency; see
    /// [`ideal_to_triple`] for the checks.
    pub fn new(basis: Vec<Word>, action: Vec<Matrix<Scalar>>, cyclic_index: usize) -> Result<Self> {
        let rep = RepPoint::new(action)?;
        if basis.len() != rep.n() {
            return Err(Error::Dimension {
                expected: rep.n(),
                found: basis.len(),
            });
        }
        if cyclic_index >= basis.len() {
            return Err(Error::precondition("cyclic index out of range"));
        }
        Ok(IdealPresentation {
            field: rep.field(),
            n: rep.n(),
            basis,
            action: rep.matrices().to_vec(),
            cyclic_index,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.action.len()
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn action(&self) -> &[Matrix<Scalar>] {
        &self.action
    }

    pub fn cyclic_index(&self) -> usize {
        self.cyclic_index
    }

    fn unit_vector(&self) -> Vec<Scalar> {
        (0..self.n)
            .map(|i| {
                if i == self.cyclic_index {
                    self.field.one()
                } else {
                    self.field.zero()
                }
            })
            .collect()
    }

    /// `a ∈ I`, decided in the quotient: the class of `a` is zero.
    pub fn contains(&self, a: &NCPoly) -> Result<bool> {
        if a.min_arity() > self.m() {
            return Err(Error::Arity {
                expected: self.m(),
                found: a.min_arity(),
            });
        }
        let img = nc_eval(a, &self.action)?.mul_vec(&self.unit_vector());
        Ok(img.iter().all(Scalar::is_zero))
    }
}

/// The left ideal `I = ker(a ↦ ρ(a)v)`, presented by its quotient.
pub fn triple_to_ideal(pt: &PointedRep) -> Result<IdealPresentation> {
    let (words, vecs) = require_cyclic(pt)?;
    let p = from_columns(&vecs)?;
    let p_inv = inverse(&p)?;
    let action = pt
        .rep
        .matrices()
        .iter()
        .map(|a| p_inv.times(a).times(&p))
        .collect();
    let cyclic_index = words
        .iter()
        .position(Word::is_empty)
        .expect("the empty word is selected first");
    Ok(IdealPresentation {
        field: pt.field(),
        n: pt.n(),
        basis: words,
        action,
        cyclic_index,
    })
}

/// `a ∈ I` where `I` is the ideal of `pt`: tests `ρ(a)v = 0`.
pub fn ideal_membership(ip: &IdealPresentation, a: &NCPoly, pt: &PointedRep) -> Result<bool> {
    if pt.m() != ip.m() {
        return Err(Error::Arity {
            expected: ip.m(),
            found: pt.m(),
        });
    }
    if pt.n() != ip.n() {
        return Err(Error::Dimension {
            expected: ip.n(),
            found: pt.n(),
        });
    }
    if a.min_arity() > ip.m() {
        return Err(Error::Arity {
            expected: ip.m(),
            found: a.min_arity(),
        });
    }
    let img = pt.rep.eval(a)?.mul_vec(&pt.v);
    Ok(img.iter().all(Scalar::is_zero))
}

/// The quotient `A/I` with its left-regular action and marked vector `[1]`.
///
/// Fails if the action matrices violate a relation of `pres`, or if the
/// basis words do not map `[1]` onto the corresponding basis vectors.
pub fn ideal_to_triple(pres: &AlgebraPresentation, ip: &IdealPresentation) -> Result<PointedRep> {
    if ip.m() != pres.m() {
        return Err(Error::Arity {
            expected: pres.m(),
            found: ip.m(),
        });
    }
    if !is_representation(pres, &ip.action)? {
        return Err(Error::precondition(
            "inconsistent action matrices: a relation does not act as zero",
        ));
    }
    if !ip.basis[ip.cyclic_index].is_empty() {
        return Err(Error::precondition("the cyclic basis element must be the word 1"));
    }
    let pt = PointedRep::new(RepPoint::new(ip.action.clone())?, ip.unit_vector())?;
    for (i, w) in ip.basis.iter().enumerate() {
        let img = pt.word_vector(w);
        let ok = img
            .iter()
            .enumerate()
            .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() });
        if !ok {
            return Err(Error::precondition(format!(
                "inconsistent action matrices: word {w} does not map 1 to basis vector {}",
                i + 1
            )));
        }
    }
    Ok(pt)
}

fn check_comparable(p1: &PointedRep, p2: &PointedRep) -> Result<()> {
    if p1.n() != p2.n() {
        return Err(Error::Dimension {
            expected: p1.n(),
            found: p2.n(),
        });
    }
    if p1.m() != p2.m() {
        return Err(Error::Arity {
            expected: p1.m(),
            found: p2.m(),
        });
    }
    if p1.field() != p2.field() {
        return Err(Error::FieldMismatch {
            left: p1.field(),
            right: p2.field(),
        });
    }
    Ok(())
}

/// The unique `g` with `g v1 = v2` and `g ρ1(x_k) g⁻¹ = ρ2(x_k)`, if any.
///
/// `g` is forced on the word basis of `p1`: it must send `ρ1(w)v1` to
/// `ρ2(w)v2`. The candidate is then checked against the intertwining
/// equations.
pub fn triples_equivalent(p1: &PointedRep, p2: &PointedRep) -> Result<Option<Matrix<Scalar>>> {
    check_comparable(p1, p2)?;
    let (words, vecs1) = require_cyclic(p1)?;
    let vecs2: Vec<Vec<Scalar>> = words.iter().map(|w| p2.word_vector(w)).collect();
    let p1_mat = from_columns(&vecs1)?;
    let p2_mat = from_columns(&vecs2)?;
    let g = p2_mat.times(&inverse(&p1_mat)?);
    if inverse(&g).is_err() {
        return Ok(None);
    }
    let intertwines = p1
        .rep
        .matrices()
        .iter()
        .zip(p2.rep.matrices())
        .all(|(a1, a2)| g.times(a1) == a2.times(&g));
    if intertwines && g.mul_vec(&p1.v) == p2.v {
        Ok(Some(g))
    } else {
        Ok(None)
    }
}

/// Whether the only `g` with `gρ(x_k) = ρ(x_k)g` and `gv = v` is the identity.
///
/// Solved as the homogeneous system for `h = g − I`: `hρ(x_k) − ρ(x_k)h = 0`,
/// `hv = 0` in `n²` unknowns; trivial iff its rank is `n²`.
pub fn stabilizer_is_trivial(pt: &PointedRep) -> Result<bool> {
    require_cyclic(pt)?;
    let n = pt.n();
    let field = pt.field();
    let unknown = |i: usize, j: usize| i * n + j;
    let mut rows = Vec::new();
    for a in pt.rep.matrices() {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![field.zero(); n * n];
                for l in 0..n {
                    // (hA)_ij = Σ_l h_il A_lj ; (Ah)_ij = Σ_l A_il h_lj
                    row[unknown(i, l)] = &row[unknown(i, l)] + a.get(l, j);
                    row[unknown(l, j)] = &row[unknown(l, j)] - a.get(i, l);
                }
                rows.push(row);
            }
        }
    }
    for i in 0..n {
        let mut row = vec![field.zero(); n * n];
        for j in 0..n {
            row[unknown(i, j)] = pt.v[j].clone();
        }
        rows.push(row);
    }
    Ok(rank(field, &rows, n * n) == n * n)
}
