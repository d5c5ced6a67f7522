//! The 0-cycle of a commuting representation, from joint generalized
//! eigenspaces over the base field.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactalg::charpoly::charpoly;
use crate::exactalg::linalg::{inverse, nullspace, rref};
use crate::exactalg::univariate::roots;
use crate::exactalg::{CommPoly, Field, Matrix, Scalar};
use crate::repscheme::{AlgebraPresentation, RepPoint};

/// Points of affine `m`-space with positive multiplicities summing to `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub(crate) field: Field,
    pub(crate) points: BTreeMap<Vec<Scalar>, usize>,
}

impl Cycle {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn points(&self) -> &BTreeMap<Vec<Scalar>, usize> {
        &self.points
    }

    pub fn degree(&self) -> usize {
        self.points.values().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleOutcome {
    Cycle(Cycle),
    /// The characteristic polynomial of `ρ(x_generator)` has a factor without
    /// roots in the base field.
    SplitFailure { generator: usize, charpoly: CommPoly },
}

pub fn cycle_extract(pres: &AlgebraPresentation, rep: &RepPoint) -> Result<CycleOutcome> {
    if !pres.is_commutative() {
        return Err(Error::precondition("presentation is not commutative"));
    }
    if pres.m() != rep.m() {
        return Err(Error::Arity {
            expected: pres.m(),
            found: rep.m(),
        });
    }
    if pres.field() != rep.field() {
        return Err(Error::FieldMismatch {
            left: pres.field(),
            right: rep.field(),
        });
    }
    let mats = rep.matrices();
    for (i, a) in mats.iter().enumerate() {
        for b in &mats[i + 1..] {
            if a.times(b) != b.times(a) {
                return Err(Error::precondition("matrices do not commute"));
            }
        }
    }
    let field = rep.field();
    let n = rep.n();
    // Every block charpoly divides the full one, so checking the full
    // charpolys up front means the recursion below always splits.
    for (k, a) in mats.iter().enumerate() {
        let cp = charpoly(a);
        let rs = roots(field, &cp.to_univariate().expect("univariate"));
        let total: usize = rs.iter().map(|l| generalized_eigenspace(a, l).len()).sum();
        if total < n {
            return Ok(CycleOutcome::SplitFailure {
                generator: k,
                charpoly: cp,
            });
        }
    }
    let mut points = BTreeMap::new();
    split(mats.to_vec(), 0, &mut Vec::new(), &mut points)?;
    Ok(CycleOutcome::Cycle(Cycle { field, points }))
}

/// Basis of `ker (A − λ)^n`.
fn generalized_eigenspace(a: &Matrix<Scalar>, lambda: &Scalar) -> Vec<Vec<Scalar>> {
    let n = a.n();
    let shifted = a.minus(&a.identity_like().scale(lambda));
    let p = shifted.pow(n as u32);
    let rows: Vec<Vec<Scalar>> = (0..n).map(|i| p.row(i).to_vec()).collect();
    nullspace(a.field(), &rows, n)
}

fn split(
    mats: Vec<Matrix<Scalar>>,
    k: usize,
    point: &mut Vec<Scalar>,
    out: &mut BTreeMap<Vec<Scalar>, usize>,
) -> Result<()> {
    let d = mats[0].n();
    if k == mats.len() {
        *out.entry(point.clone()).or_insert(0) += d;
        return Ok(());
    }
    let field = mats[0].field();
    let cp = charpoly(&mats[k]);
    let mut covered = 0;
    for lambda in roots(field, &cp.to_univariate().expect("univariate")) {
        let basis = generalized_eigenspace(&mats[k], &lambda);
        covered += basis.len();
        let restricted = restrict(&mats, &basis)?;
        point.push(lambda);
        split(restricted, k + 1, point, out)?;
        point.pop();
    }
    if covered != d {
        return Err(Error::Invariant("block charpoly does not split".into()));
    }
    Ok(())
}

/// Matrices of the `A_i` on the invariant subspace spanned by `basis`.
///
/// With `B` the matrix of basis columns, `A B = B R`. Restricting to a set of
/// rows on which `B` is invertible gives `R = B_S⁻¹ (A B)_S`.
fn restrict(mats: &[Matrix<Scalar>], basis: &[Vec<Scalar>]) -> Result<Vec<Matrix<Scalar>>> {
    let field = mats[0].field();
    let d = mats[0].n();
    let r = basis.len();
    let mut cols = basis.to_vec();
    let rows_s = rref(field, &mut cols, d);
    debug_assert_eq!(rows_s.len(), r);
    let b_s: Vec<Vec<Scalar>> = rows_s
        .iter()
        .map(|&i| basis.iter().map(|v| v[i].clone()).collect())
        .collect();
    let b_s = Matrix::from_rows(b_s)?;
    let b_s_inv = inverse(&b_s)?;
    mats.iter()
        .map(|a| {
            let ab: Vec<Vec<Scalar>> = basis.iter().map(|v| a.mul_vec(v)).collect();
            let ab_s = Matrix::from_rows(
                rows_s
                    .iter()
                    .map(|&i| ab.iter().map(|col| col[i].clone()).collect())
                    .collect(),
            )?;
            Ok(b_s_inv.times(&ab_s))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn k2() -> AlgebraPresentation {
        AlgebraPresentation::polynomial_ring(q(), 2).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| q().from_i64(x)).collect()
    }

    #[test]
    fn nilpotent_point_at_origin() {
        let x = Matrix::from_i64(q(), &[&[0, 1], &[0, 0]]).unwrap();
        let rep = RepPoint::new(vec![x, Matrix::zero(q(), 2)]).unwrap();
        let CycleOutcome::Cycle(c) = cycle_extract(&k2(), &rep).unwrap() else {
            panic!("expected a cycle");
        };
        assert_eq!(c.points().len(), 1);
        assert_eq!(c.points()[&ints(&[0, 0])], 2);
    }

    #[test]
    fn diagonal_points() {
        let rep = RepPoint::new(vec![Matrix::diagonal(q(), &[1, 2]), Matrix::diagonal(q(), &[3, 4])]).unwrap();
        let CycleOutcome::Cycle(c) = cycle_extract(&k2(), &rep).unwrap() else {
            panic!("expected a cycle");
        };
        assert_eq!(c.points()[&ints(&[1, 3])], 1);
        assert_eq!(c.points()[&ints(&[2, 4])], 1);
        assert_eq!(c.degree(), 2);
    }

    #[test]
    fn repeated_first_coordinate() {
        // x = diag(1,1,2), y separates the first block into two points.
        let x = Matrix::diagonal(q(), &[1, 1, 2]);
        let y = Matrix::from_i64(q(), &[&[0, 1, 0], &[0, 5, 0], &[0, 0, 7]]).unwrap();
        let rep = RepPoint::new(vec![x, y]).unwrap();
        let CycleOutcome::Cycle(c) = cycle_extract(&k2(), &rep).unwrap() else {
            panic!("expected a cycle");
        };
        let expect: BTreeMap<_, _> =
            [(ints(&[1, 0]), 1), (ints(&[1, 5]), 1), (ints(&[2, 7]), 1)].into_iter().collect();
        assert_eq!(c.points(), &expect);
    }

    #[test]
    fn irreducible_charpoly() {
        let pres = AlgebraPresentation::polynomial_ring(q(), 1).unwrap();
        let x = Matrix::from_i64(q(), &[&[0, -1], &[1, 0]]).unwrap();
        let out = cycle_extract(&pres, &RepPoint::new(vec![x]).unwrap()).unwrap();
        let CycleOutcome::SplitFailure { generator, charpoly } = out else {
            panic!("expected a split failure");
        };
        assert_eq!(generator, 0);
        assert_eq!(charpoly.to_string(), "t^2 + 1");
    }

    #[test]
    fn rejects_noncommuting_input() {
        let a = Matrix::from_i64(q(), &[&[0, 1], &[0, 0]]).unwrap();
        let b = a.transpose();
        let rep = RepPoint::new(vec![a, b]).unwrap();
        assert!(cycle_extract(&k2(), &rep).is_err());
        let free = AlgebraPresentation::free(q(), 2).unwrap();
        let diag = RepPoint::new(vec![Matrix::diagonal(q(), &[1, 2]); 2]).unwrap();
        assert!(cycle_extract(&free, &diag).is_err());
    }
}
