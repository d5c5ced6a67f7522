//! Exact linear algebra over the base field (Gauss-Jordan elimination).

use super::field::{Field, Scalar};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Reduced row echelon form, in place. Pivots are searched in the first
/// `ncols` columns; any further columns (an augmented block) are carried
/// along. Returns the pivot columns.
pub fn rref(field: Field, rows: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..rows[r].len() {
                    if !rows[r][j].is_zero() {
                        let d = &f * &rows[r][j];
                        rows[i][j] = &rows[i][j] - &d;
                    }
                }
            }
        }
        debug_assert!(rows[r][c] == field.one());
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(field: Field, rows: &[Vec<Scalar>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m, ncols).len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows with `ncols` columns.
pub fn nullspace(field: Field, rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![field.zero(); ncols];
            x[f] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -&m[r][f];
            }
            x
        })
        .collect()
}

pub fn inverse(a: &Matrix<Scalar>) -> Result<Matrix<Scalar>> {
    let n = a.n();
    let field = a.field();
    let mut rows: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let pivots = rref(field, &mut rows, n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Matrix::from_vec(n, rows.into_iter().flat_map(|r| r[n..].to_vec()).collect())
}

/// Matrix whose columns are the given vectors.
pub fn from_columns(cols: &[Vec<Scalar>]) -> Result<Matrix<Scalar>> {
    let n = cols.len();
    if let Some(c) = cols.iter().find(|c| c.len() != n) {
        return Err(Error::Dimension {
            expected: n,
            found: c.len(),
        });
    }
    Matrix::from_vec(
        n,
        (0..n * n).map(|k| cols[k % n][k / n].clone()).collect(),
    )
}

/// Incrementally maintained echelon basis of a subspace of `F^dim`.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    dim: usize,
    /// Normalised rows, each with a leading 1 at `pivot`.
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl EchelonBasis {
    pub fn new(field: Field, dim: usize) -> Self {
        EchelonBasis {
            field,
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x = &*x - &(&f * r);
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v` if independent of the current basis; returns whether it was added.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim, "vector dimension");
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut() {
            *x = &*x * &inv;
        }
        debug_assert!(r[p] == self.field.one());
        self.rows.push((p, r));
        true
    }
}
