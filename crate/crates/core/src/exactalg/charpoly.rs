//! Division-free characteristic polynomials and determinants (Berkowitz).
//!
//! Only ring operations are used, so the same code runs over `F_p` for any
//! `p` and over polynomial matrices.

use super::commpoly::{vars as make_vars, CommPoly};
use super::field::Scalar;
use super::matrix::{Matrix, Ring};
use crate::error::{Error, Result};

/// Coefficients of `det(t·I − M)`, highest degree first (`[1, c1, ..., cn]`).
pub fn berkowitz<T: Ring>(m: &Matrix<T>) -> Vec<T> {
    let n = m.n();
    let one = m.get(0, 0).one_like();
    let zero = m.get(0, 0).zero_like();
    let mut poly = vec![one.clone()];
    for r in 0..n {
        // Leading r x r block A, row R = m[r][..r], column C = m[..r][r].
        let a = m.get(r, r);
        let mut col: Vec<T> = (0..r).map(|i| m.get(i, r).clone()).collect();
        let mut q = Vec::with_capacity(r + 2);
        q.push(one.clone());
        q.push(a.negate());
        for _ in 0..r {
            // -R A^k C
            let rc = (0..r).fold(zero.clone(), |acc, j| acc.plus(&m.get(r, j).times(&col[j])));
            q.push(rc.negate());
            col = (0..r)
                .map(|i| (0..r).fold(zero.clone(), |acc, j| acc.plus(&m.get(i, j).times(&col[j]))))
                .collect();
        }
        // Lower-triangular Toeplitz product: next[i] = Σ_j q[i-j] · poly[j].
        let next = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(zero.clone(), |acc, j| {
                    if poly[j].is_zero() || q[i - j].is_zero() {
                        acc
                    } else {
                        acc.plus(&q[i - j].times(&poly[j]))
                    }
                })
            })
            .collect();
        poly = next;
    }
    poly
}

/// `det(M)`, computed as `(−1)^n · p(0)` from the Berkowitz coefficients.
pub fn det<T: Ring>(m: &Matrix<T>) -> T {
    let c = berkowitz(m).pop().expect("nonempty");
    if m.n() % 2 == 1 {
        c.negate()
    } else {
        c
    }
}

/// `det(t·I − M)` as a univariate polynomial in `t`.
pub fn charpoly(m: &Matrix<Scalar>) -> CommPoly {
    charpoly_in(m, "t")
}

pub fn charpoly_in(m: &Matrix<Scalar>, var: &str) -> CommPoly {
    let mut coeffs = berkowitz(m);
    coeffs.reverse();
    CommPoly::univariate(m.field(), var, &coeffs)
}

/// `det(Σ_s t_s · mats[s])`, homogeneous of degree `n` in the `t_s`.
pub fn det_linear_combination<S: AsRef<str>>(mats: &[Matrix<Scalar>], vars: &[S]) -> Result<CommPoly> {
    let first = mats.first().ok_or(Error::Arity {
        expected: 1,
        found: 0,
    })?;
    if mats.len() != vars.len() {
        return Err(Error::Arity {
            expected: mats.len(),
            found: vars.len(),
        });
    }
    let n = first.n();
    let field = first.field();
    if let Some(m) = mats.iter().find(|m| m.n() != n) {
        return Err(Error::Dimension {
            expected: n,
            found: m.n(),
        });
    }
    if let Some(m) = mats.iter().find(|m| m.field() != field) {
        return Err(Error::FieldMismatch {
            left: field,
            right: m.field(),
        });
    }
    let vs = make_vars(vars);
    let mut combo = Matrix::from_vec(n, vec![CommPoly::zero(field, vs.clone()); n * n])?;
    for (s, m) in mats.iter().enumerate() {
        let t = CommPoly::var(field, vs.clone(), s);
        combo = combo.plus(&m.map(|x| t.scale(x)));
    }
    Ok(det(&combo))
}
