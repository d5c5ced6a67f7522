use std::fmt;

use super::field::{Field, Scalar};
use crate::error::{Error, Result};

/// The commutative coefficient rings matrices are built over: base-field
/// scalars and commutative polynomials.
///
/// Methods are named `plus`/`times`/... rather than after `std::ops` so the
/// two can coexist on the same type without method-resolution clashes.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn field(&self) -> Field;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn scale(&self, c: &Scalar) -> Self;
}

impl Ring for Scalar {
    fn field(&self) -> Field {
        Scalar::field(self)
    }
    fn zero_like(&self) -> Self {
        Scalar::field(self).zero()
    }
    fn one_like(&self) -> Self {
        Scalar::field(self).one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Scalar) -> Self {
        self * c
    }
}

/// A square `n x n` matrix, row-major, `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

pub type ScalarMatrix = Matrix<Scalar>;

impl<T: Ring> Matrix<T> {
    pub fn from_vec(n: usize, data: Vec<T>) -> Result<Self> {
        if n == 0 {
            return Err(Error::precondition("matrix dimension must be at least 1"));
        }
        if data.len() != n * n {
            return Err(Error::Dimension {
                expected: n * n,
                found: data.len(),
            });
        }
        let field = data[0].field();
        if let Some(bad) = data.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch {
                left: field,
                right: bad.field(),
            });
        }
        Ok(Matrix { n, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension {
                expected: n,
                found: r.len(),
            });
        }
        Self::from_vec(n, rows.into_iter().flatten().collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.data[0].field()
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn zero_like(&self) -> Self {
        let z = self.data[0].zero_like();
        Matrix {
            n: self.n,
            data: vec![z; self.n * self.n],
        }
    }

    pub fn identity_like(&self) -> Self {
        let mut m = self.zero_like();
        let one = self.data[0].one_like();
        for i in 0..self.n {
            m.set(i, i, one.clone());
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        Matrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        Matrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    pub fn times(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.get(i, 0).times(rhs.get(0, j));
                for k in 1..n {
                    let a = self.get(i, k);
                    let b = rhs.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.plus(&a.times(b));
                    }
                }
                data.push(acc);
            }
        }
        Matrix { n, data }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn scale_by(&self, c: &T) -> Self {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|a| a.times(c)).collect(),
        }
    }

    pub fn negate(&self) -> Self {
        Matrix {
            n: self.n,
            data: self.data.iter().map(Ring::negate).collect(),
        }
    }

    pub fn trace(&self) -> T {
        (1..self.n).fold(self.get(0, 0).clone(), |acc, i| acc.plus(self.get(i, i)))
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let data = (0..n * n).map(|k| self.get(k % n, k / n).clone()).collect();
        Matrix { n, data }
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.n, "vector dimension mismatch");
        (0..self.n)
            .map(|i| {
                let row = self.row(i);
                (1..self.n).fold(row[0].times(&v[0]), |acc, k| acc.plus(&row[k].times(&v[k])))
            })
            .collect()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(self.identity_like(), |acc, _| acc.times(self))
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U: Ring>(&self, f: impl Fn(&T) -> Option<U>) -> Option<Matrix<U>> {
        Some(Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect::<Option<_>>()?,
        })
    }
}

impl Matrix<Scalar> {
    pub fn zero(field: Field, n: usize) -> Self {
        Matrix {
            n,
            data: vec![field.zero(); n * n],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Matrix::zero(field, n).identity_like()
    }

    /// Convenience constructor from integer rows.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn diagonal(field: Field, diag: &[i64]) -> Self {
        let mut m = Matrix::zero(field, diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, field.from_i64(d));
        }
        m
    }
}

/// `[[a,b],[c,d]]`, row-major.
impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.data[i * self.n + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Formats a vector as `[a,b,c]`.
pub fn format_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_trace() {
        let q = Field::Rational;
        let a = Matrix::from_i64(q, &[&[1, 2], &[3, 4]]).unwrap();
        let b = Matrix::from_i64(q, &[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(a.times(&b), Matrix::from_i64(q, &[&[2, 1], &[4, 3]]).unwrap());
        assert_eq!(a.trace(), q.from_i64(5));
        assert_eq!(a.transpose().get(0, 1), &q.from_i64(3));
        assert_eq!(b.pow(2), Matrix::identity(q, 2));
        assert_eq!(a.to_string(), "[[1,2],[3,4]]");
    }

    #[test]
    fn construction_errors() {
        let q = Field::Rational;
        assert!(matches!(
            Matrix::from_vec(2, vec![q.one(); 3]),
            Err(Error::Dimension { .. })
        ));
        assert!(Matrix::<Scalar>::from_vec(0, vec![]).is_err());
        let mixed = vec![q.one(), Field::Prime(2).one(), q.one(), q.one()];
        assert!(matches!(
            Matrix::from_vec(2, mixed),
            Err(Error::FieldMismatch { .. })
        ));
    }
}
