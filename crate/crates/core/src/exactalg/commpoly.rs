use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::{Field, Scalar};
use super::matrix::Ring;
use super::text::{self, Expr};
use crate::error::{Error, Result};

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then lexicographic with the first variable largest).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered list of indeterminate names shared by polynomials of one ring.
pub type Vars = Arc<[String]>;

pub fn vars<S: AsRef<str>>(names: &[S]) -> Vars {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

/// A sparse commutative polynomial over a base field in named indeterminates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CommPoly {
    field: Field,
    vars: Vars,
    terms: BTreeMap<Monomial, Scalar>,
}

impl CommPoly {
    pub fn zero(field: Field, vars: Vars) -> Self {
        CommPoly {
            field,
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar, vars: Vars) -> Self {
        let nv = vars.len();
        let mut p = CommPoly::zero(c.field(), vars);
        p.add_term(Monomial(vec![0; nv]), c);
        p
    }

    pub fn var(field: Field, vars: Vars, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = CommPoly::zero(field, vars);
        p.add_term(Monomial(e), field.one());
        p
    }

    /// `Σ coeffs[i] · t^i` in the single variable `var`.
    pub fn univariate(field: Field, var: &str, coeffs: &[Scalar]) -> Self {
        let mut p = CommPoly::zero(field, vars(&[var]));
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial(vec![i as u32]), c.clone());
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        assert_eq!(c.field(), self.field, "field mismatch");
        assert_eq!(m.0.len(), self.vars.len(), "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Coefficients low-to-high if the ring has exactly one variable.
    pub fn to_univariate(&self) -> Option<Vec<Scalar>> {
        if self.vars.len() != 1 {
            return None;
        }
        let deg = self.total_degree().unwrap_or(0) as usize;
        let mut out = vec![self.field.zero(); deg + 1];
        for (m, c) in self.terms() {
            out[m.0[0] as usize] = c.clone();
        }
        Some(out)
    }

    /// Substitutes `values[i]` for the `i`-th variable.
    pub fn eval(&self, values: &[Scalar]) -> Scalar {
        assert_eq!(values.len(), self.vars.len(), "wrong number of values");
        let mut acc = self.field.zero();
        for (m, c) in self.terms() {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &v.pow(u64::from(e));
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(CommPoly::constant(self.field.one(), self.vars.clone()), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = CommPoly::zero(self.field, self.vars.clone());
        for (m, a) in self.terms() {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    /// Coefficientwise reduction modulo `p`; `None` if a denominator is
    /// divisible by `p`.
    pub fn reduce_mod(&self, p: u64) -> Option<Self> {
        let mut out = CommPoly::zero(Field::prime(p).ok()?, self.vars.clone());
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c.reduce_mod(p)?);
        }
        Some(out)
    }

    /// Parses text such as `t^2 - 3*t + 2` in the given variables.
    pub fn parse(field: Field, vars: Vars, s: &str) -> Result<Self> {
        Self::from_expr(field, &vars, &text::parse_expr(s)?)
    }

    fn from_expr(field: Field, vars: &Vars, e: &Expr) -> Result<Self> {
        Ok(match e {
            Expr::Num(n) => CommPoly::constant(field.from_bigint(n), vars.clone()),
            Expr::Ident(name) => {
                let i = vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| Error::parse(format!("unknown variable `{name}`")))?;
                CommPoly::var(field, vars.clone(), i)
            }
            Expr::Add(a, b) => &Self::from_expr(field, vars, a)? + &Self::from_expr(field, vars, b)?,
            Expr::Sub(a, b) => &Self::from_expr(field, vars, a)? - &Self::from_expr(field, vars, b)?,
            Expr::Mul(a, b) => &Self::from_expr(field, vars, a)? * &Self::from_expr(field, vars, b)?,
            Expr::Neg(a) => -&Self::from_expr(field, vars, a)?,
            Expr::Div(a, b) => {
                let d = Self::from_expr(field, vars, b)?;
                let c = match d.terms.len() {
                    0 => field.zero(),
                    1 if d.total_degree() == Some(0) => d.terms.values().next().unwrap().clone(),
                    _ => return Err(Error::parse("division by a non-constant")),
                };
                let inv = c.inv().ok_or(Error::DivisionByZero)?;
                Self::from_expr(field, vars, a)?.scale(&inv)
            }
            Expr::Pow(a, k) => Self::from_expr(field, vars, a)?.pow(*k),
            Expr::DividedPow(..) => return Err(Error::parse("unexpected divided power")),
        })
    }

    fn assert_same_ring(&self, other: &CommPoly) {
        assert_eq!(self.field, other.field, "field mismatch");
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials in different variable sets"
        );
    }

    fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = self
            .vars
            .iter()
            .zip(&m.0)
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        parts.join("*")
    }
}

impl Add for &CommPoly {
    type Output = CommPoly;
    fn add(self, rhs: &CommPoly) -> CommPoly {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &CommPoly {
    type Output = CommPoly;
    fn sub(self, rhs: &CommPoly) -> CommPoly {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &CommPoly {
    type Output = CommPoly;
    fn mul(self, rhs: &CommPoly) -> CommPoly {
        self.assert_same_ring(rhs);
        let mut out = CommPoly::zero(self.field, self.vars.clone());
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                let e = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
                out.add_term(Monomial(e), ca * cb);
            }
        }
        out
    }
}

impl Neg for &CommPoly {
    type Output = CommPoly;
    fn neg(self) -> CommPoly {
        self.scale(&-self.field.one())
    }
}

impl Ring for CommPoly {
    fn field(&self) -> Field {
        self.field
    }
    fn zero_like(&self) -> Self {
        CommPoly::zero(self.field, self.vars.clone())
    }
    fn one_like(&self) -> Self {
        CommPoly::constant(self.field.one(), self.vars.clone())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
        CommPoly::scale(self, c)
    }
}

/// Terms in decreasing graded-lex order.
impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = text::format_terms(
            self.terms
                .iter()
                .rev()
                .map(|(m, c)| (c, self.format_monomial(m))),
        );
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_printing() {
        let v = vars(&["s", "t"]);
        let p = CommPoly::parse(Field::Rational, v.clone(), "2*t^2 + s^2 + 3*s*t").unwrap();
        assert_eq!(p.to_string(), "s^2 + 3*s*t + 2*t^2");
        assert!(p.is_homogeneous(2));
        assert_eq!(CommPoly::parse(Field::Rational, v, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn univariate_roundtrip() {
        let q = Field::Rational;
        let c = [q.from_i64(2), q.from_i64(-3), q.one()];
        let p = CommPoly::univariate(q, "t", &c);
        assert_eq!(p.to_string(), "t^2 - 3*t + 2");
        assert_eq!(p.to_univariate().unwrap(), c.to_vec());
        assert_eq!(p.eval(&[q.from_i64(2)]), q.zero());
    }

    #[test]
    fn unknown_variable_rejected() {
        assert!(CommPoly::parse(Field::Rational, vars(&["t"]), "u + 1").is_err());
    }

    #[test]
    fn arithmetic_cancels() {
        let v = vars(&["a", "b"]);
        let f = Field::Prime(3);
        let a = CommPoly::var(f, v.clone(), 0);
        let b = CommPoly::var(f, v, 1);
        let sq = (&a + &b).pow(3);
        // Frobenius in characteristic 3.
        assert_eq!(sq, &a.pow(3) + &b.pow(3));
    }
}
