//! Divided-power expressions over the free algebra and their normal form.
//!
//! Generators are `m^[i]` with `m` an element of the free algebra. The normal
//! form is a linear combination of [`DividedMonomial`]s `×_w w^[α_w]` over
//! distinct basis words `w`, obtained with the defining relations:
//!
//! 1. `m^[i] = 0` for `i < 0`
//! 2. `m^[0] = 1`
//! 3. `(c·m)^[i] = c^i · m^[i]`
//! 4. `(m + m')^[k] = Σ_{i+j=k} m^[i] × m'^[j]`
//! 5. `m^[i] × m^[j] = C(i+j, i) · m^[i+j]`

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactalg::text::{self, Expr};
use crate::exactalg::{Field, NCPoly, Scalar, Word};

/// `×_w w^[α_w]` over distinct words, all `α_w >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DividedMonomial {
    factors: BTreeMap<Word, u32>,
}

impl DividedMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn power(w: Word, e: u32) -> Self {
        let mut factors = BTreeMap::new();
        if e > 0 {
            factors.insert(w, e);
        }
        DividedMonomial { factors }
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Word, u32)>) -> Self {
        DividedMonomial {
            factors: factors.into_iter().filter(|(_, e)| *e > 0).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.factors.values().sum()
    }

    pub fn factors(&self) -> &BTreeMap<Word, u32> {
        &self.factors
    }

    /// Product under relation 5: returns the scalar multiplier and the merged
    /// monomial.
    fn times(&self, other: &DividedMonomial, field: Field) -> (Scalar, DividedMonomial) {
        let mut coeff = field.one();
        let mut factors = self.factors.clone();
        for (w, &b) in &other.factors {
            let e = factors.entry(w.clone()).or_insert(0);
            let a = *e;
            if a > 0 {
                coeff = &coeff * &field.from_bigint(&binomial(a + b, a));
            }
            *e = a + b;
        }
        (coeff, DividedMonomial { factors })
    }
}

impl Ord for DividedMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.factors.iter().cmp(other.factors.iter()))
    }
}

impl PartialOrd for DividedMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn fmt_divided_word(w: &Word, e: u32) -> String {
    if w.len() == 1 {
        format!("{w}^[{e}]")
    } else {
        format!("({w})^[{e}]")
    }
}

/// e.g. `x1^[2]*(x1*x2)^[1]`; the empty monomial prints as `1`.
impl fmt::Display for DividedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.factors.iter().map(|(w, &e)| fmt_divided_word(w, e)).collect();
        f.write_str(&parts.join("*"))
    }
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// An unnormalised divided-power expression.
#[derive(Clone, Debug, PartialEq)]
pub enum DpExpr {
    Const(Scalar),
    /// `elem^[exp]`.
    Gen { elem: NCPoly, exp: i64 },
    Sum(Vec<DpExpr>),
    Product(Vec<DpExpr>),
    Scaled(Scalar, Box<DpExpr>),
}

impl DpExpr {
    pub fn gen(elem: NCPoly, exp: i64) -> Self {
        DpExpr::Gen { elem, exp }
    }

    /// Parses e.g. `x1^[1]*x1^[1]`, `(2*x1)^[3]` or `(x1 + x2)^[2]`. A bare
    /// generator `x1` stands for `x1^[1]`; `*` is the divided-power product.
    pub fn parse(field: Field, s: &str) -> Result<Self> {
        Self::from_expr(field, &text::parse_expr(s)?)
    }

    fn from_expr(field: Field, e: &Expr) -> Result<Self> {
        Ok(match e {
            Expr::Num(n) => DpExpr::Const(field.from_bigint(n)),
            Expr::Ident(_) => DpExpr::gen(NCPoly::from_expr(field, e)?, 1),
            Expr::DividedPow(inner, k) => DpExpr::gen(NCPoly::from_expr(field, inner)?, *k),
            Expr::Add(a, b) => DpExpr::Sum(vec![Self::from_expr(field, a)?, Self::from_expr(field, b)?]),
            Expr::Sub(a, b) => DpExpr::Sum(vec![
                Self::from_expr(field, a)?,
                DpExpr::Scaled(-field.one(), Box::new(Self::from_expr(field, b)?)),
            ]),
            Expr::Mul(a, b) => {
                DpExpr::Product(vec![Self::from_expr(field, a)?, Self::from_expr(field, b)?])
            }
            Expr::Neg(a) => DpExpr::Scaled(-field.one(), Box::new(Self::from_expr(field, a)?)),
            Expr::Div(a, b) => {
                let d = match Self::from_expr(field, b)? {
                    DpExpr::Const(c) => c,
                    _ => return Err(Error::parse("division by a non-constant")),
                };
                let inv = d.inv().ok_or(Error::DivisionByZero)?;
                DpExpr::Scaled(inv, Box::new(Self::from_expr(field, a)?))
            }
            Expr::Pow(a, k) => {
                let base = Self::from_expr(field, a)?;
                DpExpr::Product(vec![base; *k as usize])
            }
        })
    }
}

/// A linear combination of divided monomials (an element of `Γ(F)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpCombination {
    field: Field,
    terms: BTreeMap<DividedMonomial, Scalar>,
}

impl DpCombination {
    pub fn zero(field: Field) -> Self {
        DpCombination {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::monomial(field.one(), DividedMonomial::one())
    }

    pub fn monomial(c: Scalar, mon: DividedMonomial) -> Self {
        let mut out = Self::zero(c.field());
        out.add_term(mon, c);
        out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DividedMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mon: &DividedMonomial) -> Scalar {
        self.terms.get(mon).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, mon: DividedMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.remove(&mon) {
            Some(old) => &old + &c,
            None => c,
        };
        if !s.is_zero() {
            self.terms.insert(mon, s);
        }
    }

    pub fn plus(&self, other: &DpCombination) -> DpCombination {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> DpCombination {
        let mut out = Self::zero(self.field);
        for (m, a) in self.terms() {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    pub fn times(&self, other: &DpCombination) -> DpCombination {
        let mut out = Self::zero(self.field);
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                let (c, w) = u.times(v, self.field);
                out.add_term(w, &(a * b) * &c);
            }
        }
        out
    }
}

impl fmt::Display for DpCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = text::format_terms(self.terms.iter().rev().map(|(m, c)| {
            let mono = if m.factors.is_empty() { String::new() } else { m.to_string() };
            (c, mono)
        }));
        f.write_str(&s)
    }
}

/// `elem^[k]` expanded with relations 1–4: a sum over all ways of
/// distributing `k` among the words of `elem`.
fn expand_generator(elem: &NCPoly, k: i64) -> DpCombination {
    let field = elem.field();
    if k < 0 {
        return DpCombination::zero(field);
    }
    if k == 0 {
        return DpCombination::one(field);
    }
    let terms: Vec<(&Word, &Scalar)> = elem.terms().collect();
    let mut out = DpCombination::zero(field);
    let mut alloc = vec![0u32; terms.len()];
    distribute(&terms, k as u32, 0, &mut alloc, &mut out);
    out
}

fn distribute(
    terms: &[(&Word, &Scalar)],
    left: u32,
    idx: usize,
    alloc: &mut Vec<u32>,
    out: &mut DpCombination,
) {
    if idx == terms.len() {
        if left == 0 {
            let coeff = terms
                .iter()
                .zip(alloc.iter())
                .fold(out.field.one(), |acc, ((_, c), &a)| &acc * &c.pow(u64::from(a)));
            let mon = DividedMonomial::from_factors(
                terms.iter().zip(alloc.iter()).map(|((w, _), &a)| ((*w).clone(), a)),
            );
            out.add_term(mon, coeff);
        }
        return;
    }
    for a in 0..=left {
        alloc[idx] = a;
        distribute(terms, left - a, idx + 1, alloc, out);
    }
    alloc[idx] = 0;
}

/// Normal form of a divided-power expression.
pub fn dp_normalize(expr: &DpExpr) -> DpCombination {
    match expr {
        DpExpr::Const(c) => DpCombination::monomial(c.clone(), DividedMonomial::one()),
        DpExpr::Gen { elem, exp } => expand_generator(elem, *exp),
        DpExpr::Sum(parts) => {
            let field = field_of(expr);
            parts
                .iter()
                .fold(DpCombination::zero(field), |acc, p| acc.plus(&dp_normalize(p)))
        }
        DpExpr::Product(parts) => {
            let field = field_of(expr);
            parts
                .iter()
                .fold(DpCombination::one(field), |acc, p| acc.times(&dp_normalize(p)))
        }
        DpExpr::Scaled(c, inner) => dp_normalize(inner).scale(c),
    }
}

fn field_of(expr: &DpExpr) -> Field {
    match expr {
        DpExpr::Const(c) | DpExpr::Scaled(c, _) => c.field(),
        DpExpr::Gen { elem, .. } => elem.field(),
        DpExpr::Sum(p) | DpExpr::Product(p) => p.first().map_or(Field::Rational, field_of),
    }
}
