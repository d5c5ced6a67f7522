use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, Scalar};
use super::matrix::{Matrix, Ring};
use super::text::{self, Expr};
use super::word::Word;
use crate::error::{Error, Result};

/// An element of the free algebra `k{x1..xm}`: a finite linear combination
/// of words with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NCPoly {
    field: Field,
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero(field: Field) -> Self {
        NCPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::word(field, Word::empty())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, Word::empty())
    }

    pub fn word(field: Field, w: Word) -> Self {
        Self::monomial(field.one(), w)
    }

    pub fn generator(field: Field, k: usize) -> Self {
        Self::word(field, Word::generator(k))
    }

    pub fn monomial(c: Scalar, w: Word) -> Self {
        let mut p = NCPoly::zero(c.field());
        p.add_term(w, c);
        p
    }

    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = NCPoly::zero(field);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(self.field.zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    /// The word if this is exactly one word with coefficient 1.
    pub fn as_word(&self) -> Option<&Word> {
        match self.terms.iter().next() {
            Some((w, c)) if self.terms.len() == 1 && c.is_one() => Some(w),
            _ => None,
        }
    }

    /// Number of generators needed to evaluate: `1 + max index` over all words.
    pub fn min_arity(&self) -> usize {
        self.terms
            .keys()
            .filter_map(Word::max_letter)
            .max()
            .map_or(0, |k| k + 1)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        assert_eq!(c.field(), self.field, "field mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn scale(&self, c: &Scalar) -> Self {
        NCPoly::from_terms(self.field, self.terms.iter().map(|(w, a)| (w.clone(), a * c)))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(NCPoly::one(self.field), |acc, _| &acc * self)
    }

    pub fn reduce_mod(&self, p: u64) -> Option<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| Some((w.clone(), c.reduce_mod(p)?)))
            .collect::<Option<Vec<_>>>()?;
        Some(NCPoly::from_terms(Field::prime(p).ok()?, terms))
    }

    /// Parses the text form, e.g. `x1*x2 - x2*x1 + 1/2`.
    pub fn parse(field: Field, s: &str) -> Result<Self> {
        Self::from_expr(field, &text::parse_expr(s)?)
    }

    pub(crate) fn from_expr(field: Field, e: &Expr) -> Result<Self> {
        Ok(match e {
            Expr::Num(n) => NCPoly::constant(field.from_bigint(n)),
            Expr::Ident(name) => {
                let k = text::generator_index(name)
                    .ok_or_else(|| Error::parse(format!("unknown generator `{name}`")))?;
                NCPoly::generator(field, k)
            }
            Expr::Add(a, b) => &Self::from_expr(field, a)? + &Self::from_expr(field, b)?,
            Expr::Sub(a, b) => &Self::from_expr(field, a)? - &Self::from_expr(field, b)?,
            Expr::Mul(a, b) => &Self::from_expr(field, a)? * &Self::from_expr(field, b)?,
            Expr::Neg(a) => -&Self::from_expr(field, a)?,
            Expr::Div(a, b) => {
                let d = Self::from_expr(field, b)?
                    .as_constant()
                    .ok_or_else(|| Error::parse("division by a non-constant"))?;
                let inv = d.inv().ok_or(Error::DivisionByZero)?;
                Self::from_expr(field, a)?.scale(&inv)
            }
            Expr::Pow(a, k) => Self::from_expr(field, a)?.pow(*k),
            Expr::DividedPow(..) => {
                return Err(Error::parse("divided powers are not free-algebra elements"))
            }
        })
    }

    /// Evaluates at the given matrices; see [`nc_eval`].
    pub fn eval<T: Ring>(&self, mats: &[Matrix<T>]) -> Result<Matrix<T>> {
        nc_eval(self, mats)
    }
}

/// Substitutes `mats[k]` for `x_{k+1}` and returns `Σ c_w · mats(w)`; the empty
/// word contributes `c · I`.
pub fn nc_eval<T: Ring>(p: &NCPoly, mats: &[Matrix<T>]) -> Result<Matrix<T>> {
    let first = mats.first().ok_or(Error::Arity {
        expected: p.min_arity().max(1),
        found: 0,
    })?;
    let n = first.n();
    if let Some(m) = mats.iter().find(|m| m.n() != n) {
        return Err(Error::Dimension {
            expected: n,
            found: m.n(),
        });
    }
    if first.field() != p.field() {
        return Err(Error::FieldMismatch {
            left: p.field(),
            right: first.field(),
        });
    }
    if p.min_arity() > mats.len() {
        return Err(Error::Arity {
            expected: p.min_arity(),
            found: mats.len(),
        });
    }
    let mut cache = WordProducts::new(mats);
    let mut acc = first.zero_like();
    for (w, c) in p.terms() {
        acc = acc.plus(&cache.product(w).scale(c));
    }
    Ok(acc)
}

/// Memoised products `mats(w)` keyed by word, reusing cached prefixes.
pub(crate) struct WordProducts<'a, T> {
    mats: &'a [Matrix<T>],
    cache: HashMap<Word, Matrix<T>>,
}

impl<'a, T: Ring> WordProducts<'a, T> {
    pub(crate) fn new(mats: &'a [Matrix<T>]) -> Self {
        let mut cache = HashMap::new();
        cache.insert(Word::empty(), mats[0].identity_like());
        WordProducts { mats, cache }
    }

    pub(crate) fn product(&mut self, w: &Word) -> Matrix<T> {
        if let Some(m) = self.cache.get(w) {
            return m.clone();
        }
        let letters = w.letters();
        let prefix = Word::from(&letters[..letters.len() - 1]);
        let last = letters[letters.len() - 1];
        let m = self.product(&prefix).times(&self.mats[last]);
        self.cache.insert(w.clone(), m.clone());
        m
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        assert_eq!(self.field, rhs.field, "field mismatch");
        let mut out = NCPoly::zero(self.field);
        for (u, a) in self.terms() {
            for (v, b) in rhs.terms() {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly::from_terms(self.field, self.terms.iter().map(|(w, c)| (w.clone(), -c)))
    }
}

/// Terms in decreasing graded-lex order; the constant term prints last.
impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = text::format_terms(self.terms.iter().rev().map(|(w, c)| {
            let mono = if w.is_empty() { String::new() } else { w.to_string() };
            (c, mono)
        }));
        f.write_str(&s)
    }
}
