//! Symmetric tensors `TSⁿ` of the free algebra in the orbit-sum basis.
//!
//! A basis element is keyed by a sorted multiset of `n` words and stands for
//! the sum of all distinct tensor words obtained by permuting it.

use std::collections::BTreeMap;
use std::fmt;

use super::divided::{DividedMonomial, DpCombination};
use crate::error::{Error, Result};
use crate::exactalg::text;
use crate::exactalg::{Field, NCPoly, Scalar, Word};

/// Sorted multiset of words; the key of an orbit-sum basis element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WordMultiset(Vec<Word>);

impl WordMultiset {
    pub fn new(mut words: Vec<Word>) -> Self {
        words.sort();
        WordMultiset(words)
    }

    pub fn words(&self) -> &[Word] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All distinct orderings of the multiset.
    pub fn orbit(&self) -> Vec<Vec<Word>> {
        let mut cur = self.0.clone();
        let mut out = vec![cur.clone()];
        while next_permutation(&mut cur) {
            out.push(cur.clone());
        }
        out
    }
}

fn next_permutation(v: &mut [Word]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// `{x1,x1*x2}`; the empty multiset prints as `{}`.
impl fmt::Display for WordMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Word::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymTensor {
    field: Field,
    n: usize,
    terms: BTreeMap<WordMultiset, Scalar>,
}

impl SymTensor {
    pub fn zero(field: Field, n: usize) -> Self {
        SymTensor {
            field,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WordMultiset, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &WordMultiset) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, key: WordMultiset, c: Scalar) -> Result<()> {
        if key.len() != self.n {
            return Err(Error::Degree {
                expected: self.n,
                found: key.len(),
            });
        }
        if c.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: c.field(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let s = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !s.is_zero() {
            self.terms.insert(key, s);
        }
        Ok(())
    }

    pub fn plus(&self, other: &SymTensor) -> Result<SymTensor> {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> SymTensor {
        let mut out = SymTensor::zero(self.field, self.n);
        for (k, a) in self.terms() {
            let v = a * c;
            if !v.is_zero() {
                out.terms.insert(k.clone(), v);
            }
        }
        out
    }

    pub fn reduce_mod(&self, p: u64) -> Option<SymTensor> {
        let mut out = SymTensor::zero(Field::prime(p).ok()?, self.n);
        for (k, c) in self.terms() {
            out.add_term(k.clone(), c.reduce_mod(p)?).ok()?;
        }
        Some(out)
    }
}

impl fmt::Display for SymTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_terms(self.terms.iter().map(|(k, c)| (c, k.to_string()))))
    }
}

/// `τₙ` on one divided monomial.
pub fn tau(mon: &DividedMonomial, field: Field, n: usize) -> Result<SymTensor> {
    if mon.degree() as usize != n {
        return Err(Error::Degree {
            expected: n,
            found: mon.degree() as usize,
        });
    }
    let words = mon
        .factors()
        .iter()
        .flat_map(|(w, &e)| std::iter::repeat_n(w.clone(), e as usize))
        .collect();
    let mut out = SymTensor::zero(field, n);
    out.add_term(WordMultiset::new(words), field.one())?;
    Ok(out)
}

/// `τₙ` extended linearly to a normal-form combination.
pub fn tau_combination(c: &DpCombination, n: usize) -> Result<SymTensor> {
    let mut out = SymTensor::zero(c.field(), n);
    for (mon, a) in c.terms() {
        out = out.plus(&tau(mon, c.field(), n)?.scale(a))?;
    }
    Ok(out)
}

/// `γⁿ(a) = a⊗…⊗a` in the orbit-sum basis: the multiset with multiplicities
/// `α_w` gets coefficient `Π c_w^{α_w}`.
pub fn gamma_n(a: &NCPoly, n: usize) -> SymTensor {
    let field = a.field();
    let terms: Vec<(&Word, &Scalar)> = a.terms().collect();
    let mut out = SymTensor::zero(field, n);
    let mut chosen = Vec::with_capacity(n);
    choose_multisets(&terms, 0, n, field.one(), &mut chosen, &mut out);
    out
}

fn choose_multisets(
    terms: &[(&Word, &Scalar)],
    start: usize,
    left: usize,
    coeff: Scalar,
    chosen: &mut Vec<Word>,
    out: &mut SymTensor,
) {
    if left == 0 {
        out.add_term(WordMultiset::new(chosen.clone()), coeff)
            .expect("degree and field are consistent");
        return;
    }
    for i in start..terms.len() {
        chosen.push(terms[i].0.clone());
        choose_multisets(terms, i, left - 1, &coeff * terms[i].1, chosen, out);
        chosen.pop();
    }
}

/// Product in `TSⁿ ⊂ A^{⊗n}`: slotwise concatenation of tensor words, read
/// back in the orbit-sum basis through the coefficient of each sorted tuple.
pub fn ts_mul(s: &SymTensor, t: &SymTensor) -> Result<SymTensor> {
    if s.n != t.n {
        return Err(Error::Degree {
            expected: s.n,
            found: t.n,
        });
    }
    if s.field != t.field {
        return Err(Error::FieldMismatch {
            left: s.field,
            right: t.field,
        });
    }
    let mut out = SymTensor::zero(s.field, s.n);
    for (ks, a) in s.terms() {
        let orbit_s = ks.orbit();
        for (kt, b) in t.terms() {
            let ab = a * b;
            let orbit_t = kt.orbit();
            for x in &orbit_s {
                for y in &orbit_t {
                    let prod: Vec<Word> = x.iter().zip(y).map(|(u, v)| u.concat(v)).collect();
                    if prod.windows(2).all(|w| w[0] <= w[1]) {
                        out.add_term(WordMultiset(prod), ab.clone())?;
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normmap::divided::{dp_normalize, DpExpr};

    fn q() -> Field {
        Field::Rational
    }

    fn poly(s: &str) -> NCPoly {
        NCPoly::parse(q(), s).unwrap()
    }

    fn ms(words: &[&str]) -> WordMultiset {
        WordMultiset::new(words.iter().map(|s| poly(s).as_word().unwrap().clone()).collect())
    }

    #[test]
    fn tau_examples() {
        let c = dp_normalize(&DpExpr::parse(q(), "x1^[2]").unwrap());
        let t = tau_combination(&c, 2).unwrap();
        assert_eq!(t.to_string(), "{x1,x1}");
        let c = dp_normalize(&DpExpr::parse(q(), "x1^[1]*x2^[1]").unwrap());
        assert_eq!(tau_combination(&c, 2).unwrap().coeff(&ms(&["x1", "x2"])), q().one());
        let c = dp_normalize(&DpExpr::parse(q(), "x1^[1]*x1^[1]").unwrap());
        assert_eq!(tau_combination(&c, 2).unwrap().to_string(), "2*{x1,x1}");
        assert!(matches!(tau_combination(&c, 3), Err(Error::Degree { .. })));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_n(&poly("x1"), 2).to_string(), "{x1,x1}");
        let g = gamma_n(&poly("x1 + x2"), 2);
        assert_eq!(g.num_terms(), 3);
        for k in [ms(&["x1", "x1"]), ms(&["x1", "x2"]), ms(&["x2", "x2"])] {
            assert_eq!(g.coeff(&k), q().one());
        }
        assert_eq!(gamma_n(&poly("2*x1"), 2).coeff(&ms(&["x1", "x1"])), q().from_i64(4));
        let g0 = gamma_n(&poly("x1 + 3"), 0);
        assert_eq!(g0.coeff(&WordMultiset::new(vec![])), q().one());
    }

    #[test]
    fn multiplicativity_and_unit() {
        let gx = gamma_n(&poly("x1"), 2);
        let gy = gamma_n(&poly("x2"), 2);
        assert_eq!(ts_mul(&gx, &gy).unwrap(), gamma_n(&poly("x1*x2"), 2));
        let s = gamma_n(&poly("x1 + 2*x2*x1 - 1"), 2);
        assert_eq!(ts_mul(&gamma_n(&poly("1"), 2), &s).unwrap(), s);
        let a = poly("x1 + x2");
        let b = poly("x1 - x1*x2");
        assert_eq!(
            ts_mul(&gamma_n(&a, 3), &gamma_n(&b, 3)).unwrap(),
            gamma_n(&(&a * &b), 3)
        );
    }

    #[test]
    fn square_of_mixed_orbit() {
        // (x⊗y + y⊗x)² = x²⊗y² + xy⊗yx + yx⊗xy + y²⊗x²
        let mut s = SymTensor::zero(q(), 2);
        s.add_term(ms(&["x1", "x2"]), q().one()).unwrap();
        let sq = ts_mul(&s, &s).unwrap();
        assert_eq!(sq.num_terms(), 2);
        assert_eq!(sq.coeff(&ms(&["x1^2", "x2^2"])), q().one());
        assert_eq!(sq.coeff(&ms(&["x1*x2", "x2*x1"])), q().one());
    }

    #[test]
    fn degree_mismatch() {
        let a = gamma_n(&poly("x1"), 2);
        let b = gamma_n(&poly("x1"), 3);
        assert!(matches!(ts_mul(&a, &b), Err(Error::Degree { .. })));
    }
}
