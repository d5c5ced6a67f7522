//! Polynomial text syntax shared by commutative, free and divided-power
//! expressions: integer or `a/b` coefficients, `*` products, `+`/`-`,
//! `^k` powers and `^[k]` divided powers.

use num_bigint::BigInt;

use super::field::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Expr {
    Num(BigInt),
    Ident(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    /// `e^[k]`; `k` may be negative (the generator is then zero).
    DividedPow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let lit: String = chars[start..i].iter().collect();
            out.push(Tok::Num(lit.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()[]".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::parse(format!("unexpected character `{c}` in `{s}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(format!("expected `{c}` at token {}", self.pos)))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.toks.get(self.pos) {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(n.clone())
            }
            _ => Err(Error::parse(format!("expected integer at token {}", self.pos))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let mut base = self.atom()?;
        while self.eat('^') {
            if self.eat('[') {
                let neg = self.eat('-');
                let k: i64 = i64::try_from(self.int()?)
                    .map_err(|_| Error::parse("divided power exponent too large"))?;
                self.expect(']')?;
                base = Expr::DividedPow(Box::new(base), if neg { -k } else { k });
            } else {
                let e: u32 = u32::try_from(self.int()?)
                    .map_err(|_| Error::parse("exponent too large"))?;
                base = Expr::Pow(Box::new(base), e);
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Ident(s))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Sym('-')) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            other => Err(Error::parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub(crate) fn parse_expr(s: &str) -> Result<Expr> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::parse("empty expression"));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::parse(format!("trailing input in `{s}`")));
    }
    Ok(e)
}

/// Parses a generator name `x<k>` (1-based) to a 0-based index.
pub(crate) fn generator_index(name: &str) -> Option<usize> {
    let k: usize = name.strip_prefix('x')?.parse().ok()?;
    (k >= 1).then(|| k - 1)
}

/// Joins `(coefficient, monomial)` pairs into `a*m1 - b*m2 + c`. An empty
/// monomial string denotes the constant term.
pub(crate) fn format_terms<'a>(terms: impl Iterator<Item = (&'a Scalar, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let neg = c.is_negative_rational();
        let abs = if neg { -c } else { c.clone() };
        let body = if mono.is_empty() {
            abs.to_string()
        } else if abs.is_one() {
            mono
        } else {
            format!("{abs}*{mono}")
        };
        match (out.is_empty(), neg) {
            (true, false) => out.push_str(&body),
            (true, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (false, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (false, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
