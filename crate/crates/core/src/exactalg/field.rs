//! Base fields: the rationals and prime fields `F_p`.
//!
//! Every [`Scalar`] carries the field it lives in. Mixing scalars from
//! different fields in an arithmetic operation is a programming error and
//! panics; the public entry points of the crate validate fields up front and
//! report [`Error::FieldMismatch`] instead.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The base field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F {p}"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The prime field `F_p`. Primes are limited to `p < 2^32` so that
    /// products of representatives fit in a `u64`.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `Q`, `F 5`, `F5`, `F_5` or a bare prime `5`.
    pub fn parse(text: &str) -> Result<Field> {
        let t = text.trim();
        if t == "Q" || t == "QQ" {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix("GF")
            .or_else(|| t.strip_prefix('F'))
            .unwrap_or(t)
            .trim_start_matches(['_', ' '])
            .trim();
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::parse(format!("unknown field `{t}`")))?;
        Field::prime(p)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Mod {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Mod {
                    value: r.to_u64().expect("residue fits"),
                    modulus: p,
                }
            }
        }
    }

    /// `num / den` interpreted in this field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.from_bigint(num);
        let d = self.from_bigint(den);
        let inv = d.inv().ok_or(Error::DivisionByZero)?;
        Ok(&n * &inv)
    }

    /// Parses an integer or `a/b` literal (optionally signed).
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        let bad = || Error::parse(format!("bad scalar `{t}`"));
        match t.split_once('/') {
            Some((a, b)) => {
                let a: BigInt = a.trim().parse().map_err(|_| bad())?;
                let b: BigInt = b.trim().parse().map_err(|_| bad())?;
                self.from_ratio(&a, &b)
            }
            None => {
                let a: BigInt = t.parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&a))
            }
        }
    }

    /// All elements of a prime field in representative order. `None` for Q.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..p).map(move |value| Scalar::Mod { value, modulus: p })),
        }
    }
}

/// An exact element of `Q` or of `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    /// Canonical representative in `[0, modulus)`.
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Reduces a rational modulo `p`. Fails when `p` divides the denominator.
    /// Prime-field scalars are returned unchanged if already in `F_p`.
    pub fn reduce_mod(&self, p: u64) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => Field::Prime(p).from_ratio(r.numer(), r.denom()).ok(),
            Scalar::Mod { modulus, .. } if *modulus == p => Some(self.clone()),
            Scalar::Mod { .. } => None,
        }
    }

    /// True for rationals `< 0`; always false in `F_p`.
    pub(crate) fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_negative())
    }

    pub(crate) fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }

    fn check_same(&self, other: &Scalar) -> u64 {
        match (self, other) {
            (Scalar::Rat(_), Scalar::Rat(_)) => 0,
            (Scalar::Mod { modulus: p, .. }, Scalar::Mod { modulus: q, .. }) if p == q => *p,
            _ => panic!("field mismatch: {} vs {}", self.field(), other.field()),
        }
    }
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order on Q, representative order on F_p; scalars of different
/// fields are ordered by field.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                p.cmp(q).then(a.cmp(b))
            }
            _ => self.field().cmp(&other.field()),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let p = self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, .. }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: (a + b) % p,
                modulus: p,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let p = self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Mod { value: a, .. }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: (a + p - b) % p,
                modulus: p,
            },
            _ => unreachable!(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let p = self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, .. }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: a * b % p,
                modulus: p,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
