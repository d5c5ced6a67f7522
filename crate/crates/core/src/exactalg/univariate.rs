//! Roots of univariate polynomials in the base field.
//!
//! Coefficient vectors are low-to-high. Over `Q` candidates come from the
//! rational root test; over `F_p` small fields are searched exhaustively and
//! larger ones use `gcd(f, t^p − t)` followed by equal-degree splitting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Scalar};

const BRUTE_FORCE_LIMIT: u64 = 4096;

fn trim(mut v: Vec<Scalar>) -> Vec<Scalar> {
    while v.len() > 1 && v.last().is_some_and(Scalar::is_zero) {
        v.pop();
    }
    v
}

fn degree(v: &[Scalar]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

pub fn eval(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let field = x.field();
    coeffs
        .iter()
        .rev()
        .fold(field.zero(), |acc, c| &(&acc * x) + c)
}

/// Distinct roots lying in the base field, sorted.
pub fn roots(field: Field, coeffs: &[Scalar]) -> Vec<Scalar> {
    let coeffs = trim(coeffs.to_vec());
    let Some(d) = degree(&coeffs) else {
        return Vec::new();
    };
    if d == 0 {
        return Vec::new();
    }
    let mut out = match field {
        Field::Rational => rational_roots(&coeffs),
        Field::Prime(p) if p <= BRUTE_FORCE_LIMIT => field
            .elements()
            .expect("prime field")
            .filter(|x| eval(&coeffs, x).is_zero())
            .collect(),
        Field::Prime(p) => prime_field_roots(p, &coeffs),
    };
    out.sort();
    out.dedup();
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let e = &n / &d;
            if e != d {
                large.push(e);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn rational_roots(coeffs: &[Scalar]) -> Vec<Scalar> {
    let q = Field::Rational;
    let lcm = coeffs
        .iter()
        .filter_map(|c| c.as_rational())
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| {
            let r = c.as_rational().expect("rational");
            r.numer() * (&lcm / r.denom())
        })
        .collect();
    let mut out = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero poly");
    if low > 0 {
        out.push(q.zero());
    }
    let a0 = &ints[low];
    let an = ints.last().expect("nonempty");
    if low + 1 == ints.len() {
        return out;
    }
    for num in divisors(a0) {
        for den in divisors(an) {
            for sign in [1, -1] {
                let cand = q
                    .from_ratio(&(BigInt::from(sign) * &num), &den)
                    .expect("nonzero den");
                if eval(coeffs, &cand).is_zero() {
                    out.push(cand);
                }
            }
        }
    }
    out
}

// Dense polynomial helpers over F_p, low-to-high.

fn poly_rem(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let db = degree(b).expect("nonzero divisor");
    let inv = b[db].inv().expect("unit");
    let mut r = a.to_vec();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] * &inv;
        for i in 0..=db {
            r[dr - db + i] = &r[dr - db + i] - &(&f * &b[i]);
        }
    }
    trim(r)
}

fn poly_div(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let field = a[0].field();
    let db = degree(b).expect("nonzero divisor");
    let inv = b[db].inv().expect("unit");
    let mut r = a.to_vec();
    let Some(da) = degree(&r) else {
        return vec![field.zero()];
    };
    if da < db {
        return vec![field.zero()];
    }
    let mut qv = vec![field.zero(); da - db + 1];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] * &inv;
        for i in 0..=db {
            r[dr - db + i] = &r[dr - db + i] - &(&f * &b[i]);
        }
        qv[dr - db] = f;
    }
    trim(qv)
}

fn poly_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let field = a[0].field();
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

fn poly_gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while degree(&b).is_some() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    match degree(&a) {
        Some(d) => {
            let inv = a[d].inv().expect("unit");
            a.iter().map(|c| c * &inv).collect()
        }
        None => a,
    }
}

/// `base^e mod modulus`.
fn poly_powmod(base: &[Scalar], mut e: u64, modulus: &[Scalar]) -> Vec<Scalar> {
    let field = modulus[0].field();
    let mut acc = vec![field.one()];
    let mut b = poly_rem(base, modulus);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &b), modulus);
        }
        b = poly_rem(&poly_mul(&b, &b), modulus);
        e >>= 1;
    }
    acc
}

fn prime_field_roots(p: u64, coeffs: &[Scalar]) -> Vec<Scalar> {
    let field = Field::Prime(p);
    let t = vec![field.zero(), field.one()];
    // Product of the distinct linear factors: gcd(f, t^p − t).
    let mut tp = poly_powmod(&t, p, coeffs);
    tp.resize(tp.len().max(2), field.zero());
    tp[1] = &tp[1] - &field.one();
    let g = poly_gcd(coeffs, &trim(tp));
    let mut out = Vec::new();
    split_linear(p, &g, &mut out);
    out
}

fn split_linear(p: u64, g: &[Scalar], out: &mut Vec<Scalar>) {
    let field = Field::Prime(p);
    match degree(g) {
        None | Some(0) => {}
        Some(1) => out.push(-&(&g[0] * &g[1].inv().expect("unit"))),
        Some(d) => {
            for a in 0..p {
                let shift = vec![field.from_i64(a as i64), field.one()];
                let mut h = poly_powmod(&shift, (p - 1) / 2, g);
                h[0] = &h[0] - &field.one();
                let h = poly_gcd(g, &trim(h));
                if let Some(dh) = degree(&h) {
                    if dh > 0 && dh < d {
                        split_linear(p, &h, out);
                        split_linear(p, &poly_div(g, &h), out);
                        return;
                    }
                }
            }
            unreachable!("a squarefree split polynomial separates for some shift");
        }
    }
}
