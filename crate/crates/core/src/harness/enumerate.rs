//! Exhaustive point counts over prime fields.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Scalar};
use crate::hilbpts::{is_cyclic, PointedRep};
use crate::repscheme::{is_representation, AlgebraPresentation, RepPoint};

/// Environment variable overriding the default candidate budget.
pub const BUDGET_ENV: &str = "HILBCHOW_BUDGET";
pub const DEFAULT_BUDGET: u128 = 1 << 30;

pub fn default_budget() -> u128 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn prime_of(field: Field) -> Result<u64> {
    match field {
        Field::Prime(p) => Ok(p),
        Field::Rational => Err(Error::precondition("enumeration needs a prime field")),
    }
}

fn checked_pow(base: u128, exp: usize) -> Option<u128> {
    (0..exp).try_fold(1u128, |acc, _| acc.checked_mul(base))
}

/// `|GL_n(F_q)| = Π_{i<n} (qⁿ − qⁱ)`.
pub fn gl_order(n: usize, q: u64) -> Result<u128> {
    if !crate::exactalg::field::is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let overflow = || Error::BudgetExceeded {
        needed: u128::MAX,
        budget: u128::MAX,
    };
    let qn = checked_pow(u128::from(q), n).ok_or_else(overflow)?;
    (0..n).try_fold(1u128, |acc, i| {
        let qi = checked_pow(u128::from(q), i).ok_or_else(overflow)?;
        acc.checked_mul(qn - qi).ok_or_else(overflow)
    })
}

/// Counts of representations and cyclic pairs over `F_q`. Equality ignores
/// `elapsed`.
#[derive(Clone, Debug)]
pub struct EnumerationReport {
    pub q: u64,
    pub n: usize,
    pub m: usize,
    pub total_rep_points: u128,
    pub total_cyclic_pairs: u128,
    pub gl_order: u128,
    pub orbit_count: u128,
    pub elapsed: Duration,
}

impl PartialEq for EnumerationReport {
    fn eq(&self, other: &Self) -> bool {
        (self.q, self.n, self.m, self.total_rep_points, self.total_cyclic_pairs)
            == (other.q, other.n, other.m, other.total_rep_points, other.total_cyclic_pairs)
            && (self.gl_order, self.orbit_count) == (other.gl_order, other.orbit_count)
    }
}

impl Eq for EnumerationReport {}

struct Space {
    field: Field,
    q: u64,
    n: usize,
    m: usize,
}

impl Space {
    /// Base-`q` digits of `idx`, most significant first, as `m` matrices.
    fn decode(&self, mut idx: u128) -> Vec<Matrix<Scalar>> {
        let nn = self.n * self.n;
        let mut digits = vec![0u64; self.m * nn];
        for d in digits.iter_mut().rev() {
            *d = (idx % u128::from(self.q)) as u64;
            idx /= u128::from(self.q);
        }
        digits
            .chunks(nn)
            .map(|c| {
                Matrix::from_vec(self.n, c.iter().map(|&x| self.field.from_i64(x as i64)).collect())
                    .expect("square")
            })
            .collect()
    }

    fn vectors(&self) -> Vec<Vec<Scalar>> {
        let count = self.q.pow(self.n as u32);
        (0..count)
            .map(|mut i| {
                let mut v = vec![self.field.zero(); self.n];
                for x in v.iter_mut().rev() {
                    *x = self.field.from_i64((i % self.q) as i64);
                    i /= self.q;
                }
                v
            })
            .collect()
    }
}

fn count_range(pres: &AlgebraPresentation, space: &Space, lo: u128, hi: u128) -> Result<(u128, u128)> {
    let vectors = space.vectors();
    let mut reps = 0u128;
    let mut pairs = 0u128;
    for idx in lo..hi {
        let mats = space.decode(idx);
        if !is_representation(pres, &mats)? {
            continue;
        }
        reps += 1;
        let rep = RepPoint::new(mats)?;
        for v in &vectors {
            if is_cyclic(&PointedRep::new(rep.clone(), v.clone())?) {
                pairs += 1;
            }
        }
    }
    Ok((reps, pairs))
}

/// Enumerates every `m`-tuple of `n×n` matrices over the presentation's prime
/// field, keeps representations, and counts cyclic vectors for each. The
/// tuple space is split into contiguous index ranges, one per worker.
pub fn enumerate(
    pres: &AlgebraPresentation,
    n: usize,
    budget: u128,
    workers: usize,
) -> Result<EnumerationReport> {
    let start = Instant::now();
    let field = pres.field();
    let q = prime_of(field)?;
    if n == 0 {
        return Err(Error::precondition("dimension must be at least 1"));
    }
    let m = pres.m();
    let exp = m * n * n;
    let total = checked_pow(u128::from(q), exp).unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::BudgetExceeded {
            needed: total,
            budget,
        });
    }
    let gl = gl_order(n, q)?;
    let space = Space { field, q, n, m };
    let workers = workers.clamp(1, usize::try_from(total).unwrap_or(usize::MAX).max(1));
    let chunk = total.div_ceil(workers as u128);
    let parts: Vec<Result<(u128, u128)>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers as u128)
            .map(|w| {
                let lo = (w * chunk).min(total);
                let hi = ((w + 1) * chunk).min(total);
                let space = &space;
                s.spawn(move || count_range(pres, space, lo, hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut reps = 0;
    let mut pairs = 0;
    for part in parts {
        let (r, p) = part?;
        reps += r;
        pairs += p;
    }
    if pairs % gl != 0 {
        return Err(Error::Invariant(format!(
            "|GL_{n}(F_{q})| = {gl} does not divide the {pairs} cyclic pairs"
        )));
    }
    Ok(EnumerationReport {
        q,
        n,
        m,
        total_rep_points: reps,
        total_cyclic_pairs: pairs,
        gl_order: gl,
        orbit_count: pairs / gl,
        elapsed: start.elapsed(),
    })
}
