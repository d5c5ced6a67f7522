//! Abelianization and coefficient tables of `det∘ρ` as a polynomial law.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactalg::commpoly::vars;
use crate::exactalg::{det_linear_combination, CommPoly, Field, Monomial, NCPoly, Scalar};
use crate::repscheme::RepPoint;

pub fn generator_names(m: usize) -> Vec<String> {
    (1..=m).map(|k| format!("x{k}")).collect()
}

/// Image in the commutative polynomial ring on `x1..xm`: each word goes to
/// the monomial with the same letter counts.
pub fn abelianize(p: &NCPoly, m: usize) -> Result<CommPoly> {
    if p.min_arity() > m {
        return Err(Error::Arity {
            expected: m,
            found: p.min_arity(),
        });
    }
    let mut out = CommPoly::zero(p.field(), vars(&generator_names(m)));
    for (w, c) in p.terms() {
        out.add_term(Monomial(w.content(m)), c.clone());
    }
    Ok(out)
}

/// Coefficients `φ_ξ` of `det(Σ_s t_s·ρ(a_s)) = Σ_ξ t^ξ φ_ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawCoefficientTable {
    pub(crate) field: Field,
    pub(crate) n: usize,
    pub(crate) args: Vec<NCPoly>,
    pub(crate) coeffs: BTreeMap<Vec<u32>, Scalar>,
}

impl LawCoefficientTable {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn args(&self) -> &[NCPoly] {
        &self.args
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<u32>, Scalar> {
        &self.coeffs
    }

    pub fn coeff(&self, xi: &[u32]) -> Scalar {
        self.coeffs.get(xi).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn reduce_mod(&self, p: u64) -> Option<LawCoefficientTable> {
        let field = Field::prime(p).ok()?;
        let args = self.args.iter().map(|a| a.reduce_mod(p)).collect::<Option<Vec<_>>>()?;
        let mut coeffs = BTreeMap::new();
        for (xi, c) in &self.coeffs {
            let r = c.reduce_mod(p)?;
            if !r.is_zero() {
                coeffs.insert(xi.clone(), r);
            }
        }
        Some(LawCoefficientTable {
            field,
            n: self.n,
            args,
            coeffs,
        })
    }
}

pub fn law_coefficients(rep: &RepPoint, args: &[NCPoly]) -> Result<LawCoefficientTable> {
    if args.is_empty() {
        return Err(Error::Arity {
            expected: 1,
            found: 0,
        });
    }
    let mats = args.iter().map(|a| rep.eval(a)).collect::<Result<Vec<_>>>()?;
    let names: Vec<String> = (1..=args.len()).map(|s| format!("t{s}")).collect();
    let poly = det_linear_combination(&mats, &names)?;
    let n = rep.n();
    let mut coeffs = BTreeMap::new();
    for (mono, c) in poly.terms() {
        if mono.degree() as usize != n {
            return Err(Error::Invariant(format!(
                "law coefficient of degree {} in a degree {n} law",
                mono.degree()
            )));
        }
        coeffs.insert(mono.0.clone(), c.clone());
    }
    Ok(LawCoefficientTable {
        field: rep.field(),
        n,
        args: args.to_vec(),
        coeffs,
    })
}
