//! Command-line front end. [`run`] does all the work and returns the exit
//! code and output streams, so it can be driven in-process.

use std::path::Path;

use clap::{Args, Parser, Subcommand};

use super::canon::Canonical;
use super::enumerate::{default_budget, default_workers, enumerate};
use crate::error::{Error, Result};
use crate::exactalg::{Field, NCPoly};
use crate::hilbpts::{
    ideal_to_triple, is_cyclic, span_dimension, stabilizer_is_trivial, triple_to_ideal,
    triples_equivalent, IdealPresentation, PointedRep,
};
use crate::normmap::{
    cycle_extract, det_point, dp_normalize, gamma_n, hc_point, law_coefficients, tau_combination,
    DpExpr,
};
use crate::repscheme::{
    default_max_len, invariant_table, is_representation, rep_ideal, AlgebraPresentation,
    RepPoint,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "hilbchow", version, about = "Exact computations on representation and Hilbert schemes of points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Debug)]
struct Opts {
    /// Base field (`Q` or `F <p>`); overrides the presentation's field and
    /// reduces rational points.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Matrix size / tensor degree.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Word length bound for invariant and determinant tables.
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Maximum number of matrix tuples to enumerate.
    #[arg(long, global = true)]
    budget: Option<u128>,
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Presentation file (or inline text).
    #[arg(long, global = true)]
    presentation: Option<String>,
    /// Point file or inline text such as `field Q; n 1; mat x1 [[2]]; vec [1]`.
    #[arg(long, global = true)]
    point: Vec<String>,
    /// Ideal presentation file or inline text.
    #[arg(long, global = true)]
    ideal: Option<String>,
    /// Polynomial or divided-power expression.
    #[arg(long, global = true)]
    expr: Option<String>,
    /// Comma-separated arguments for a polynomial law.
    #[arg(long, global = true, value_delimiter = ',')]
    args: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generators of the representation scheme's ideal.
    RepIdeal,
    /// Whether the point satisfies the presentation's relations.
    CheckRep,
    /// Whether the point's vector is cyclic.
    Cyclic,
    TripleToIdeal,
    IdealToTriple,
    /// Intertwiner between two pointed representations, if any.
    Equiv,
    /// Whether the stabilizer of a pointed representation is trivial.
    Stab,
    /// Trace and determinant invariants.
    Invariants,
    /// `γⁿ(expr)` as a symmetric tensor.
    Gamma,
    /// Normal form of a divided-power expression (its tensor image with `--n`).
    DpNormalize,
    /// Coefficients of `det(Σ t_s ρ(a_s))`.
    LawCoeffs,
    /// Image of a Hilbert-scheme point under the determinant map.
    Hc,
    DetPoint,
    /// 0-cycle of a commuting representation.
    Cycle,
    /// Point counts over a prime field.
    Enumerate,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Precondition(_)
        | Error::NotCyclic { .. }
        | Error::Dimension { .. }
        | Error::Arity { .. }
        | Error::FieldMismatch { .. }
        | Error::Degree { .. }
        | Error::NotPrime(_) => EXIT_PRECONDITION,
        Error::DivisionByZero | Error::Singular | Error::Invariant(_) => EXIT_OTHER,
    }
}

pub fn run<I, S>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return CliOutput { code, stdout, stderr };
        }
    };
    let mut stderr = String::new();
    match dispatch(&cli, &mut stderr) {
        Ok(stdout) => CliOutput {
            code: EXIT_OK,
            stdout,
            stderr,
        },
        Err(e) => CliOutput {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("{stderr}error: {e}\n"),
        },
    }
}

/// File contents if `arg` names an existing file, else `arg` itself.
fn load(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Error::parse(format!("reading {arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn require<'a, T>(v: &'a Option<T>, flag: &str) -> Result<&'a T> {
    v.as_ref()
        .ok_or_else(|| Error::parse(format!("missing required flag --{flag}")))
}

impl Opts {
    fn field_override(&self) -> Result<Option<Field>> {
        self.field.as_deref().map(Field::parse).transpose()
    }

    fn field_or_rational(&self) -> Result<Field> {
        Ok(self.field_override()?.unwrap_or(Field::Rational))
    }

    fn presentation(&self) -> Result<AlgebraPresentation> {
        let pres = AlgebraPresentation::from_canonical(&load(require(&self.presentation, "presentation")?)?)?;
        match self.field_override()? {
            Some(f) if f != pres.field() => pres.with_field(f),
            _ => Ok(pres),
        }
    }

    fn point_text(&self, idx: usize, count: usize) -> Result<String> {
        if self.point.len() != count {
            return Err(Error::parse(format!(
                "expected {count} --point argument(s), got {}",
                self.point.len()
            )));
        }
        load(&self.point[idx])
    }

    fn retarget<T>(&self, x: T, field: Field, reduce: impl Fn(&T, u64) -> Option<T>) -> Result<T> {
        match self.field_override()? {
            None => Ok(x),
            Some(f) if f == field => Ok(x),
            Some(Field::Prime(p)) if field == Field::Rational => reduce(&x, p)
                .ok_or_else(|| Error::precondition(format!("point has a denominator divisible by {p}"))),
            Some(f) => Err(Error::FieldMismatch { left: f, right: field }),
        }
    }

    fn rep(&self) -> Result<RepPoint> {
        let rep = RepPoint::from_canonical(&self.point_text(0, 1)?)?;
        let field = rep.field();
        self.retarget(rep, field, RepPoint::reduce_mod)
    }

    fn pointed_at(&self, idx: usize, count: usize) -> Result<PointedRep> {
        let pt = PointedRep::from_canonical(&self.point_text(idx, count)?)?;
        let field = pt.field();
        self.retarget(pt, field, PointedRep::reduce_mod)
    }

    fn pointed(&self) -> Result<PointedRep> {
        self.pointed_at(0, 1)
    }

    fn max_len(&self, n: usize) -> usize {
        self.max_len.unwrap_or_else(|| default_max_len(n))
    }
}

fn check_fields(pres: &AlgebraPresentation, field: Field) -> Result<()> {
    if pres.field() != field {
        return Err(Error::FieldMismatch {
            left: pres.field(),
            right: field,
        });
    }
    Ok(())
}

fn dispatch(cli: &Cli, stderr: &mut String) -> Result<String> {
    let o = &cli.opts;
    Ok(match cli.command {
        Command::RepIdeal => rep_ideal(&o.presentation()?, *require(&o.n, "n")?)?.to_canonical(),
        Command::CheckRep => {
            let pres = o.presentation()?;
            let rep = o.rep()?;
            check_fields(&pres, rep.field())?;
            format!("representation {}\n", is_representation(&pres, rep.matrices())?)
        }
        Command::Cyclic => {
            let pt = o.pointed()?;
            let span = span_dimension(&pt);
            if !is_cyclic(&pt) {
                return Err(Error::NotCyclic {
                    span_dim: span,
                    n: pt.n(),
                });
            }
            format!("cyclic true\nspan {span}\n")
        }
        Command::TripleToIdeal => triple_to_ideal(&o.pointed()?)?.to_canonical(),
        Command::IdealToTriple => {
            let pres = o.presentation()?;
            let ip = IdealPresentation::from_canonical(&load(require(&o.ideal, "ideal")?)?)?;
            check_fields(&pres, ip.field())?;
            ideal_to_triple(&pres, &ip)?.to_canonical()
        }
        Command::Equiv => {
            let p1 = o.pointed_at(0, 2)?;
            let p2 = o.pointed_at(1, 2)?;
            match triples_equivalent(&p1, &p2)? {
                Some(g) => format!("equivalent true\ng {g}\n"),
                None => "equivalent false\n".to_string(),
            }
        }
        Command::Stab => format!("trivial {}\n", stabilizer_is_trivial(&o.pointed()?)?),
        Command::Invariants => {
            let rep = o.rep()?;
            invariant_table(&rep, o.max_len(rep.n()))?.to_canonical()
        }
        Command::Gamma => {
            let a = NCPoly::parse(o.field_or_rational()?, require(&o.expr, "expr")?)?;
            gamma_n(&a, *require(&o.n, "n")?).to_canonical()
        }
        Command::DpNormalize => {
            let e = DpExpr::parse(o.field_or_rational()?, require(&o.expr, "expr")?)?;
            let c = dp_normalize(&e);
            match o.n {
                Some(n) => tau_combination(&c, n)?.to_canonical(),
                None => c.to_canonical(),
            }
        }
        Command::LawCoeffs => {
            let rep = o.rep()?;
            if o.args.is_empty() {
                return Err(Error::parse("missing required flag --args"));
            }
            let args = o
                .args
                .iter()
                .map(|a| NCPoly::parse(rep.field(), a))
                .collect::<Result<Vec<_>>>()?;
            law_coefficients(&rep, &args)?.to_canonical()
        }
        Command::Hc => {
            let pt = o.pointed()?;
            hc_point(&pt, o.max_len(pt.n()))?.to_canonical()
        }
        Command::DetPoint => {
            let rep = o.rep()?;
            det_point(&rep, o.max_len(rep.n()))?.to_canonical()
        }
        Command::Cycle => {
            let pres = o.presentation()?;
            let rep = o.rep()?;
            check_fields(&pres, rep.field())?;
            cycle_extract(&pres, &rep)?.to_canonical()
        }
        Command::Enumerate => {
            let pres = o.presentation()?;
            let budget = o.budget.unwrap_or_else(default_budget);
            let workers = o.workers.unwrap_or_else(default_workers);
            let report = enumerate(&pres, *require(&o.n, "n")?, budget, workers)?;
            stderr.push_str(&format!("elapsed_ms {}\n", report.elapsed.as_millis()));
            report.to_canonical()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const K2: &str = "field Q; gens x1 x2; rel x1*x2 - x2*x1";
    const NIL: &str = "field Q; n 2; mat x1 [[0,1],[0,0]]; mat x2 [[0,0],[0,0]]; vec [0,1]";

    fn cli(args: &[&str]) -> CliOutput {
        run(std::iter::once("hilbchow").chain(args.iter().copied()))
    }

    #[test]
    fn rep_ideal_command() {
        let out = cli(&["rep-ideal", "--presentation", K2, "--n", "2"]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        assert_eq!(out.stdout.lines().filter(|l| l.starts_with("gen ")).count(), 4);
    }

    #[test]
    fn hc_command() {
        let out = cli(&["hc", "--point", NIL]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        assert!(out.stdout.contains("charpoly x1 t^2\ncharpoly x2 t^2\n"));
    }

    #[test]
    fn error_codes() {
        let noncyclic = NIL.replace("vec [0,1]", "vec [1,0]");
        let out = cli(&["cyclic", "--point", &noncyclic]);
        assert_eq!(out.code, EXIT_PRECONDITION);
        assert!(out.stderr.contains("span dimension 1"));
        assert_eq!(cli(&["hc", "--point", &noncyclic]).code, EXIT_PRECONDITION);
        assert_eq!(cli(&["hc", "--point", "field Q; n 2; mat x1 [[0,1]]"]).code, EXIT_PARSE);
        assert_eq!(cli(&["no-such-command"]).code, EXIT_PARSE);
        let free = "field F 2; gens x1 x2";
        let out = cli(&["enumerate", "--presentation", free, "--n", "2", "--budget", "10"]);
        assert_eq!(out.code, EXIT_BUDGET);
    }

    #[test]
    fn field_override_reduces_points() {
        let out = cli(&["det-point", "--field", "F 5", "--point", "field Q; n 1; mat x1 [[7]]", "--max-len", "2"]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        assert!(out.stdout.starts_with("field F 5\n"));
        assert!(out.stdout.contains("worddet x1^2 4\n"));
    }
}
