//! Canonical line-based text for every public result type.
//!
//! Each line is `key value`. Blank lines and `#` comments are ignored, and
//! `;` may stand in for a newline so that small objects fit on a command
//! line. Printing always uses newlines, a fixed key order, and sorted
//! entries, so equal values print identically.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::exactalg::commpoly::vars;
use crate::exactalg::matrix::format_vector;
use crate::exactalg::{CommPoly, Field, Matrix, NCPoly, Scalar, Word};
use crate::harness::enumerate::EnumerationReport;
use crate::hilbpts::{IdealPresentation, PointedRep};
use crate::normmap::law::generator_names;
use crate::normmap::{
    dp_normalize, Cycle, CycleOutcome, DpCombination, DpExpr, LawCoefficientTable, NormPoint,
    SymTensor, WordMultiset,
};
use crate::repscheme::{generic_vars, AlgebraPresentation, InvariantTable, RepIdeal, RepPoint};

pub trait Canonical: Sized {
    fn to_canonical(&self) -> String;
    fn from_canonical(text: &str) -> Result<Self>;
}

/// Parsed `key value` lines, consumed key by key.
struct Record {
    lines: Vec<(String, String)>,
}

impl Record {
    fn parse(text: &str, allowed: &[&str]) -> Result<Self> {
        let mut lines = Vec::new();
        for raw in text.split(['\n', ';']) {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = match line.split_once(char::is_whitespace) {
                Some((k, v)) => (k, v.trim()),
                None => (line, ""),
            };
            if !allowed.contains(&key) {
                return Err(Error::parse(format!("unexpected key `{key}`")));
            }
            lines.push((key.to_string(), value.to_string()));
        }
        Ok(Record { lines })
    }

    fn all(&self, key: &str) -> Vec<&str> {
        self.lines
            .iter()
            .filter(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
            .collect()
    }

    fn optional(&self, key: &str) -> Result<Option<&str>> {
        match self.all(key).as_slice() {
            [] => Ok(None),
            [v] => Ok(Some(v)),
            _ => Err(Error::parse(format!("duplicate key `{key}`"))),
        }
    }

    fn one(&self, key: &str) -> Result<&str> {
        self.optional(key)?
            .ok_or_else(|| Error::parse(format!("missing key `{key}`")))
    }

    fn field(&self) -> Result<Field> {
        Field::parse(self.one("field")?)
    }

    fn number<T: std::str::FromStr>(&self, key: &str) -> Result<T> {
        let v = self.one(key)?;
        v.parse()
            .map_err(|_| Error::parse(format!("`{key}` expects a number, got `{v}`")))
    }
}

fn field_line(field: Field) -> String {
    format!("field {field}\n")
}

pub fn parse_matrix(field: Field, s: &str) -> Result<Matrix<Scalar>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix("[[")
        .and_then(|r| r.strip_suffix("]]"))
        .ok_or_else(|| Error::parse(format!("matrix must look like [[a,b],[c,d]]: `{s}`")))?;
    let rows = inner
        .split("],[")
        .map(|row| row.split(',').map(|x| field.parse_scalar(x)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows.iter().any(|r| r.len() != rows.len()) {
        return Err(Error::parse(format!("matrix is not square: `{s}`")));
    }
    Matrix::from_rows(rows)
}

pub fn parse_vector(field: Field, s: &str) -> Result<Vec<Scalar>> {
    parse_tuple(field, s, '[', ']')
}

fn parse_tuple(field: Field, s: &str, open: char, close: char) -> Result<Vec<Scalar>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix(open)
        .and_then(|r| r.strip_suffix(close))
        .ok_or_else(|| Error::parse(format!("expected {open}..{close}: `{s}`")))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|x| field.parse_scalar(x)).collect()
}

fn format_tuple(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn parse_word(s: &str) -> Result<Word> {
    let p = NCPoly::parse(Field::Rational, s)?;
    p.as_word()
        .cloned()
        .ok_or_else(|| Error::parse(format!("`{s}` is not a word")))
}

fn parse_exponents(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::parse(format!("bad exponent vector `{s}`")))
        })
        .collect()
}

fn format_exponents(xi: &[u32]) -> String {
    let parts: Vec<String> = xi.iter().map(u32::to_string).collect();
    parts.join(",")
}

/// Splits `name value` where `name` is a generator like `x2`.
fn named(s: &str) -> Result<(usize, &str)> {
    let (name, rest) = s
        .split_once(char::is_whitespace)
        .ok_or_else(|| Error::parse(format!("expected `x<k> <value>`: `{s}`")))?;
    let k = crate::exactalg::text::generator_index(name)
        .ok_or_else(|| Error::parse(format!("bad generator name `{name}`")))?;
    Ok((k, rest.trim()))
}

/// Values keyed `x1 .. xm`, required in order.
fn ordered_by_generator<'a>(entries: &[&'a str]) -> Result<Vec<&'a str>> {
    entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let (k, v) = named(e)?;
            if k != i {
                return Err(Error::parse(format!("expected x{} but found x{}", i + 1, k + 1)));
            }
            Ok(v)
        })
        .collect()
}

fn check_n(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::Dimension { expected, found });
    }
    Ok(())
}

impl Canonical for AlgebraPresentation {
    fn to_canonical(&self) -> String {
        let mut s = field_line(self.field());
        let _ = writeln!(s, "gens {}", generator_names(self.m()).join(" "));
        for r in self.relations() {
            let _ = writeln!(s, "rel {r}");
        }
        s
    }

    fn from_canonical(text: &str) -> Result<Self> {
        let rec = Record::parse(text, &["field", "gens", "rel"])?;
        let field = rec.field()?;
        let gens: Vec<&str> = rec.one("gens")?.split_whitespace().collect();
        for (i, g) in gens.iter().enumerate() {
            if *g != format!("x{}", i + 1) {
                return Err(Error::parse(format!("generators must be x1 .. xm, found `{g}`")));
            }
        }
        let rels = rec
            .all("rel")
            .into_iter()
            .map(|r| NCPoly::parse(field, r))
            .collect::<Result<Vec<_>>>()?;
        AlgebraPresentation::new(field, gens.len(), rels)
    }
}

fn write_mats(s: &mut String, mats: &[Matrix<Scalar>]) {
    for (k, m) in mats.iter().enumerate() {
        let _ = writeln!(s, "mat x{} {m}", k + 1);
    }
}

fn read_mats(rec: &Record, field: Field, n: usize) -> Result<Vec<Matrix<Scalar>>> {
    let mats = ordered_by_generator(&rec.all("mat"))?
        .into_iter()
        .map(|v| parse_matrix(field, v))
        .collect::<Result<Vec<_>>>()?;
    for m in &mats {
        check_n(n, m.n())?;
    }
    Ok(mats)
}

impl Canonical for RepPoint {
    fn to_canonical(&self) -> String {
        let mut s = field_line(self.field());
        let _ = writeln!(s, "n {}", self.n());
        write_mats(&mut s, self.matrices());
        s
    }

    fn from_canonical(text: &str) -> Result<Self> {
        let rec = Record::parse(text, &["field", "n", "mat", "vec"])?;
        let field = rec.field()?;
        RepPoint::new(read_mats(&rec, field, rec.number("n")?)?)
    }
}

impl Canonical for PointedRep {
    fn to_canonical(&self) -> String {
        let mut s = self.rep().to_canonical();
        let _ = writeln!(s, "vec {}", format_vector(self.vector()));
        s
    }

    fn from_canonical(text: &str) -> Result<Self> {
        let rec = Record::parse(text, &["field", "n", "mat", "vec"])?;
        let field = rec.field()?;
        let rep = RepPoint::new(read_mats(&rec, field, rec.number("n")?)?)?;
        PointedRep::new(rep, parse_vector(field, rec.one("vec")?)?)
    }
}

impl Canonical for RepIdeal {
    fn to_canonical(&self) -> String {
        let mut s = field_line(self.field);
        let _ = writeln!(s, "n {}", self.n);
        let _ = writeln!(s, "m {}", self.m);
        for g in &self.gens {
            let _ = writeln!(s, "gen {g}");
        }
        s
    }

    fn from_canonical(text: &str) -> Result<Self> {
        let rec = Record::parse(text, &["field", "n", "m", "gen"])?;
        let field = rec.field()?;
        let n = rec.number("n")?;
        let m = rec.number("m")?;
        let vs = generic_vars(m, n);
        let gens = rec
            .all("gen")
            .into_iter()
            .map(|g| CommPoly::parse(field, vs.clone(), g))
            .collect::<Result<Vec<_>>>()?;
        Ok(RepIdeal { field, n, m, gens })
    }
}

impl Canonical for InvariantTable {
    fn to_canonical(&self) -> String {
        let mut s = field_line(self.field);
        let _ = writeln!(s, "m {}", self.m);
        let _ = writeln!(s, "maxlen {}", self.max_len);
        for (k, d) in self.dets.iter().enumerate() {
            let _ = writeln!(s, "det x{} {d}", k + 1);
        }
        for (w, t) in &self.traces {
            let _ = writeln!(s, "trace {w} {t}");
        }
        s
    }

    fn from_canonical(text: &str) -> Result<Self> {
        let rec = Record::parse(text, &["field", "m", "maxlen", "det", "trace"])?;
        let field = rec.field()?;
        let dets = ordered_by_generator(&rec.all("det"))?
            .into_iter()
            .map(|v| field.parse_scalar(v))
            .collect::<Result<Vec<_>>>()?;
        let mut traces = BTreeMap::new();
        for line in rec.all("trace") {
            let (w, v) = split_last(line)?;
            traces.insert(parse_word(w)?, field.parse_scalar(v)?);
        }
        Ok(InvariantTable {
            field,
            m: rec.number("m")?,
            max_len: rec.number("maxlen")?,
            traces,
            dets,
        })
    }
}

/// Splits at the last whitespace: `key-part value`.
fn split_last(s: &str) -> Result<(&str, &str)> {
    s.rsplit_once(char::is_whitespace)
        .map(|(a, b)| (a.trim(), b.trim()))
        .ok_or_else(|| Error::parse(format!("expected `<key> <value>`: `{s}`")))
}

impl Canonical for IdealPresentation {
    fn to_canonical(&self) -> String {
        let mut s = field_line(self.field);
        let _ = writeln!(s, "n {}", self.n);
        let words: Vec<String> = self.basis.iter().map(Word::to_string).collect();
        let _ = writeln!(s, "basis {}", words.join(" "));
        let _ = writeln!(s, "cyclic {}", self.cyclic_index);
        for (k, m) in self.action.iter().enumerate() {
            let _ = writeln!(s, "action x{} {m}", k + 1);
        }
        s
    }

    fn from_canonical(text: &str) -> Result<Self> {
        let rec = Record::parse(text, &["field", "n", "basis", "cyclic", "action"])?;
        let field = rec.field()?;
        let n: usize = rec.number("n")?;
        let basis = rec
            .one("basis")?
            .split_whitespace()
            .map(parse_word)
            .collect::<Result<Vec<_>>>()?;
        let action = ordered_by_generator(&rec.all("action"))?
            .into_iter()
            .map(|v| parse_matrix(field, v))
            .collect::<Result<Vec<_>>>()?;
        let ip = IdealPresentation::new(basis, action, rec.number("cyclic")?)?;
        check_n(n, ip.n())?;
        if ip.field() != field {
            return Err(Error::FieldMismatch {
                left: field,
                right: ip.field(),
            });
        }
        Ok(ip)
    }
}

fn parse_multiset(s: &str) -> Result<WordMultiset> {
    let inner = s
        .trim()
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::parse(format!("expected {{w1,..,wn}}: `{s}`")))?;
    if inner.trim().is_empty() {
        return Ok(WordMultiset::new(Vec::new()));
    }
    Ok(WordMultiset::new(inner.split(',').map(parse_word).collect::<Result<_>>()?))
}

impl Canonical for SymTensor {
    fn to_canonical(&self) -> String {
        let mut s = field_line(self.field());
        let _ = writeln!(s, "n {}", self.n());
        for (k, c) in self.terms() {
            let _ = writeln!(s, "term {k} {c}");
        }
        s
    }

    fn from_canonical(text: &str) -> Result<Self> {
        let rec = Record::parse(text, &["field", "n", "term"])?;
        let field = rec.field()?;
        let mut t = SymTensor::zero(field, rec.number("n")?);
        for line in rec.all("term") {
            let (k, c) = split_last(line)?;
            t.add_term(parse_multiset(k)?, field.parse_scalar(c)?)?;
        }
        Ok(t)
    }
}

impl Canonical for DpCombination {
    fn to_canonical(&self) -> String {
        let mut s = field_line(self.field());
        for (mon, c) in self.terms() {
            let _ = writeln!(s, "term {mon} {c}");
        }
        s
    }

    fn from_canonical(text: &str) -> Result<Self> {
        let rec = Record::parse(text, &["field", "term"])?;
        let field = rec.field()?;
        let mut out = DpCombination::zero(field);
        for line in rec.all("term") {
            let (mon, c) = split_last(line)?;
            let norm = dp_normalize(&DpExpr::parse(field, mon)?);
            let mut terms = norm.terms();
            let (Some((m, one)), None) = (terms.next(), terms.next()) else {
                return Err(Error::parse(format!("`{mon}` is not a divided monomial")));
            };
            if !one.is_one() {
                return Err(Error::parse(format!("`{mon}` is not in normal form")));
            }
            out.add_term(m.clone(), field.parse_scalar(c)?);
        }
        Ok(out)
    }
}

fn write_law(s: &mut String, table: &LawCoefficientTable, key: &str) {
    for (xi, c) in table.coeffs() {
        let _ = writeln!(s, "{key} {} {c}", format_exponents(xi));
    }
}

fn read_law(rec: &Record, field: Field, key: &str) -> Result<BTreeMap<Vec<u32>, Scalar>> {
    let mut coeffs = BTreeMap::new();
    for line in rec.all(key) {
        let (xi, c) = split_last(line)?;
        coeffs.insert(parse_exponents(xi)?, field.parse_scalar(c)?);
    }
    Ok(coeffs)
}

impl Canonical for LawCoefficientTable {
    fn to_canonical(&self) -> String {
        let mut s = field_line(self.field());
        let _ = writeln!(s, "n {}", self.n());
        for a in self.args() {
            let _ = writeln!(s, "arg {a}");
        }
        write_law(&mut s, self, "coeff");
        s
    }

    fn from_canonical(text: &str) -> Result<Self> {
        let rec = Record::parse(text, &["field", "n", "arg", "coeff"])?;
        let field = rec.field()?;
        let args = rec
            .all("arg")
            .into_iter()
            .map(|a| NCPoly::parse(field, a))
            .collect::<Result<Vec<_>>>()?;
        Ok(LawCoefficientTable {
            field,
            n: rec.number("n")?,
            args,
            coeffs: read_law(&rec, field, "coeff")?,
        })
    }
}

impl Canonical for NormPoint {
    fn to_canonical(&self) -> String {
        let mut s = field_line(self.field);
        let _ = writeln!(s, "n {}", self.n);
        let _ = writeln!(s, "m {}", self.m);
        let _ = writeln!(s, "maxlen {}", self.max_len);
        for (k, c) in self.gen_charpolys.iter().enumerate() {
            let _ = writeln!(s, "charpoly x{} {c}", k + 1);
        }
        write_law(&mut s, &self.mixed, "law");
        for (w, d) in &self.word_dets {
            let _ = writeln!(s, "worddet {w} {d}");
        }
        s
    }

    fn from_canonical(text: &str) -> Result<Self> {
        let rec = Record::parse(text, &["field", "n", "m", "maxlen", "charpoly", "law", "worddet"])?;
        let field = rec.field()?;
        let m: usize = rec.number("m")?;
        let t = vars(&["t"]);
        let gen_charpolys = ordered_by_generator(&rec.all("charpoly"))?
            .into_iter()
            .map(|c| CommPoly::parse(field, t.clone(), c))
            .collect::<Result<Vec<_>>>()?;
        let mut word_dets = BTreeMap::new();
        for line in rec.all("worddet") {
            let (w, d) = split_last(line)?;
            word_dets.insert(parse_word(w)?, field.parse_scalar(d)?);
        }
        let n = rec.number("n")?;
        Ok(NormPoint {
            field,
            n,
            m,
            max_len: rec.number("maxlen")?,
            gen_charpolys,
            mixed: LawCoefficientTable {
                field,
                n,
                args: (0..m).map(|k| NCPoly::generator(field, k)).collect(),
                coeffs: read_law(&rec, field, "law")?,
            },
            word_dets,
        })
    }
}

impl Canonical for Cycle {
    fn to_canonical(&self) -> String {
        let mut s = field_line(self.field);
        for (p, mult) in &self.points {
            let _ = writeln!(s, "point {} {mult}", format_tuple(p));
        }
        s
    }

    fn from_canonical(text: &str) -> Result<Self> {
        let rec = Record::parse(text, &["field", "point"])?;
        read_cycle(&rec)
    }
}

fn read_cycle(rec: &Record) -> Result<Cycle> {
    let field = rec.field()?;
    let mut points = BTreeMap::new();
    for line in rec.all("point") {
        let (p, mult) = split_last(line)?;
        let mult: usize = mult
            .parse()
            .map_err(|_| Error::parse(format!("bad multiplicity `{mult}`")))?;
        if mult == 0 {
            return Err(Error::parse("multiplicities must be positive"));
        }
        *points.entry(parse_tuple(field, p, '(', ')')?).or_insert(0) += mult;
    }
    Ok(Cycle { field, points })
}

impl Canonical for CycleOutcome {
    fn to_canonical(&self) -> String {
        match self {
            CycleOutcome::Cycle(c) => c.to_canonical(),
            CycleOutcome::SplitFailure { generator, charpoly } => {
                let mut s = field_line(charpoly.field());
                let _ = writeln!(s, "splitfailure x{} {charpoly}", generator + 1);
                s
            }
        }
    }

    fn from_canonical(text: &str) -> Result<Self> {
        let rec = Record::parse(text, &["field", "point", "splitfailure"])?;
        match rec.optional("splitfailure")? {
            None => Ok(CycleOutcome::Cycle(read_cycle(&rec)?)),
            Some(line) => {
                if !rec.all("point").is_empty() {
                    return Err(Error::parse("a split failure carries no points"));
                }
                let (k, cp) = named(line)?;
                Ok(CycleOutcome::SplitFailure {
                    generator: k,
                    charpoly: CommPoly::parse(rec.field()?, vars(&["t"]), cp)?,
                })
            }
        }
    }
}

impl Canonical for EnumerationReport {
    fn to_canonical(&self) -> String {
        format!(
            "field F {}\nn {}\nm {}\nrep_points {}\ncyclic_pairs {}\ngl_order {}\norbit_count {}\n",
            self.q,
            self.n,
            self.m,
            self.total_rep_points,
            self.total_cyclic_pairs,
            self.gl_order,
            self.orbit_count
        )
    }

    fn from_canonical(text: &str) -> Result<Self> {
        let keys = ["field", "n", "m", "rep_points", "cyclic_pairs", "gl_order", "orbit_count"];
        let rec = Record::parse(text, &keys)?;
        let Field::Prime(q) = rec.field()? else {
            return Err(Error::parse("enumeration reports are over prime fields"));
        };
        Ok(EnumerationReport {
            q,
            n: rec.number("n")?,
            m: rec.number("m")?,
            total_rep_points: rec.number("rep_points")?,
            total_cyclic_pairs: rec.number("cyclic_pairs")?,
            gl_order: rec.number("gl_order")?,
            orbit_count: rec.number("orbit_count")?,
            elapsed: std::time::Duration::ZERO,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbpts::triple_to_ideal;
    use crate::normmap::{cycle_extract, gamma_n, hc_point, law_coefficients};
    use crate::repscheme::{invariant_table, rep_ideal};

    fn roundtrip<T: Canonical + PartialEq + std::fmt::Debug>(x: &T) {
        let text = x.to_canonical();
        let back = T::from_canonical(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
        assert_eq!(&back, x, "{text}");
        assert_eq!(back.to_canonical(), text);
    }

    fn q() -> Field {
        Field::Rational
    }

    fn pointed() -> PointedRep {
        PointedRep::from_canonical("field Q; n 2; mat x1 [[0,1],[0,0]]; mat x2 [[0,0],[0,0]]; vec [0,1]")
            .unwrap()
    }

    #[test]
    fn presentation_file() {
        let text = "# commuting pair\nfield F 5\ngens x1 x2\nrel x1*x2 - x2*x1\n";
        let p = AlgebraPresentation::from_canonical(text).unwrap();
        assert_eq!(p.m(), 2);
        assert_eq!(p.field(), Field::Prime(5));
        assert_eq!(p.to_canonical(), "field F 5\ngens x1 x2\nrel 4*x2*x1 + x1*x2\n");
        roundtrip(&p);
        assert!(AlgebraPresentation::from_canonical("field Q\ngens y1\n").is_err());
        assert!(AlgebraPresentation::from_canonical("gens x1\n").is_err());
    }

    #[test]
    fn all_types_roundtrip() {
        let pt = pointed();
        roundtrip(&pt);
        roundtrip(pt.rep());
        let pres = AlgebraPresentation::polynomial_ring(q(), 2).unwrap();
        roundtrip(&rep_ideal(&pres, 2).unwrap());
        roundtrip(&invariant_table(pt.rep(), 3).unwrap());
        roundtrip(&triple_to_ideal(&pt).unwrap());
        roundtrip(&gamma_n(&NCPoly::parse(q(), "x1 - 1/2*x2*x1 + 3").unwrap(), 3));
        roundtrip(&dp_normalize(&DpExpr::parse(q(), "(x1 + 2*x1*x2)^[2]*x2^[1] - 7").unwrap()));
        let args = [NCPoly::one(q()), NCPoly::parse(q(), "x1*x2 + x2").unwrap()];
        roundtrip(&law_coefficients(pt.rep(), &args).unwrap());
        roundtrip(&hc_point(&pt, 3).unwrap());
        roundtrip(&cycle_extract(&pres, pt.rep()).unwrap());
        let pres1 = AlgebraPresentation::polynomial_ring(q(), 1).unwrap();
        let rot = RepPoint::from_canonical("field Q\nn 2\nmat x1 [[0,-1],[1,0]]").unwrap();
        let failure = cycle_extract(&pres1, &rot).unwrap();
        assert!(matches!(failure, CycleOutcome::SplitFailure { .. }));
        roundtrip(&failure);
    }

    #[test]
    fn malformed_input() {
        assert!(RepPoint::from_canonical("field Q; n 2; mat x1 [[1,2],[3]]").is_err());
        assert!(RepPoint::from_canonical("field Q; n 3; mat x1 [[1,2],[3,4]]").is_err());
        assert!(RepPoint::from_canonical("field Q; n 2; mat x2 [[1,2],[3,4]]").is_err());
        assert!(PointedRep::from_canonical("field Q; n 2; mat x1 [[1,2],[3,4]]").is_err());
        assert!(SymTensor::from_canonical("field Q; n 2; term {x1} 1").is_err());
        assert!(RepPoint::from_canonical("field Q; n 1; colour x1 [[1]]").is_err());
    }
}
