//! Divided powers of the free algebra, realised as symmetric tensors.

use hilbchow::exactalg::{Field, NCPoly};
use hilbchow::normmap::{dp_normalize, gamma_n, tau_combination, ts_mul, DpExpr};

fn main() -> hilbchow::Result<()> {
    let q = Field::Rational;
    for e in ["x1^[1]*x1^[1]", "(2*x1)^[3]", "(x1 + x2)^[2]", "(x1*x2)^[1]*x1^[2]*x1^[1]"] {
        let c = dp_normalize(&DpExpr::parse(q, e)?);
        println!("{e}  =  {c}");
    }

    let c = dp_normalize(&DpExpr::parse(q, "(x1 + x2)^[2]")?);
    println!("\ntau: {}", tau_combination(&c, 2)?);

    let a = NCPoly::parse(q, "x1 + x2")?;
    let b = NCPoly::parse(q, "x1*x2 - 1")?;
    let lhs = ts_mul(&gamma_n(&a, 2), &gamma_n(&b, 2))?;
    let rhs = gamma_n(&(&a * &b), 2);
    println!("\ngamma2(a) gamma2(b) = {lhs}");
    println!("gamma2(ab) equal: {}", lhs == rhs);

    let f2 = Field::Prime(2);
    println!("\nover F 2: x1^[1]*x1^[1] = {}", dp_normalize(&DpExpr::parse(f2, "x1^[1]*x1^[1]")?));
    Ok(())
}
