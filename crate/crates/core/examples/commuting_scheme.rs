//! The representation scheme of `k[x,y]` in dimension 2 is the commuting
//! scheme: four quadrics in the eight entries of two generic matrices.

use hilbchow::exactalg::{Field, Matrix};
use hilbchow::repscheme::{is_representation, rep_ideal, AlgebraPresentation};

fn main() -> hilbchow::Result<()> {
    let q = Field::Rational;
    let pres = AlgebraPresentation::polynomial_ring(q, 2)?;
    let ideal = rep_ideal(&pres, 2)?;
    println!("{} generators:", ideal.generators().len());
    for g in ideal.generators() {
        println!("  {g}");
    }

    let x = Matrix::from_i64(q, &[&[1, 2], &[0, 1]])?;
    let y = Matrix::from_i64(q, &[&[3, 4], &[0, 3]])?;
    let z = Matrix::from_i64(q, &[&[0, 1], &[1, 0]])?;
    for (name, pair) in [("(x, y)", [x.clone(), y]), ("(x, z)", [x, z])] {
        let mats = pair.to_vec();
        println!(
            "{name}: representation {}, ideal vanishes {}",
            is_representation(&pres, &mats)?,
            ideal.vanishes_at(&mats)?
        );
    }
    Ok(())
}
