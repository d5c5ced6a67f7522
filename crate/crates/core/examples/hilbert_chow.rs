//! The determinant point of a representation, the Hilbert-Chow image of a
//! pointed one, and the 0-cycle in the commutative case.

use hilbchow::exactalg::{Field, Matrix, NCPoly};
use hilbchow::harness::Canonical;
use hilbchow::hilbpts::PointedRep;
use hilbchow::normmap::{cycle_extract, det_point, hc_point, law_coefficients};
use hilbchow::repscheme::{conjugate, AlgebraPresentation, RepPoint};

fn main() -> hilbchow::Result<()> {
    let q = Field::Rational;
    // The point of Hilb^2(A^2) given by the ideal (x^2, y).
    let x = Matrix::from_i64(q, &[&[0, 1], &[0, 0]])?;
    let y = Matrix::zero(q, 2);
    let pt = PointedRep::new(RepPoint::new(vec![x, y])?, vec![q.zero(), q.one()])?;
    let image = hc_point(&pt, 2)?;
    print!("{}", image.to_canonical());
    println!("equals det_point: {}", image == det_point(pt.rep(), 2)?);

    let pres = AlgebraPresentation::polynomial_ring(q, 2)?;
    print!("\ncycle:\n{}", cycle_extract(&pres, pt.rep())?.to_canonical());

    let rep = RepPoint::new(vec![Matrix::diagonal(q, &[1, 2]), Matrix::diagonal(q, &[3, 4])])?;
    let g = Matrix::from_i64(q, &[&[1, 1], &[1, 2]])?;
    let moved = conjugate(&g, &rep)?;
    print!("\nconjugated representation:\n{}", moved.to_canonical());
    print!("cycle:\n{}", cycle_extract(&pres, &moved)?.to_canonical());
    println!("det point unchanged: {}", det_point(&moved, 3)? == det_point(&rep, 3)?);

    let args = [NCPoly::one(q), NCPoly::generator(q, 0)];
    print!("\ndet(s + t x):\n{}", law_coefficients(&rep, &args)?.to_canonical());

    let rotation = RepPoint::new(vec![Matrix::from_i64(q, &[&[0, -1], &[1, 0]])?])?;
    let line = AlgebraPresentation::polynomial_ring(q, 1)?;
    print!("\nrotation:\n{}", cycle_extract(&line, &rotation)?.to_canonical());
    Ok(())
}
