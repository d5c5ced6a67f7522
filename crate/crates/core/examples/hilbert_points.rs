//! Points of the Hilbert scheme as pointed representations with a cyclic
//! vector, and the round trip through left ideals.

use hilbchow::exactalg::{Field, Matrix};
use hilbchow::harness::Canonical;
use hilbchow::hilbpts::{
    ideal_to_triple, krylov_basis, span_dimension, stabilizer_is_trivial, triple_to_ideal,
    triples_equivalent, PointedRep,
};
use hilbchow::repscheme::{AlgebraPresentation, RepPoint};

fn main() -> hilbchow::Result<()> {
    let q = Field::Rational;
    let pres = AlgebraPresentation::free(q, 2)?;
    let a = Matrix::from_i64(q, &[&[0, 0, 1], &[1, 0, 0], &[0, 0, 0]])?;
    let b = Matrix::from_i64(q, &[&[2, 0, 0], &[0, 0, 0], &[0, 1, 0]])?;
    let pt = PointedRep::new(RepPoint::new(vec![a, b])?, vec![q.one(), q.zero(), q.zero()])?;

    let (words, _) = krylov_basis(&pt);
    let words: Vec<String> = words.iter().map(ToString::to_string).collect();
    println!("span dimension {} via words {}", span_dimension(&pt), words.join(" "));
    println!("stabilizer trivial: {}", stabilizer_is_trivial(&pt)?);

    let ideal = triple_to_ideal(&pt)?;
    println!("\nquotient presentation:\n{}", ideal.to_canonical());
    let back = ideal_to_triple(&pres, &ideal)?;
    let g = triples_equivalent(&pt, &back)?.expect("round trip gives an equivalent triple");
    println!("intertwiner {g}");

    let nilpotent = RepPoint::new(vec![Matrix::from_i64(q, &[&[0, 1], &[0, 0]])?, Matrix::zero(q, 2)])?;
    let not_cyclic = PointedRep::new(nilpotent, vec![q.one(), q.zero()])?;
    println!("\nkernel vector of a nilpotent pair spans dimension {}", span_dimension(&not_cyclic));
    if let Err(e) = triple_to_ideal(&not_cyclic) {
        println!("triple_to_ideal: {e}");
    }
    Ok(())
}
