//! Trace invariants separate non-conjugate pairs of matrices and are
//! unchanged by conjugation.

use hilbchow::exactalg::{Field, Matrix, Word};
use hilbchow::repscheme::{conjugate, default_max_len, invariant_table, RepPoint};

fn main() -> hilbchow::Result<()> {
    let q = Field::Rational;
    let rep = RepPoint::new(vec![
        Matrix::from_i64(q, &[&[1, 2], &[3, 4]])?,
        Matrix::from_i64(q, &[&[0, 1], &[-1, 0]])?,
    ])?;
    let g = Matrix::from_i64(q, &[&[2, 1], &[1, 1]])?;
    let moved = conjugate(&g, &rep)?;
    let bound = default_max_len(2);
    let t = invariant_table(&rep, bound)?;
    for len in 1..=bound {
        let row: Vec<String> = Word::all_of_length(2, len)
            .iter()
            .map(|w| format!("tr {w} = {}", t.trace(w).expect("within bound")))
            .collect();
        println!("{}", row.join(", "));
    }
    println!("conjugate has the same table: {}", invariant_table(&moved, bound)? == t);
    Ok(())
}
