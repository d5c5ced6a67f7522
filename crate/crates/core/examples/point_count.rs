//! Counting points of the Hilbert scheme over small prime fields: cyclic
//! pairs divided by the order of the general linear group.

use hilbchow::exactalg::Field;
use hilbchow::harness::{enumerate, gl_order};
use hilbchow::repscheme::AlgebraPresentation;

fn main() -> hilbchow::Result<()> {
    let budget = 1 << 24;
    println!("affine line: orbit counts should be q^n");
    for (n, q) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)] {
        let pres = AlgebraPresentation::polynomial_ring(Field::Prime(q), 1)?;
        let r = enumerate(&pres, n, budget, 4)?;
        println!(
            "  n={n} q={q}: {} cyclic pairs / {} = {}",
            r.total_cyclic_pairs, r.gl_order, r.orbit_count
        );
    }

    let free = AlgebraPresentation::free(Field::Prime(2), 2)?;
    let r = enumerate(&free, 2, budget, 4)?;
    println!(
        "free algebra on 2 generators, n=2, q=2: {} representations, {} cyclic pairs, {} points",
        r.total_rep_points, r.total_cyclic_pairs, r.orbit_count
    );
    println!("|GL_3(F_5)| = {}", gl_order(3, 5)?);
    Ok(())
}
