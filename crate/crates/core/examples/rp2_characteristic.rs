//! The Stanley-Reisner ideal of the six-vertex RP^2. The dual complex of
//! six pentagons resolves it over Q but not over F_2; the hull polytope is
//! a resolution over both.

use cellres::complex::LabeledCellComplex;
use cellres::geometry::hull::hull_faces;
use cellres::input::{parse_input, Payload};
use cellres::resolution::{betti_numbers, verify_resolution};
use cellres::Field;

fn main() -> cellres::Result<()> {
    let Payload::Ideal(gens) = parse_input(include_str!("../data/rp2.ideal"))?.payload else {
        unreachable!()
    };
    let x = LabeledCellComplex::from_text(include_str!("../data/rp2_pentagons.cells"))?;
    println!("pentagon complex {:?}", x.f_vector());
    for field in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
        println!("  over {field}: {:?}", verify_resolution(&x, &gens, field)?);
    }

    let faces = hull_faces(&gens, None)?;
    let f = faces.f_vector();
    println!("hull polytope {f:?}, {} facets", f[f.len() - 2]);
    let hull = LabeledCellComplex::hull(&gens)?;
    for field in [Field::Rational, Field::Prime(2)] {
        println!("  Betti over {field}: {:?}", betti_numbers(&hull, &gens, field)?.totals());
    }
    Ok(())
}
