//! A complex on the right vertices that does not support a resolution,
//! and the degree where that shows up.

use cellres::complex::{LabeledCellComplex, OrderIdealSpec};
use cellres::homology::reduced_homology;
use cellres::resolution::{verify_resolution, Verdict};
use cellres::{Field, GeneratorSet};

fn main() -> cellres::Result<()> {
    let gens = GeneratorSet::from_rows(3, &[&[2, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 2]])?;
    let y = LabeledCellComplex::from_text(include_str!("../data/y_complex.cells"))?;
    let hull = LabeledCellComplex::hull(&gens)?;

    for (name, x) in [("hull", &hull), ("Y", &y)] {
        match verify_resolution(x, &gens, Field::Rational)? {
            Verdict::Resolution => println!("{name}: resolution"),
            Verdict::Fails { witness } => {
                let below = x.subcomplex(&OrderIdealSpec::Below(witness.clone()));
                let h = reduced_homology(&below, Field::Rational);
                println!("{name}: fails at {witness}, {} cells below, reduced H0 = {}", below.num_cells(), h.get(0));
            }
        }
    }
    Ok(())
}
