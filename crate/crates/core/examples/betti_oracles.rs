//! Three independent routes to the same multigraded Betti numbers.

use cellres::complex::LabeledCellComplex;
use cellres::resolution::{betti_hochster_table, betti_numbers, betti_taylor_oracle};
use cellres::{Field, GeneratorSet};

fn main() -> cellres::Result<()> {
    let gens = GeneratorSet::from_rows(3, &[&[3, 1, 0], &[1, 2, 1], &[0, 3, 2], &[2, 0, 2], &[1, 1, 3]])?.minimalize();
    let hull = LabeledCellComplex::hull(&gens)?;
    for field in [Field::Rational, Field::Prime(2)] {
        let from_hull = betti_numbers(&hull, &gens, field)?;
        let taylor = betti_taylor_oracle(&gens, field)?;
        let hochster = betti_hochster_table(&gens, field)?;
        println!("over {field}: totals {:?}", from_hull.totals());
        println!("  taylor agrees: {}, hochster agrees: {}", taylor == from_hull, hochster == from_hull);
    }
    print!("{}", betti_numbers(&hull, &gens, Field::Rational)?);
    Ok(())
}
