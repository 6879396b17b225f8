//! For a generic ideal the hull complex is the Scarf complex, which is the
//! smallest possible.

use cellres::complex::LabeledCellComplex;
use cellres::resolution::is_minimal;
use cellres::GeneratorSet;

fn main() -> cellres::Result<()> {
    let gens = GeneratorSet::from_rows(3, &[&[5, 0, 1], &[3, 2, 0], &[0, 5, 2], &[1, 1, 3]])?;
    println!("pairwise generic: {}", gens.is_pairwise_generic());
    let scarf = LabeledCellComplex::scarf(&gens)?;
    let hull = LabeledCellComplex::hull(&gens)?;
    let taylor = LabeledCellComplex::taylor(&gens)?;
    println!("taylor {:?}", taylor.f_vector());
    println!("scarf  {:?}", scarf.f_vector());
    println!("hull   {:?}", hull.f_vector());
    println!("hull == scarf: {}, minimal: {}", hull == scarf, is_minimal(&hull));
    Ok(())
}
