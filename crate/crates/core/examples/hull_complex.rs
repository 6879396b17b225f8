//! Hull complex of <a^2 b, a c, b^2, b c^2>: two triangles sharing an edge.

use cellres::complex::LabeledCellComplex;
use cellres::input::{parse_input, Payload};
use cellres::resolution::{cellular_free_complex, is_minimal};

fn main() -> cellres::Result<()> {
    let Payload::Ideal(gens) = parse_input(include_str!("../data/two_triangles.ideal"))?.payload else {
        unreachable!()
    };
    let hull = LabeledCellComplex::hull(&gens)?;
    println!("f-vector {:?}, minimal: {}", hull.f_vector(), is_minimal(&hull));
    for c in hull.cells() {
        println!("  {:?}  degree {}", c.vertices, c.label);
    }

    let f = cellular_free_complex(&hull);
    println!("ranks {:?}", f.ranks());
    print!("{}", f.to_text());
    Ok(())
}
