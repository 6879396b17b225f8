//! Reduced homology of a six-vertex RP^2 over different fields.

use cellres::complex::LabeledCellComplex;
use cellres::homology::reduced_homology;
use cellres::{ExponentVector, Field};

fn main() -> cellres::Result<()> {
    let triangles: Vec<Vec<usize>> = [
        [0, 1, 2], [0, 1, 5], [0, 2, 4], [0, 3, 4], [0, 3, 5],
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [2, 3, 5], [2, 4, 5],
    ]
    .iter()
    .map(|t| t.to_vec())
    .collect();
    let labels = (0..6).map(|i| ExponentVector::unit(6, i)).collect();
    let x = LabeledCellComplex::simplicial(6, labels, &triangles)?;
    println!("f-vector {:?}", x.f_vector());
    for field in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
        println!("over {field}: reduced Betti {:?}", reduced_homology(&x, field).ranks);
    }
    Ok(())
}
