//! Monomials x_p(1)^u1 x_p(2)^u2 x_p(3)^u3 over all permutations p: the hull
//! is a hexagon, and its largest cell meets the n! vertex bound.

use cellres::complex::LabeledCellComplex;
use cellres::resolution::{betti_numbers, is_minimal};
use cellres::{ExponentVector, Field, GeneratorSet};

fn permutations(u: &[i64]) -> Vec<ExponentVector> {
    if u.len() <= 1 {
        return vec![ExponentVector::new(u.to_vec())];
    }
    let mut out = Vec::new();
    for i in 0..u.len() {
        let mut rest = u.to_vec();
        let head = rest.remove(i);
        for p in permutations(&rest) {
            let mut v = vec![head];
            v.extend(p.coords());
            out.push(ExponentVector::new(v));
        }
    }
    out
}

fn main() -> cellres::Result<()> {
    for u in [vec![0, 1, 2], vec![1, 3, 4]] {
        let gens = GeneratorSet::new(3, permutations(&u))?;
        let hull = LabeledCellComplex::hull(&gens)?;
        println!(
            "u = {u:?}: f-vector {:?}, minimal {}, Betti {:?}, largest cell {} of 6",
            hull.f_vector(),
            is_minimal(&hull),
            betti_numbers(&hull, &gens, Field::Rational)?.totals(),
            hull.max_cell_size()
        );
    }
    Ok(())
}
