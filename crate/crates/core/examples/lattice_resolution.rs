//! Hull resolution of a lattice ideal, and its minimal Betti numbers.

use cellres::lattice::{local_hull, quotient_resolution, LatticeData};
use cellres::Field;

fn main() -> cellres::Result<()> {
    for (name, l) in [
        ("ker(1 1 1)", LatticeData::from_kernel(&[vec![1, 1, 1]], 3)?),
        ("quartic", LatticeData::from_kernel(&[vec![0, 1, 2, 3, 4], vec![4, 3, 2, 1, 0]], 5)?),
    ] {
        let h = local_hull(&l, 3)?;
        let (eq, q) = quotient_resolution(&h, &l, Field::Rational)?;
        println!("{name}");
        println!("  equivariant ranks {:?}, terms distinct: {}", eq.ranks(), eq.terms_are_distinct());
        println!("  minimal: {}", q.is_minimal());
        let betti = q.betti(&l, Field::Rational);
        println!("  minimal Betti totals {:?}", betti.totals());
        for (i, b, v) in betti.entries() {
            println!("    beta_{i} at {b}: {v}");
        }
    }
    Ok(())
}
