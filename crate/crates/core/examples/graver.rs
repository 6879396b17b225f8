//! Primitive vectors of the lattice of the rational normal quartic.

use cellres::cli::binomial_string;
use cellres::lattice::{graver_basis, graver_brute_force, LatticeData};

fn main() -> cellres::Result<()> {
    let l = LatticeData::from_kernel(&[vec![0, 1, 2, 3, 4], vec![4, 3, 2, 1, 0]], 5)?;
    let g = graver_basis(&l);
    println!("{} primitive vectors", g.len());
    for v in g.iter().filter(|v| v.iter().find(|&&e| e != 0).is_some_and(|&e| e < 0)) {
        println!("  {v:>16}   {}", binomial_string(v));
    }
    let small: Vec<_> = g.iter().filter(|v| v.max_norm() <= 2).cloned().collect();
    println!("matches brute force in the radius-2 box: {}", small == graver_brute_force(&l, 2));
    Ok(())
}
