//! Faces of the hull of a lattice module, up to translation.

use cellres::cli::binomial_string;
use cellres::lattice::{edges_are_primitive_check, graver_basis, local_hull, orbit_representatives, LatticeData};

fn main() -> cellres::Result<()> {
    let l = LatticeData::from_kernel(&[vec![0, 1, 2, 3, 4], vec![4, 3, 2, 1, 0]], 5)?;
    let h = local_hull(&l, 3)?;
    println!("stable at radius {}; faces through 0: {:?}", h.radius, h.f_vector());

    let reps = orbit_representatives(&h);
    let mut orbits = vec![0; h.f_vector().len()];
    for r in &reps {
        orbits[r.dim] += 1;
    }
    println!("orbits per dimension {orbits:?}");
    for r in reps.iter().filter(|r| r.dim == 1) {
        let u = r.vertices.iter().find(|v| !v.is_zero()).unwrap();
        println!("  degree {}: {}", r.label.sum(), binomial_string(u));
    }
    println!("edges primitive: {}", edges_are_primitive_check(&h, &graver_basis(&l)));
    Ok(())
}
