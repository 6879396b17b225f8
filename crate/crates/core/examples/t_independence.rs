//! The face poset does not depend on t once t exceeds (n+1)!, and signs
//! of determinants in t^a are read off leading terms.

use cellres::geometry::hull::{choose_t, hull_faces, t_independence_check};
use cellres::geometry::{det_laurent, det_sign_laurent};
use cellres::GeneratorSet;
use num_bigint::BigInt;

fn main() -> cellres::Result<()> {
    let gens = GeneratorSet::from_rows(3, &[&[2, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 2]])?;
    println!("default t = {}", choose_t(3));
    println!("posets agree at t and t+1: {}", t_independence_check(&gens)?);
    for t in [2, 3, 25, 1000] {
        println!("  t = {t}: bounded f-vector {:?}", hull_faces(&gens, Some(&BigInt::from(t)))?.f_vector());
    }

    let m = vec![vec![2, 0, 1], vec![0, 1, 3], vec![1, 2, 0]];
    println!("det = {:?}, eventual sign {}", det_laurent(&m).terms(), det_sign_laurent(&m));
    Ok(())
}
