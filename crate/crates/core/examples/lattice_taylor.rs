//! The lattice Taylor complex on a finite order ideal of cosets, checked
//! against an unrolled count.

use cellres::lattice::{lattice_taylor, taylor_count_unrolled, LatticeData};
use cellres::{ExponentVector, Field};

fn main() -> cellres::Result<()> {
    let l = LatticeData::from_kernel(&[vec![1, 1, 1]], 3)?;
    let q = l.order_ideal_closure(&[ExponentVector::from([3, 0, 0])]);
    println!("{} cosets", q.len());
    let t = lattice_taylor(&l, &q)?;
    println!("ranks {:?}, d^2 = 0: {}", t.ranks(), t.is_complex());
    for a in &q {
        let here: Vec<usize> =
            t.degrees.iter().map(|d| d.iter().filter(|x| l.same_coset(x, a)).count()).collect();
        let unrolled: Vec<usize> =
            (1..=here.len()).map(|i| taylor_count_unrolled(&l, a, i)).collect::<cellres::Result<_>>()?;
        println!("  {a}: {here:?} vs {unrolled:?}, exact: {}", t.is_exact_at(&l, a, Field::Rational));
    }
    Ok(())
}
