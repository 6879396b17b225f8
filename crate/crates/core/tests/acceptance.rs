//! End-to-end acceptance checks, one line per criterion.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use cellres::cli::binomial_string;
use cellres::complex::{check_incidence, LabeledCellComplex, OrderIdealSpec};
use cellres::geometry::hull::{hull_faces, t_independence_check};
use cellres::geometry::det_sign_laurent;
use cellres::homology::reduced_homology;
use cellres::lattice::{
    graver_basis, graver_brute_force, lattice_taylor, local_hull, orbit_representatives, quotient_resolution,
    taylor_count_unrolled, LatticeData,
};
use cellres::resolution::{
    betti_hochster_table, betti_numbers, betti_taylor_oracle, cellular_free_complex, is_minimal, verify_resolution,
    Verdict,
};
use cellres::{ExponentVector, Field, GeneratorSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FIELDS: [Field; 2] = [Field::Rational, Field::Prime(2)];

fn ideal(n: usize, rows: &[&[i64]]) -> GeneratorSet {
    GeneratorSet::from_rows(n, rows).unwrap()
}

fn ev(v: &[i64]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

fn two_triangles() -> GeneratorSet {
    ideal(3, &[&[2, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 2]])
}

const RP2_WORDS: [&str; 10] = ["abc", "abf", "ace", "ade", "adf", "bcd", "bde", "bef", "cdf", "cef"];

fn rp2() -> GeneratorSet {
    let gens = RP2_WORDS
        .iter()
        .map(|w| ExponentVector::new("abcdef".chars().map(|c| w.contains(c) as i64).collect()))
        .collect();
    GeneratorSet::new(6, gens).unwrap()
}

/// Dual of the six-vertex RP^2: vertices are its triangles, edges join
/// triangles sharing an edge, and each variable `v` gives the pentagon of
/// the five triangles avoiding `v`.
fn rp2_pentagons(gens: &GeneratorSet) -> LabeledCellComplex {
    let mut faces = Vec::new();
    for i in 0..10 {
        for j in i + 1..10 {
            let shared = RP2_WORDS[i].chars().filter(|c| RP2_WORDS[j].contains(*c)).count();
            if shared == 2 {
                faces.push((vec![i, j], 1));
            }
        }
    }
    for v in "abcdef".chars() {
        faces.push(((0..10).filter(|&i| !RP2_WORDS[i].contains(v)).collect(), 2));
    }
    LabeledCellComplex::from_cells(6, gens.gens().to_vec(), faces).unwrap()
}

fn random_ideal(rng: &mut ChaCha8Rng) -> GeneratorSet {
    let n = rng.gen_range(2..=4);
    loop {
        let m = rng.gen_range(3..=6);
        let gens: Vec<ExponentVector> =
            (0..m).map(|_| ExponentVector::new((0..n).map(|_| rng.gen_range(0..=5)).collect())).collect();
        if gens.iter().any(|g| g.is_zero()) {
            continue;
        }
        let min = GeneratorSet::new(n, gens).unwrap().minimalize();
        if min.len() >= 2 {
            return min;
        }
    }
}

/// Every coordinate column holds distinct values, so any two generators
/// differ in every coordinate.
fn random_generic_ideal(rng: &mut ChaCha8Rng) -> GeneratorSet {
    let n = rng.gen_range(2..=4);
    let m = rng.gen_range(2..=6);
    let columns: Vec<Vec<i64>> = (0..n)
        .map(|_| {
            let mut vals: Vec<i64> = (0..=9).collect();
            vals.shuffle(rng);
            vals.truncate(m);
            vals
        })
        .collect();
    let gens = (0..m).map(|i| ExponentVector::new(columns.iter().map(|c| c[i]).collect())).collect();
    GeneratorSet::new(n, gens).unwrap().minimalize()
}

fn label_multiset(x: &LabeledCellComplex) -> Vec<String> {
    let mut v: Vec<String> = x.cells().iter().map(|c| c.label.iter().map(|e| e.to_string()).collect()).collect();
    v.sort();
    v
}

fn criterion_1() {
    let gens = two_triangles();
    let x = LabeledCellComplex::hull(&gens).unwrap();
    assert_eq!(x.f_vector(), vec![4, 5, 2]);
    for f in FIELDS {
        assert_eq!(verify_resolution(&x, &gens, f).unwrap(), Verdict::Resolution);
    }
    assert!(is_minimal(&x));
    assert_eq!(betti_numbers(&x, &gens, Field::Rational).unwrap().totals(), vec![4, 5, 2]);
    let mut expected: Vec<String> = ["101", "211", "210", "112", "121", "220", "012", "022", "020", "221", "122"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    expected.sort();
    assert_eq!(label_multiset(&x), expected);
}

fn criterion_2() {
    let gens = two_triangles();
    let y = LabeledCellComplex::simplicial(3, gens.gens().to_vec(), &[vec![0, 1, 3], vec![0, 2, 3]]).unwrap();
    assert_eq!(y.f_vector(), vec![4, 5, 2]);
    let verdict = verify_resolution(&y, &gens, Field::Rational).unwrap();
    assert_eq!(verdict, Verdict::Fails { witness: ev(&[1, 2, 1]) });
}

fn criterion_3() {
    let gens = rp2();
    let x = rp2_pentagons(&gens);
    assert_eq!(x.f_vector(), vec![10, 15, 6]);
    assert!(verify_resolution(&x, &gens, Field::Rational).unwrap().is_resolution());
    assert_eq!(betti_numbers(&x, &gens, Field::Rational).unwrap().totals(), vec![10, 15, 6]);
    assert!(!verify_resolution(&x, &gens, Field::Prime(2)).unwrap().is_resolution());

    let polytope = hull_faces(&gens, None).unwrap().f_vector();
    assert_eq!(polytope.len(), 6);
    assert_eq!(polytope[4], 22);
    let hull = LabeledCellComplex::hull(&gens).unwrap();
    assert_eq!(betti_numbers(&hull, &gens, Field::Rational).unwrap().totals(), vec![10, 15, 6]);
}

fn criterion_4() {
    let gens = ideal(3, &[&[0, 1, 2], &[0, 2, 1], &[1, 0, 2], &[1, 2, 0], &[2, 0, 1], &[2, 1, 0]]);
    let x = LabeledCellComplex::hull(&gens).unwrap();
    assert_eq!(x.f_vector(), vec![6, 6, 1]);
    assert_eq!(x.cells().last().unwrap().vertices.len(), 6);
    assert!(is_minimal(&x));
    assert_eq!(betti_numbers(&x, &gens, Field::Rational).unwrap().totals(), vec![6, 6, 1]);
}

fn criterion_5() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let gens = random_ideal(&mut rng);
        let hull = LabeledCellComplex::hull(&gens).unwrap();
        for f in FIELDS {
            let b = betti_numbers(&hull, &gens, f).unwrap();
            assert_eq!(b, betti_taylor_oracle(&gens, f).unwrap(), "{gens:?} over {f}");
            assert_eq!(b, betti_hochster_table(&gens, f).unwrap(), "{gens:?} over {f}");
        }
    }
}

fn criterion_6() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..50 {
        let gens = random_generic_ideal(&mut rng);
        assert!(gens.is_pairwise_generic());
        let hull = LabeledCellComplex::hull(&gens).unwrap();
        assert_eq!(hull, LabeledCellComplex::scarf(&gens).unwrap(), "{gens:?}");
        assert!(is_minimal(&hull));
        assert!(verify_resolution(&hull, &gens, Field::Rational).unwrap().is_resolution());
    }
}

/// Determinant by plain Gaussian elimination over Q.
fn rational_det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let r = m.len();
    let mut det = BigRational::one();
    for c in 0..r {
        let Some(p) = (c..r).find(|&i| !m[i][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c].clone();
        for i in c + 1..r {
            let f = &m[i][c] / &m[c][c];
            for j in c..r {
                let d = &f * &m[c][j];
                m[i][j] -= d;
            }
        }
    }
    det
}

fn criterion_7() {
    let mut ideals = vec![
        two_triangles(),
        rp2(),
        ideal(3, &[&[0, 1, 2], &[0, 2, 1], &[1, 0, 2], &[1, 2, 0], &[2, 0, 1], &[2, 1, 0]]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    ideals.extend((0..30).map(|_| random_ideal(&mut rng)));
    ideals.extend((0..10).map(|_| random_generic_ideal(&mut rng)));
    for g in &ideals {
        assert!(t_independence_check(g).unwrap(), "{g:?}");
    }

    for _ in 0..200 {
        let r = rng.gen_range(1..=4usize);
        let e: Vec<Vec<i64>> = (0..r).map(|_| (0..r).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let t = BigRational::from_integer(BigInt::from((1..=r as i64).product::<i64>() + 1));
        let numeric: Vec<Vec<BigRational>> = e
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&k| if k >= 0 { t.pow(k as i32) } else { t.pow(-k as i32).recip() })
                    .collect()
            })
            .collect();
        let d = rational_det(numeric);
        let sign = if d.is_zero() { 0 } else if d.is_positive() { 1 } else { -1 };
        assert_eq!(det_sign_laurent(&e), sign, "{e:?}");
    }
}

fn criterion_8() {
    let a2 = LatticeData::from_kernel(&[vec![1, 1, 1]], 3).unwrap();
    let h = local_hull(&a2, 3).unwrap();
    let (_, q) = quotient_resolution(&h, &a2, Field::Rational).unwrap();
    assert_eq!(q.ranks()[1..], [3, 2]);
    assert!(!q.is_minimal());
    assert_eq!(q.betti(&a2, Field::Rational).totals(), vec![1, 2, 1]);
    let g = graver_basis(&a2);
    assert_eq!(g.len(), 6);
    assert_eq!(g, graver_brute_force(&a2, 3));

    let quartic = LatticeData::from_kernel(&[vec![0, 1, 2, 3, 4], vec![4, 3, 2, 1, 0]], 5).unwrap();
    let h = local_hull(&quartic, 3).unwrap();
    let reps = orbit_representatives(&h);
    let mut ranks = vec![0; h.f_vector().len()];
    for r in &reps {
        ranks[r.dim] += 1;
    }
    assert_eq!(ranks[1..], [9, 20, 16, 4]);
    let edges: Vec<&ExponentVector> =
        reps.iter().filter(|r| r.dim == 1).map(|r| r.vertices.iter().find(|v| !v.is_zero()).unwrap()).collect();
    let mut degrees: Vec<i64> = edges.iter().map(|u| u.positive_part().sum()).collect();
    degrees.sort();
    assert_eq!(degrees, vec![2, 2, 2, 2, 2, 2, 2, 3, 3]);
    let names: BTreeSet<String> = edges.iter().map(|u| binomial_string(u)).collect();
    assert!(names.contains("x3*x4^2 - x1*x5^2"));
    assert!(names.contains("x2^2*x3 - x1^2*x5"));
}

fn check_lattice_taylor(l: &LatticeData, q: &[ExponentVector]) {
    let t = lattice_taylor(l, q).unwrap();
    assert!(t.is_complex());
    assert!(t.is_homogeneous(l));
    for a in q {
        for (i, degs) in t.degrees.iter().enumerate() {
            let here = degs.iter().filter(|d| l.same_coset(d, a)).count();
            assert_eq!(here, taylor_count_unrolled(l, a, i + 1).unwrap(), "coset {a}, degree {i}");
        }
    }
}

fn criterion_9() {
    let a2 = LatticeData::from_kernel(&[vec![1, 1, 1]], 3).unwrap();
    check_lattice_taylor(&a2, &a2.order_ideal_closure(&[ev(&[3, 0, 0])]));
    let quartic = LatticeData::from_kernel(&[vec![0, 1, 2, 3, 4], vec![4, 3, 2, 1, 0]], 5).unwrap();
    let tops = [ev(&[0, 0, 3, 1, 0]), ev(&[0, 0, 4, 0, 0]), ev(&[0, 1, 3, 0, 0])];
    check_lattice_taylor(&quartic, &quartic.order_ideal_closure(&tops));
}

fn criterion_10() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..100 {
        let gens = random_ideal(&mut rng);
        let hull = LabeledCellComplex::hull(&gens).unwrap();
        let complexes = [hull.clone(), LabeledCellComplex::scarf(&gens).unwrap(), LabeledCellComplex::taylor(&gens).unwrap()];
        for x in &complexes {
            assert!(check_incidence(x));
            let f = cellular_free_complex(x);
            assert!(f.is_homogeneous() && f.is_complex());
        }
        for b in gens.lcm_lattice() {
            let below = hull.subcomplex(&OrderIdealSpec::Below(b.clone()));
            for field in FIELDS {
                assert!(reduced_homology(&below, field).is_zero(), "{gens:?} at {b}");
            }
        }
    }
    for l in [
        LatticeData::from_kernel(&[vec![1, 1, 1]], 3).unwrap(),
        LatticeData::from_basis(2, vec![ev(&[2, -3])]).unwrap(),
        LatticeData::from_kernel(&[vec![1, 2, 3]], 3).unwrap(),
    ] {
        let h = local_hull(&l, 3).unwrap();
        let (eq, q) = quotient_resolution(&h, &l, Field::Rational).unwrap();
        assert!(eq.is_homogeneous(&l) && q.is_homogeneous(&l));
    }
}

fn main() {
    let criteria: [(&str, fn()); 10] = [
        ("hull of a^2b, ac, b^2, bc^2", criterion_1),
        ("Y complex witness (1,2,1)", criterion_2),
        ("RP^2 pentagons and the 22-facet hull", criterion_3),
        ("permutohedron hexagon", criterion_4),
        ("hull / Taylor / Hochster Betti agreement", criterion_5),
        ("generic ideals: hull = Scarf, minimal", criterion_6),
        ("t-independence and determinant signs", criterion_7),
        ("lattice ideals: ker(1 1 1), Graver, quartic", criterion_8),
        ("lattice Taylor complex self-consistency", criterion_9),
        ("randomized invariants", criterion_10),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2}: FAIL  {name} ({secs:.2}s): {msg}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
