use cellres::complex::{check_incidence, LabeledCellComplex, OrderIdealSpec};
use cellres::homology::reduced_homology;
use cellres::lattice::{graver_basis, is_primitive, LatticeData};
use cellres::resolution::{betti_hochster_table, betti_numbers, betti_taylor_oracle, cellular_free_complex};
use cellres::{ExponentVector, Field, GeneratorSet};
use proptest::prelude::*;

fn vector(n: usize, max: i64) -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec(0..=max, n).prop_map(ExponentVector::new)
}

fn ideal() -> impl Strategy<Value = GeneratorSet> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec(vector(n, 4), 2..=5)
            .prop_filter("no unit generator", |g| g.iter().all(|v| !v.is_zero()))
            .prop_map(move |g| GeneratorSet::new(n, g).unwrap().minimalize())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn join_and_meet_are_lattice_operations(a in vector(3, 6), b in vector(3, 6)) {
        let j = a.join(&b).unwrap();
        let m = a.meet(&b).unwrap();
        prop_assert_eq!(&j, &b.join(&a).unwrap());
        prop_assert_eq!(a.join(&m).unwrap(), a.clone());
        prop_assert!(a.divides(&j).unwrap() && m.divides(&b).unwrap());
        prop_assert_eq!(a.divides(&b).unwrap(), j == b);
    }

    #[test]
    fn minimalize_gives_an_antichain(g in ideal()) {
        prop_assert!(g.is_minimal());
        prop_assert_eq!(g.minimalize(), g.clone());
    }

    #[test]
    fn text_export_round_trips(g in ideal()) {
        let x = LabeledCellComplex::hull(&g).unwrap();
        let text = x.to_text();
        let y = LabeledCellComplex::from_text(&text).unwrap();
        prop_assert_eq!(y.to_text(), text);
        prop_assert_eq!(y, x);
    }

    #[test]
    fn scarf_sits_inside_hull(g in ideal()) {
        let hull = LabeledCellComplex::hull(&g).unwrap();
        let scarf = LabeledCellComplex::scarf(&g).unwrap();
        prop_assert!(check_incidence(&hull) && check_incidence(&scarf));
        prop_assert!(scarf.is_subcomplex_of(&hull));
        let f = cellular_free_complex(&hull);
        prop_assert!(f.is_homogeneous() && f.is_complex());
    }

    #[test]
    fn hull_windows_are_acyclic(g in ideal(), seed in any::<u64>()) {
        let hull = LabeledCellComplex::hull(&g).unwrap();
        let n = g.ambient_dim();
        let b = ExponentVector::new((0..n).map(|i| ((seed >> (8 * i)) % 7) as i64).collect());
        let below = hull.subcomplex(&OrderIdealSpec::Below(b.clone()));
        if g.gens().iter().any(|a| a.divides(&b).unwrap()) {
            prop_assert!(reduced_homology(&below, Field::Prime(3)).is_zero());
        } else {
            prop_assert_eq!(below.num_cells(), 0);
        }
    }

    #[test]
    fn betti_routes_agree_over_f3(g in ideal()) {
        let f = Field::Prime(3);
        let hull = LabeledCellComplex::hull(&g).unwrap();
        let b = betti_numbers(&hull, &g, f).unwrap();
        prop_assert_eq!(&b, &betti_taylor_oracle(&g, f).unwrap());
        prop_assert_eq!(&b, &betti_hochster_table(&g, f).unwrap());
    }

    #[test]
    fn canonical_forms_ignore_lattice_shifts(
        a in 1i64..4, b in 1i64..4, c in 1i64..4,
        v in prop::collection::vec(-5i64..=5, 3),
        k in prop::collection::vec(-3i64..=3, 2),
    ) {
        let l = LatticeData::from_kernel(&[vec![a, b, c]], 3).unwrap();
        let v = ExponentVector::new(v);
        let mut shifted = v.clone();
        for (bv, &s) in l.basis().iter().zip(&k) {
            shifted = &shifted + &bv.scale(s);
        }
        prop_assert!(l.same_coset(&v, &shifted));
        prop_assert_eq!(l.canonical(&v), l.canonical(&shifted));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn graver_vectors_are_primitive(a in 1i64..4, b in 1i64..4, c in 1i64..4) {
        let l = LatticeData::from_kernel(&[vec![a, b, c]], 3).unwrap();
        let g = graver_basis(&l);
        for v in &g {
            prop_assert!(is_primitive(&l, v), "{}", v);
            prop_assert!(g.contains(&-v));
        }
    }
}
