use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use wedderga_core::constructions::{named, semidirect_kernel, CATALOG};
use wedderga_core::groupalgebra::{e_ghk, strong_shoda_pairs};
use wedderga_core::io::{decomposition_report, group_entry, parse_group_file, render_group_file, GroupEntry, GroupFile};
use wedderga_core::permgroup::Permutation;

#[test]
fn catalog_round_trips_through_group_files() {
    let entries: Vec<GroupEntry> = CATALOG
        .iter()
        .filter(|(_, order, _)| *order <= 72)
        .map(|(label, _, _)| group_entry(label, &named(label).unwrap()))
        .collect();
    let file = GroupFile { entries };
    let parsed = parse_group_file(&render_group_file(&file)).unwrap();
    assert_eq!(parsed, file);
    for e in &parsed.entries {
        let g = e.build(2000).unwrap();
        assert_eq!(g.order(), named(&e.label).unwrap().order(), "{}", e.label);
    }
}

#[test]
fn file_groups_decompose_like_catalog_groups() {
    for label in ["D8", "Q8xC3", "C5semiC8"] {
        let g = named(label).unwrap();
        let back = parse_group_file(&render_group_file(&GroupFile { entries: vec![group_entry(label, &g)] }))
            .unwrap()
            .entries[0]
            .build(2000)
            .unwrap();
        let a = decomposition_report(&g, label, 2000).unwrap().summands();
        let b = decomposition_report(&back, label, 2000).unwrap().summands();
        assert_eq!(a, b, "{label}");
    }
}

#[test]
fn idempotents_of_a_semidirect_family_sum_to_one() {
    for (m, n, k) in [(7, 6, 2), (5, 4, 1), (9, 6, 3)] {
        let g = semidirect_kernel(m, n, k).unwrap();
        let en = strong_shoda_pairs(&g, 2000).unwrap();
        assert!(en.is_complete());
        let mut total = wedderga_core::groupalgebra::GroupAlgebraElement::zero(&g);
        for p in &en.pairs {
            let e = e_ghk(&g, &p.h, &p.k).unwrap();
            assert!(e.is_idempotent() && e.is_central());
            total = total.add(&e);
        }
        assert_eq!(total.coeff(0), BigRational::one());
        assert_eq!(total.support_len(), 1);
    }
}

fn perm(d: usize) -> impl Strategy<Value = Permutation> {
    Just((0..d as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn entry() -> impl Strategy<Value = GroupEntry> {
    (1usize..7).prop_flat_map(|d| {
        (Just(d), prop::collection::vec(perm(d), 1..4)).prop_map(|(degree, generators)| GroupEntry {
            label: String::new(),
            degree,
            generators,
        })
    })
}

proptest! {
    #[test]
    fn group_file_round_trip(mut entries in prop::collection::vec(entry(), 1..5)) {
        for (i, e) in entries.iter_mut().enumerate() {
            e.label = format!("G{i}");
        }
        let file = GroupFile { entries };
        let text = render_group_file(&file);
        let parsed = parse_group_file(&text).unwrap();
        prop_assert_eq!(&parsed, &file);
        prop_assert_eq!(render_group_file(&parsed), text);
    }

    #[test]
    fn dimensions_sum_to_order(gens in prop::collection::vec(any::<prop::sample::Index>(), 1..3)) {
        // subgroups of S4 generated by random elements
        let all = named("S4").unwrap();
        let picks: Vec<Permutation> = gens.iter().map(|i| all.element(i.index(all.order())).clone()).collect();
        let g = wedderga_core::permgroup::FiniteGroup::from_generators(all.degree(), &picks, 2000).unwrap();
        let r = decomposition_report(&g, "sub", 2000).unwrap();
        prop_assert_eq!(r.total_dimension(), g.order() as u64);
    }
}
