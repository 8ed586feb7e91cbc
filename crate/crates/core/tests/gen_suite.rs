//! Generator tests: poset enumeration counts, downset lattices, seeded
//! random structures, and the frozen shape of the built-in catalog.

use laminar_core::cd::{is_cd_independent, is_maximal, size_bound};
use laminar_core::circles::Mode;
use laminar_core::gen::{
    all_posets, catalog_entry, catalog_names, downset_lattice, named_lattices,
    random_circle_family, random_height_grid, random_laminar_system, CatalogItem, FamilyOptions,
    GenError, Poset,
};
use laminar_core::props::is_distributive;
use laminar_core::rng::Rng;
use laminar_core::ElemSet;

#[test]
fn poset_counts_match_the_known_sequence() {
    // Partial orders on k labelled points: 1, 3, 19, 219, 4231.
    let counts: Vec<usize> = (1..=5)
        .map(|k| all_posets(k).unwrap().count())
        .collect();
    assert_eq!(counts, vec![1, 3, 19, 219, 4231]);
}

#[test]
fn poset_bounds_are_rejected() {
    assert!(matches!(all_posets(0), Err(GenError::CapExceeded { .. })));
    assert!(matches!(all_posets(6), Err(GenError::CapExceeded { .. })));
}

#[test]
fn enumerated_relations_are_partial_orders() {
    for p in all_posets(3).unwrap() {
        for a in 0..p.n() {
            assert!(p.leq(a, a));
            for b in 0..p.n() {
                if a != b && p.leq(a, b) {
                    assert!(!p.leq(b, a), "antisymmetry");
                }
                for c in 0..p.n() {
                    if p.leq(a, b) && p.leq(b, c) {
                        assert!(p.leq(a, c), "transitivity");
                    }
                }
            }
        }
    }
}

#[test]
fn downset_lattices_are_distributive() {
    for k in 1..=4 {
        for p in all_posets(k).unwrap() {
            let (lat, masks) = downset_lattice(&p);
            assert!(is_distributive(&lat).holds());
            // Downsets are sorted by size, so bottom is the empty set and
            // top the whole ground set.
            assert_eq!(masks[lat.bottom()], 0);
            assert_eq!(masks[lat.top()], (1u32 << k) - 1);
        }
    }
}

#[test]
fn chain_and_antichain_shapes() {
    let (chain, _) = downset_lattice(&Poset::chain(4));
    assert_eq!(chain.len(), 5);
    assert_eq!(chain.length(), 4);
    assert_eq!(chain.atoms().len(), 1);

    let (cube, _) = downset_lattice(&Poset::antichain(4));
    assert_eq!(cube.len(), 16);
    assert_eq!(cube.length(), 4);
    assert_eq!(cube.atoms().len(), 4);
}

#[test]
fn seeded_grids_and_systems_are_deterministic() {
    let grid_a = random_height_grid(&mut Rng::new(7), 4, 3, 4);
    let grid_b = random_height_grid(&mut Rng::new(7), 4, 3, 4);
    assert_eq!(grid_a, grid_b);
    let grid_c = random_height_grid(&mut Rng::new(8), 4, 3, 4);
    assert_ne!(grid_a, grid_c);
    for y in 0..3 {
        for x in 0..4 {
            assert!((0..=4).contains(&grid_a.get(x, y)));
        }
    }

    let sys_a = random_laminar_system(&mut Rng::new(7), 4, 3, 16);
    let sys_b = random_laminar_system(&mut Rng::new(7), 4, 3, 16);
    assert_eq!(sys_a, sys_b);
    assert!(sys_a.is_laminar().holds());
    assert!(sys_a.contains_board());
}

#[test]
fn family_generator_honours_its_flags() {
    let sep = FamilyOptions {
        force_separated: true,
        ..FamilyOptions::default()
    };
    for seed in 0..6 {
        let f = random_circle_family(seed, 5, Mode::Collinear, &sep).unwrap();
        assert_eq!(f.len(), 5);
        assert!(f.is_separated().unwrap().holds(), "seed {seed}");
    }

    let plain = FamilyOptions::default();
    let f = random_circle_family(11, 4, Mode::General, &plain).unwrap();
    assert_eq!(f.len(), 4);
    for (i, c) in f.circles().iter().enumerate() {
        assert_eq!(c.id, format!("c{i}"));
        assert!(c.r.numer().sign() != num::bigint::Sign::Minus);
    }

    // Shape flags make no sense for general families.
    let concave = FamilyOptions {
        force_concave: true,
        ..FamilyOptions::default()
    };
    assert!(matches!(
        random_circle_family(1, 4, Mode::General, &concave),
        Err(GenError::UnsupportedOptions { .. })
    ));
    assert!(matches!(
        random_circle_family(1, 40, Mode::General, &plain),
        Err(GenError::CapExceeded { .. })
    ));
}

#[test]
fn catalog_names_are_stable() {
    assert_eq!(
        catalog_names(),
        vec![
            "chain2",
            "chain3",
            "chain4",
            "chain5",
            "chain6",
            "chain7",
            "chain8",
            "b2",
            "b3",
            "b4",
            "m3",
            "n5",
            "n5top",
            "circles3",
            "circles-gap",
            "circles-pinwheel",
        ]
    );
    assert!(catalog_entry("nope").is_none());
    for item in named_lattices() {
        if let CatalogItem::Ready(e) = item {
            assert!(!e.about.is_empty());
        }
    }
}

#[test]
fn catalog_chain_entries_have_chain_shape() {
    for k in 2..=8usize {
        let entry = catalog_entry(&format!("chain{k}")).unwrap();
        assert_eq!(entry.lattice.len(), k);
        assert_eq!(entry.lattice.length(), k - 1);
    }
    let b4 = catalog_entry("b4").unwrap();
    assert_eq!(b4.lattice.len(), 16);
    assert_eq!(b4.labels.unwrap().len(), 16);
}

#[test]
fn gap_entry_frozen_shape() {
    let entry = catalog_entry("circles-gap").expect("gap entry realizes");
    let family = entry.family.expect("built from circles");
    assert_eq!(family.len(), 5);
    assert_eq!(entry.lattice.len(), 14);
    // The middle circle encapsulates both small ones, so its singleton is
    // not closed: only four subsets are atoms.
    assert_eq!(entry.lattice.atoms().len(), 4);
    assert_eq!(entry.lattice.length(), 5);
    assert_eq!(size_bound(&entry.lattice), 9);
    assert_eq!(entry.deficient_maximal.unwrap().len(), 8);
}

#[test]
fn pinwheel_entry_frozen_shape() {
    let entry = catalog_entry("circles-pinwheel").expect("pinwheel entry realizes");
    let family = entry.family.expect("built from circles");
    assert_eq!(family.len(), 9);
    assert_eq!(family.mode(), Mode::General);
    let lat = &entry.lattice;
    assert_eq!(lat.len(), 235);
    assert_eq!(lat.atoms().len(), 9);
    assert_eq!(lat.length(), 9);
    assert_eq!(size_bound(lat), 18);

    let witness = entry.deficient_maximal.expect("records its undersized set");
    assert_eq!(witness.len(), 17);
    let witness = ElemSet::from_indices(lat.len(), witness.iter().copied());
    assert!(is_cd_independent(lat, &witness).holds());
    assert!(is_maximal(lat, &witness).unwrap());
}
