//! Property-check tests: classifications of the named small lattices and
//! the implications that hold between the properties themselves.

use std::sync::OnceLock;

use laminar_core::gen::{all_posets, downset_lattice, Poset};
use laminar_core::props::{
    is_distributive, is_dually_slim, is_lower_semimodular, is_meet_distributive,
    jir_count_vs_length, registry, Verdict,
};
use laminar_core::Lattice;

fn pentagon() -> Lattice {
    Lattice::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap()
}

fn diamond() -> Lattice {
    Lattice::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap()
}

/// All downset lattices on up to four poset elements (242 lattices), the
/// two minimal non-distributive lattices, and a non-modular mixture.
fn pool() -> &'static Vec<Lattice> {
    static POOL: OnceLock<Vec<Lattice>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut lats = Vec::new();
        for k in 1..=4 {
            for p in all_posets(k).unwrap() {
                lats.push(downset_lattice(&p).0);
            }
        }
        lats.push(pentagon());
        lats.push(diamond());
        lats
    })
}

#[test]
fn chains_have_every_property() {
    let chain = downset_lattice(&Poset::chain(4)).0;
    assert!(is_distributive(&chain).holds());
    assert!(is_meet_distributive(&chain).holds());
    assert!(is_lower_semimodular(&chain).holds());
    assert!(is_dually_slim(&chain).holds());
    assert_eq!(jir_count_vs_length(&chain).unwrap(), (4, 4));
}

#[test]
fn pentagon_classification() {
    let n5 = pentagon();
    assert!(!is_distributive(&n5).holds());
    // The whole pentagon sits inside the interval below its top, which is
    // therefore not distributive.
    assert_eq!(is_meet_distributive(&n5), Verdict::Fails(4));
    assert!(!is_lower_semimodular(&n5).holds());
    assert!(is_dually_slim(&n5).holds());
}

#[test]
fn diamond_classification() {
    let m3 = diamond();
    assert!(!is_distributive(&m3).holds());
    assert_eq!(is_meet_distributive(&m3), Verdict::Fails(4));
    // Any two of the three atoms witness a three-element antichain of
    // meet-irreducibles together with the third.
    assert!(!is_dually_slim(&m3).holds());
    // The diamond is modular, hence lower semimodular.
    assert!(is_lower_semimodular(&m3).holds());
}

#[test]
fn cube_is_distributive_but_not_dually_slim() {
    let b3 = downset_lattice(&Poset::antichain(3)).0;
    assert!(is_distributive(&b3).holds());
    assert!(is_meet_distributive(&b3).holds());
    assert!(is_lower_semimodular(&b3).holds());
    // The three coatoms are meet-irreducible and pairwise incomparable.
    match is_dually_slim(&b3) {
        Verdict::Fails((a, b, c)) => {
            let mir = b3.mir();
            for x in [a, b, c] {
                assert!(mir.contains(x));
            }
            assert!(b3.incomparable(a, b));
            assert!(b3.incomparable(b, c));
            assert!(b3.incomparable(a, c));
        }
        Verdict::Holds => panic!("the cube should not be dually slim"),
    }
}

/// Distributive implies meet-distributive implies lower semimodular, on
/// every pool lattice.
#[test]
fn implication_chain() {
    for lat in pool() {
        let d = is_distributive(lat).holds();
        let md = is_meet_distributive(lat).holds();
        let lsm = is_lower_semimodular(lat).holds();
        assert!(!d || md, "distributive lattice not meet-distributive");
        assert!(!md || lsm, "meet-distributive lattice not lower semimodular");
    }
}

/// For dually slim lattices, lower semimodularity and meet-distributivity
/// coincide.
#[test]
fn dually_slim_collapses_the_hierarchy() {
    let mut seen_slim = 0;
    for lat in pool() {
        if !is_dually_slim(lat).holds() {
            continue;
        }
        seen_slim += 1;
        assert_eq!(
            is_lower_semimodular(lat).holds(),
            is_meet_distributive(lat).holds(),
        );
    }
    assert!(seen_slim > 50, "pool has only {seen_slim} dually slim members");
}

/// In a lower semimodular lattice all maximal chains have the same
/// length.
#[test]
fn lower_semimodular_chains_have_equal_length() {
    let mut seen = 0;
    for lat in pool() {
        if !is_lower_semimodular(lat).holds() {
            continue;
        }
        seen += 1;
        let expect = lat.length() + 1;
        for chain in lat.maximal_chains() {
            assert_eq!(chain.len(), expect);
        }
    }
    assert!(seen > 100, "pool has only {seen} lower semimodular members");
}

/// The pentagon has maximal chains of different lengths, so the previous
/// test is not vacuous.
#[test]
fn pentagon_has_unequal_chains() {
    let lens: Vec<usize> = pentagon().maximal_chains().map(|c| c.len()).collect();
    assert_eq!(lens, vec![4, 3]);
}

/// Join-irreducible count equals length exactly on the meet-distributive
/// pool members, and the check refuses the rest.
#[test]
fn jir_count_matches_length_when_meet_distributive() {
    for lat in pool() {
        if is_meet_distributive(lat).holds() {
            let (jir, length) = jir_count_vs_length(lat).unwrap();
            assert_eq!(jir, length);
        } else {
            assert!(jir_count_vs_length(lat).is_err());
        }
    }
}

#[test]
fn registry_runs_every_check_by_name() {
    let names: Vec<&str> = registry().iter().map(|c| c.name()).collect();
    assert_eq!(
        names,
        vec![
            "distributive",
            "meet-distributive",
            "lower-semimodular",
            "dually-slim",
            "jir-length"
        ]
    );
    let n5 = pentagon();
    for check in registry() {
        let report = check.check(&n5);
        assert_eq!(report.name, check.name());
    }
}
