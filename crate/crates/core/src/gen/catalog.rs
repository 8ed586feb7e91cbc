//! A small catalog of named lattices and circle families used by tests
//! and the command-line tools.
//!
//! Entries that come from explicit cover relations always build.  The
//! two engineered circle entries (`circles-gap`, `circles-pinwheel`)
//! re-verify their advertised structure at build time; when a check
//! fails they are reported as unrealized instead of panicking, so
//! callers can surface the failure without crashing.

use super::{downset_lattice, Poset};
use crate::bitset::ElemSet;
use crate::cd;
use crate::circles::{lat_geometric, CircleFamily, CircleLattice, Mode, DEFAULT_EPS};
use crate::lattice::Lattice;

/// One catalog member.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub about: &'static str,
    pub lattice: Lattice,
    /// The circle family realizing the lattice, when there is one.
    pub family: Option<CircleFamily>,
    /// Per-element labels: subset masks of the poset ground set or of
    /// the circle family, when the lattice was built from one.
    pub labels: Option<Vec<u32>>,
    /// Elements of a maximal pairwise-compatible set that is strictly
    /// smaller than the additive size bound, when the entry has one.
    pub deficient_maximal: Option<Vec<usize>>,
}

/// A catalog slot: either a built entry or the reason it failed its
/// build-time verification.
#[derive(Debug, Clone)]
pub enum CatalogItem {
    Ready(CatalogEntry),
    Unrealized { name: &'static str, reason: String },
}

impl CatalogItem {
    pub fn name(&self) -> &'static str {
        match self {
            CatalogItem::Ready(e) => e.name,
            CatalogItem::Unrealized { name, .. } => name,
        }
    }
}

/// All catalog names, in catalog order.
pub fn catalog_names() -> Vec<&'static str> {
    named_lattices().iter().map(|item| item.name()).collect()
}

/// Builds the whole catalog.
pub fn named_lattices() -> Vec<CatalogItem> {
    let mut items = Vec::new();
    for k in 2..=8usize {
        let name: &'static str = match k {
            2 => "chain2",
            3 => "chain3",
            4 => "chain4",
            5 => "chain5",
            6 => "chain6",
            7 => "chain7",
            _ => "chain8",
        };
        let steps: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
        items.push(CatalogItem::Ready(CatalogEntry {
            name,
            about: "a chain",
            lattice: Lattice::from_covers(k, &steps).expect("chains are lattices"),
            family: None,
            labels: None,
            deficient_maximal: None,
        }));
    }
    for (name, k) in [("b2", 2), ("b3", 3), ("b4", 4)] {
        let (lattice, labels) = downset_lattice(&Poset::antichain(k));
        items.push(CatalogItem::Ready(CatalogEntry {
            name,
            about: "all subsets of a small set, ordered by inclusion",
            lattice,
            family: None,
            labels: Some(labels),
            deficient_maximal: None,
        }));
    }
    items.push(CatalogItem::Ready(CatalogEntry {
        name: "m3",
        about: "the diamond: three incomparable elements with shared bounds",
        lattice: Lattice::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
            .expect("the diamond is a lattice"),
        family: None,
        labels: None,
        deficient_maximal: None,
    }));
    items.push(CatalogItem::Ready(CatalogEntry {
        name: "n5",
        about: "the pentagon: a two-step side and a one-step side",
        lattice: pentagon(),
        family: None,
        labels: None,
        deficient_maximal: None,
    }));
    items.push(CatalogItem::Ready(CatalogEntry {
        name: "n5top",
        about: "the pentagon with an extra element on top",
        lattice: Lattice::from_covers(6, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4), (4, 5)])
            .expect("a lattice plus a new top is a lattice"),
        family: None,
        labels: None,
        deficient_maximal: None,
    }));
    items.push(build_circles3());
    items.push(build_gap());
    items.push(build_pinwheel());
    items
}

/// Looks up a built entry by name; unrealized or unknown names give `None`.
pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    named_lattices().into_iter().find_map(|item| match item {
        CatalogItem::Ready(e) if e.name == name => Some(e),
        _ => None,
    })
}

fn pentagon() -> Lattice {
    Lattice::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
        .expect("the pentagon is a lattice")
}

fn family_from(mode: Mode, spec: &[(&str, &str, &str, &str)]) -> Result<CircleFamily, String> {
    let circles = spec
        .iter()
        .map(|&(id, cx, cy, r)| {
            crate::circles::Circle::new(id, cx, cy, r)
                .ok_or_else(|| format!("bad circle literal for {id}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    CircleFamily::new(mode, circles).map_err(|e| e.to_string())
}

/// Checks that the masks name real lattice elements forming a maximal
/// pairwise-compatible set of the announced size, and returns the
/// element indices.
fn verified_maximal(
    cl: &CircleLattice,
    masks: &[u32],
    expect_size: usize,
) -> Result<Vec<usize>, String> {
    let mut elems = Vec::with_capacity(masks.len());
    for &m in masks {
        elems.push(
            cl.element_of(m)
                .ok_or_else(|| format!("mask {m:#b} is not a closed set"))?,
        );
    }
    let set = ElemSet::from_indices(cl.lattice.len(), elems.iter().copied());
    if set.len() != expect_size {
        return Err(format!("expected {expect_size} elements, got {}", set.len()));
    }
    if !cd::is_cd_independent(&cl.lattice, &set).holds() {
        return Err("witness set is not pairwise compatible".to_string());
    }
    if !cd::is_maximal(&cl.lattice, &set).map_err(|e| e.to_string())? {
        return Err("witness set is not maximal".to_string());
    }
    Ok(elems)
}

fn build_circles3() -> CatalogItem {
    let name = "circles3";
    match (|| -> Result<CatalogEntry, String> {
        let family = family_from(
            Mode::Collinear,
            &[
                ("A", "0", "0", "2"),
                ("B", "4", "0", "0.5"),
                ("C", "8", "0", "2"),
            ],
        )?;
        let cl = lat_geometric(&family, DEFAULT_EPS, 3).map_err(|e| e.to_string())?;
        if cl.lattice.len() != 7 {
            return Err(format!("expected 7 closed sets, got {}", cl.lattice.len()));
        }
        Ok(CatalogEntry {
            name,
            about: "three circles on a line whose middle member is swallowed \
                    by the hull of the outer pair",
            lattice: cl.lattice,
            family: Some(family),
            labels: Some(cl.labels),
            deficient_maximal: None,
        })
    })() {
        Ok(e) => CatalogItem::Ready(e),
        Err(reason) => CatalogItem::Unrealized { name, reason },
    }
}

/// Five collinear circles whose largest maximal compatible set stays one
/// below the additive bound.
fn build_gap() -> CatalogItem {
    let name = "circles-gap";
    match (|| -> Result<CatalogEntry, String> {
        let family = family_from(
            Mode::Collinear,
            &[
                ("L", "0", "0", "2"),
                ("m1", "3.5", "0", "0.5"),
                ("M", "4.5", "0", "1.75"),
                ("m2", "5.5", "0", "0.5"),
                ("R", "9", "0", "2"),
            ],
        )?;
        match family.is_concave(DEFAULT_EPS).map_err(|e| e.to_string())? {
            v if v.holds() => {}
            v => return Err(format!("family is not concave: {:?}", v.witness())),
        }
        let cl = lat_geometric(&family, DEFAULT_EPS, 5).map_err(|e| e.to_string())?;
        if cl.lattice.len() != 14 {
            return Err(format!("expected 14 closed sets, got {}", cl.lattice.len()));
        }
        let bound = cd::size_bound(&cl.lattice);
        if bound != 9 {
            return Err(format!("expected size bound 9, got {bound}"));
        }
        // {} {L} {m1} {L,m1} {m2} {R} {m2,R} and everything.
        let witness_masks = [0b0, 0b1, 0b10, 0b11, 0b1000, 0b10000, 0b11000, 0b11111];
        let elems = verified_maximal(&cl, &witness_masks, 8)?;
        // A maximal chain plus the atoms still attains the bound, so the
        // 8-element witness shows maximal size is not unique.
        let largest = cd::largest_maximal(&cl.lattice, cl.lattice.len())
            .map_err(|e| e.to_string())?
            .len();
        if largest != bound {
            return Err(format!("expected largest maximal size {bound}, got {largest}"));
        }
        Ok(CatalogEntry {
            name,
            about: "five collinear circles with a maximal compatible set of 8 \
                    elements, one short of the additive bound of 9 that a \
                    chain plus the atoms attains",
            lattice: cl.lattice,
            family: Some(family),
            labels: Some(cl.labels),
            deficient_maximal: Some(elems),
        })
    })() {
        Ok(e) => CatalogItem::Ready(e),
        Err(reason) => CatalogItem::Unrealized { name, reason },
    }
}

/// Nine equal circles in three crossing needles; the natural maximal
/// compatible set has 17 elements against an additive bound of 18.
fn build_pinwheel() -> CatalogItem {
    let name = "circles-pinwheel";
    match (|| -> Result<CatalogEntry, String> {
        // Three long "needles" through the origin, each with a bump circle
        // displaced off its line.  A needle's end pair and full triple are
        // closed, but the hull of two needles swallows the third's bump.
        let family = family_from(
            Mode::General,
            &[
                ("x1", "-10", "0", "0.5"),
                ("z1", "10", "0", "0.5"),
                ("y1", "5.5", "1.5", "0.5"),
                ("x2", "-6", "-12", "0.5"),
                ("z2", "6", "12", "0.5"),
                ("y2", "1", "5.5", "0.5"),
                ("x3", "-6", "12", "0.5"),
                ("z3", "6", "-12", "0.5"),
                ("y3", "-1", "5.5", "0.5"),
            ],
        )?;
        let cl = lat_geometric(&family, DEFAULT_EPS, 9).map_err(|e| e.to_string())?;
        let atoms = cl.lattice.atoms().len();
        if atoms != 9 {
            return Err(format!("expected 9 atoms, got {atoms}"));
        }
        let length = cl.lattice.length();
        if length != 9 {
            return Err(format!("expected length 9, got {length}"));
        }
        let bound = cd::size_bound(&cl.lattice);
        if bound != 18 {
            return Err(format!("expected size bound 18, got {bound}"));
        }
        // Empty set, the nine singletons, each needle's end pair and
        // full triple, and everything.
        let mut witness_masks = vec![0u32];
        witness_masks.extend((0..9).map(|i| 1u32 << i));
        witness_masks.extend([0b11, 0b111, 0b11000, 0b111000, 0b11000000, 0b111000000]);
        witness_masks.push(0b111111111);
        let elems = verified_maximal(&cl, &witness_masks, 17)?;
        Ok(CatalogEntry {
            name,
            about: "nine circles in three crossing needles: a maximal \
                    compatible set of 17 elements against an additive bound \
                    of 18",
            lattice: cl.lattice,
            family: Some(family),
            labels: Some(cl.labels),
            deficient_maximal: Some(elems),
        })
    })() {
        Ok(e) => CatalogItem::Ready(e),
        Err(reason) => CatalogItem::Unrealized { name, reason },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cd::PairClassification;

    fn ready(name: &str) -> CatalogEntry {
        match named_lattices().into_iter().find(|i| i.name() == name).unwrap() {
            CatalogItem::Ready(e) => e,
            CatalogItem::Unrealized { reason, .. } => panic!("{name} unrealized: {reason}"),
        }
    }

    #[test]
    fn names_are_unique_and_stable() {
        let names = catalog_names();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        assert!(names.contains(&"chain2"));
        assert!(names.contains(&"n5top"));
        assert!(names.contains(&"circles-pinwheel"));
    }

    #[test]
    fn pentagon_pair_structure() {
        let lat = catalog_entry("n5").unwrap().lattice;
        let PairClassification {
            complemented,
            mutual_pseudocomplemented,
        } = cd::classify_pairs(&lat);
        assert_eq!(complemented, vec![(1, 3), (2, 3)]);
        assert_eq!(mutual_pseudocomplemented, vec![(2, 3)]);
    }

    #[test]
    fn gap_entry_realizes() {
        let entry = ready("circles-gap");
        assert_eq!(entry.lattice.len(), 14);
        let witness = entry.deficient_maximal.unwrap();
        assert_eq!(witness.len(), 8);
        assert_eq!(cd::size_bound(&entry.lattice), 9);
    }

    #[test]
    fn pinwheel_entry_realizes() {
        let entry = ready("circles-pinwheel");
        assert_eq!(entry.deficient_maximal.unwrap().len(), 17);
        assert_eq!(cd::size_bound(&entry.lattice), 18);
    }

    #[test]
    fn cube_labels_are_subset_masks() {
        let entry = catalog_entry("b3").unwrap();
        let labels = entry.labels.unwrap();
        assert_eq!(labels.len(), 8);
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(entry.lattice.leq(i, j), labels[i] & !labels[j] == 0);
            }
        }
    }
}
