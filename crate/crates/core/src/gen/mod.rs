//! Generators: brute-force poset enumeration, downset lattices, and
//! seeded random instances for the other modules.
//!
//! Everything here is deterministic: random generators take an explicit
//! seed and use the crate's own [`crate::rng`] stream, so a reported
//! failure can always be replayed.

pub mod catalog;
pub mod families;

use thiserror::Error;

use crate::bitset::ElemSet;
use crate::islands::{Board, CellRect, HeightGrid, IslandSystem};
use crate::lattice::Lattice;
use crate::rng::Rng;

pub use catalog::{catalog_entry, catalog_names, named_lattices, CatalogEntry, CatalogItem};
pub use families::{random_circle_family, FamilyOptions};

/// Errors from generators.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("{what} supports at most {cap}, got {value}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("no admissible instance within {attempts} attempts")]
    RejectionBudgetExceeded { attempts: u32 },
    #[error("{detail}")]
    UnsupportedOptions { detail: String },
}

/// Largest ground set for exhaustive poset enumeration.
pub const MAX_POSET_ELEMENTS: usize = 5;

/// A finite partial order on `0..n`, stored as per-element down-sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    below: Vec<u32>,
}

impl Poset {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether `a <= b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b] & (1u32 << a) != 0
    }

    /// The antichain on `k` elements.
    pub fn antichain(k: usize) -> Poset {
        Poset {
            n: k,
            below: (0..k).map(|i| 1u32 << i).collect(),
        }
    }

    /// The chain `0 < 1 < ... < k-1`.
    pub fn chain(k: usize) -> Poset {
        Poset {
            n: k,
            below: (0..k).map(|i| (1u32 << (i + 1)) - 1).collect(),
        }
    }
}

/// Lazily yields every labelled poset on `k` elements by scanning all
/// `2^(k(k-1))` relation masks and keeping the partial orders.  `k` is
/// capped at [`MAX_POSET_ELEMENTS`].
pub fn all_posets(k: usize) -> Result<PosetIter, GenError> {
    if k == 0 || k > MAX_POSET_ELEMENTS {
        return Err(GenError::CapExceeded {
            what: "poset enumeration",
            value: k,
            cap: MAX_POSET_ELEMENTS,
        });
    }
    Ok(PosetIter {
        k,
        next_mask: 0,
        end: 1u64 << (k * (k - 1)),
    })
}

/// Iterator behind [`all_posets`].
pub struct PosetIter {
    k: usize,
    next_mask: u64,
    end: u64,
}

impl Iterator for PosetIter {
    type Item = Poset;

    fn next(&mut self) -> Option<Poset> {
        let k = self.k;
        'scan: while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            // Bit b of `mask` is the b-th ordered pair (i, j), i != j,
            // in row-major order.
            let mut below = vec![0u32; k];
            let mut bit = 0;
            for j in 0..k {
                below[j] |= 1u32 << j;
            }
            for i in 0..k {
                for j in 0..k {
                    if i == j {
                        continue;
                    }
                    if mask & (1u64 << bit) != 0 {
                        below[j] |= 1u32 << i;
                    }
                    bit += 1;
                }
            }
            for i in 0..k {
                for j in 0..k {
                    if i == j {
                        continue;
                    }
                    if below[j] & (1u32 << i) != 0 {
                        // Antisymmetry, then transitivity of i <= j.
                        if below[i] & (1u32 << j) != 0 {
                            continue 'scan;
                        }
                        if below[j] & below[i] != below[i] {
                            continue 'scan;
                        }
                    }
                }
            }
            return Some(Poset { n: k, below });
        }
        None
    }
}

/// The lattice of down-closed subsets of a poset, ordered by inclusion,
/// with each element's subset mask.  Downset lattices are distributive.
pub fn downset_lattice(p: &Poset) -> (Lattice, Vec<u32>) {
    let mut masks: Vec<u32> = (0u32..(1u32 << p.n))
        .filter(|s| (0..p.n).all(|x| s & (1 << x) == 0 || s & p.below[x] == p.below[x]))
        .collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    let n = masks.len();
    let mut rows = Vec::with_capacity(n);
    for &m in &masks {
        rows.push(ElemSet::from_indices(
            n,
            masks
                .iter()
                .enumerate()
                .filter(|&(_, &other)| m & !other == 0)
                .map(|(j, _)| j),
        ));
    }
    let lattice =
        Lattice::from_leq_rows(n, rows).expect("downsets are closed under union and intersection");
    (lattice, masks)
}

/// A uniformly random height grid with heights in `0..=max_height`.
pub fn random_height_grid(rng: &mut Rng, cols: usize, rows: usize, max_height: i64) -> HeightGrid {
    let board = Board::new(cols, rows).expect("dimensions are positive");
    let mut grid = HeightGrid::new(board, 0);
    for y in 0..rows {
        for x in 0..cols {
            grid.set(x, y, rng.below(max_height as u64 + 1) as i64);
        }
    }
    grid
}

/// Grows a random laminar island system on the board: starting from the
/// full board, repeatedly proposes a random sub-rectangle and keeps it
/// when it nests with or stays grid-disjoint from every member.
pub fn random_laminar_system(
    rng: &mut Rng,
    cols: usize,
    rows: usize,
    proposals: u32,
) -> IslandSystem {
    let board = Board::new(cols, rows).expect("dimensions are positive");
    let mut rects = vec![board.full_rect()];
    for _ in 0..proposals {
        let x1 = rng.below(cols as u64) as usize;
        let y1 = rng.below(rows as u64) as usize;
        let x2 = x1 + rng.below((cols - x1) as u64) as usize;
        let y2 = y1 + rng.below((rows - y1) as u64) as usize;
        let cand = CellRect { x1, y1, x2, y2 };
        let fits = rects.iter().all(|r| {
            r.contains(&cand) || cand.contains(r) || crate::islands::grids_disjoint(r, &cand)
        });
        if fits && !rects.contains(&cand) {
            rects.push(cand);
        }
    }
    IslandSystem::new(board, rects).expect("proposals stay on the board")
}
