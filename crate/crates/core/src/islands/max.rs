//! Extremal island counts: how many islands a board can carry at once.
//!
//! Three independent answers are provided for cross-checking:
//!
//! * [`max_islands_formula`]: the closed form `floor((m+1)(n+1)/2) - 1`;
//! * [`max_islands_oracle`]: exhaustive search over laminar families via
//!   recursive packings of grid-disjoint sub-rectangles (small boards
//!   only), returning a witness system;
//! * [`max_islands_construct`]: an explicit recursive construction that
//!   achieves the formula on every board, returning a witness height
//!   function (with [`construct_island_system`] exposing its system).

use std::collections::HashMap;

use super::{grids_disjoint, realize_heights, Board, CellRect, HeightGrid, IslandSystem, IslandsError};

/// Default cap on board cells for the exhaustive oracle.
pub const DEFAULT_ORACLE_CELL_CAP: usize = 12;

/// Closed form for the maximum number of islands on a `cols x rows` board.
pub fn max_islands_formula(cols: usize, rows: usize) -> usize {
    (cols + 1) * (rows + 1) / 2 - 1
}

fn transpose_rects(rects: &[CellRect]) -> Vec<CellRect> {
    rects
        .iter()
        .map(|r| CellRect {
            x1: r.y1,
            y1: r.x1,
            x2: r.y2,
            y2: r.x2,
        })
        .collect()
}

struct Search {
    memo: HashMap<(usize, usize), (usize, Vec<CellRect>)>,
}

impl Search {
    /// Best island count and witness for a `w x h` board, memoized on the
    /// orientation with `w <= h`.
    fn best(&mut self, w: usize, h: usize) -> (usize, Vec<CellRect>) {
        if w > h {
            let (count, rects) = self.best(h, w);
            return (count, transpose_rects(&rects));
        }
        if let Some(hit) = self.memo.get(&(w, h)) {
            return hit.clone();
        }
        let full = CellRect {
            x1: 0,
            y1: 0,
            x2: w - 1,
            y2: h - 1,
        };
        // Every proper sub-rectangle, lexicographically.
        let mut rects = Vec::new();
        for x1 in 0..w {
            for y1 in 0..h {
                for x2 in x1..w {
                    for y2 in y1..h {
                        let r = CellRect { x1, y1, x2, y2 };
                        if r != full {
                            rects.push(r);
                        }
                    }
                }
            }
        }
        rects.sort();
        let counts: Vec<usize> = rects
            .iter()
            .map(|r| self.best(r.width(), r.height()).0)
            .collect();
        let mut best_count = 1;
        let mut best_children: Vec<CellRect> = Vec::new();
        let mut chosen: Vec<usize> = Vec::new();
        self.pack(
            &rects,
            &counts,
            0,
            1,
            &mut chosen,
            &mut best_count,
            &mut best_children,
        );
        let mut witness = vec![full];
        for &child in &best_children {
            let (_, sub) = self.best(child.width(), child.height());
            witness.extend(sub.into_iter().map(|r| CellRect {
                x1: r.x1 + child.x1,
                y1: r.y1 + child.y1,
                x2: r.x2 + child.x1,
                y2: r.y2 + child.y1,
            }));
        }
        witness.sort();
        self.memo.insert((w, h), (best_count, witness.clone()));
        (best_count, witness)
    }

    /// Extends a packing of pairwise grid-disjoint rectangles, tracking
    /// the best total `1 + sum of child bests`.
    #[allow(clippy::too_many_arguments)]
    fn pack(
        &mut self,
        rects: &[CellRect],
        counts: &[usize],
        from: usize,
        score: usize,
        chosen: &mut Vec<usize>,
        best_count: &mut usize,
        best_children: &mut Vec<CellRect>,
    ) {
        if score > *best_count {
            *best_count = score;
            *best_children = chosen.iter().map(|&i| rects[i]).collect();
        }
        for i in from..rects.len() {
            if chosen
                .iter()
                .all(|&j| grids_disjoint(&rects[i], &rects[j]))
            {
                chosen.push(i);
                self.pack(
                    rects,
                    counts,
                    i + 1,
                    score + counts[i],
                    chosen,
                    best_count,
                    best_children,
                );
                chosen.pop();
            }
        }
    }
}

/// Exhaustively computes the maximum island count of a board, with a
/// witness system achieving it.  Guarded by a cap on the cell count, since
/// the search is exponential.
pub fn max_islands_oracle(
    cols: usize,
    rows: usize,
    cell_cap: usize,
) -> Result<(usize, IslandSystem), IslandsError> {
    let board = Board::new(cols, rows)?;
    if cols * rows > cell_cap {
        return Err(IslandsError::BoardTooBig {
            cells: cols * rows,
            cap: cell_cap,
        });
    }
    let mut search = Search {
        memo: HashMap::new(),
    };
    let (count, rects) = search.best(cols, rows);
    let sys = IslandSystem::new(board, rects)?;
    debug_assert_eq!(sys.len(), count);
    Ok((count, sys))
}

/// The wall positions when splitting a `k`-long dimension: sizes of the
/// two blocks around a one-cell separator.  Both block sizes stay odd
/// whenever that is needed to keep the count additive, which happens when
/// the cross dimension is even; the natural halving already is odd/odd for
/// `k = 3 (mod 4)`, and shifting by one fixes `k = 1 (mod 4)`.
fn split_sizes(k: usize, cross: usize) -> (usize, usize) {
    let a = k / 2;
    let b = k - 1 - a;
    if cross % 2 == 0 && k >= 5 && k % 4 == 1 {
        (a + 1, b - 1)
    } else {
        (a, b)
    }
}

fn construct_into(x0: usize, y0: usize, cols: usize, rows: usize, out: &mut Vec<CellRect>) {
    out.push(CellRect {
        x1: x0,
        y1: y0,
        x2: x0 + cols - 1,
        y2: y0 + rows - 1,
    });
    if cols >= rows {
        if cols < 2 {
            return;
        }
        let (a, b) = split_sizes(cols, rows);
        construct_into(x0, y0, a, rows, out);
        if b > 0 {
            construct_into(x0 + a + 1, y0, b, rows, out);
        }
    } else {
        if rows < 2 {
            return;
        }
        let (a, b) = split_sizes(rows, cols);
        construct_into(x0, y0, cols, a, out);
        if b > 0 {
            construct_into(x0, y0 + a + 1, cols, b, out);
        }
    }
}

/// Builds an island system of size [`max_islands_formula`] on any board,
/// by repeatedly walling off the longer dimension into two blocks around a
/// one-cell separator.
pub fn construct_island_system(cols: usize, rows: usize) -> Result<IslandSystem, IslandsError> {
    let board = Board::new(cols, rows)?;
    let mut rects = Vec::new();
    construct_into(0, 0, cols, rows, &mut rects);
    IslandSystem::new(board, rects)
}

/// A height function on the `cols x rows` board whose islands are exactly
/// the [`construct_island_system`] rectangles — [`max_islands_formula`]
/// many of them.
pub fn max_islands_construct(cols: usize, rows: usize) -> Result<HeightGrid, IslandsError> {
    let sys = construct_island_system(cols, rows)?;
    Ok(realize_heights(&sys).expect("constructed system is laminar and contains the board"))
}
