//! Islands of rectangular height grids.
//!
//! A *cellular rectangle* is an axis-aligned block of unit cells on a
//! rectangular board.  Given a height per cell, a rectangle is an *island*
//! when every cell inside it is strictly higher than every board cell at
//! Chebyshev distance one from it — water rising to the level just below
//! the rectangle's minimum would leave it as one connected dry patch.
//!
//! Distinct islands of one grid never partially overlap or touch: they are
//! nested, or their surrounding point grids are disjoint.  Families with
//! that property are *laminar* here, and [`realize_heights`] inverts the
//! relationship: it turns any laminar family containing the full board
//! into a height grid by nesting depth, whose islands are exactly the
//! family.  [`max`] builds extremal families.

pub mod io;
pub mod max;

use thiserror::Error;

use crate::props::Verdict;

/// Default cap on the number of islands an enumeration may return.
pub const DEFAULT_ISLAND_CAP: usize = 400;

/// Errors from island-system operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum IslandsError {
    #[error("found more than {cap} islands")]
    CapExceeded { cap: usize },
    #[error("rectangles {a} and {b} neither nest nor have disjoint grids")]
    NotLaminar { a: usize, b: usize },
    #[error("the system does not contain the full board rectangle")]
    MissingBoard,
    #[error("rectangle {rect:?} does not fit the board {cols}x{rows}")]
    OutOfBounds {
        rect: CellRect,
        cols: usize,
        rows: usize,
    },
    #[error("board of {cells} cells is above the search cap of {cap}")]
    BoardTooBig { cells: usize, cap: usize },
    #[error("boards need at least one column and one row")]
    EmptyBoard,
}

/// A rectangular board of unit cells, `cols` wide and `rows` tall.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Board {
    pub cols: usize,
    pub rows: usize,
}

impl Board {
    pub fn new(cols: usize, rows: usize) -> Result<Board, IslandsError> {
        if cols == 0 || rows == 0 {
            return Err(IslandsError::EmptyBoard);
        }
        Ok(Board { cols, rows })
    }

    /// The rectangle covering the whole board.
    pub fn full_rect(&self) -> CellRect {
        CellRect {
            x1: 0,
            y1: 0,
            x2: self.cols - 1,
            y2: self.rows - 1,
        }
    }

    pub fn contains(&self, r: &CellRect) -> bool {
        r.x2 < self.cols && r.y2 < self.rows
    }
}

/// An inclusive block of cells `[x1..x2] x [y1..y2]`, zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellRect {
    pub x1: usize,
    pub y1: usize,
    pub x2: usize,
    pub y2: usize,
}

impl CellRect {
    pub fn new(x1: usize, y1: usize, x2: usize, y2: usize) -> CellRect {
        assert!(x1 <= x2 && y1 <= y2, "empty cell rectangle");
        CellRect { x1, y1, x2, y2 }
    }

    pub fn width(&self) -> usize {
        self.x2 - self.x1 + 1
    }

    pub fn height(&self) -> usize {
        self.y2 - self.y1 + 1
    }

    pub fn cells(&self) -> usize {
        self.width() * self.height()
    }

    pub fn contains(&self, other: &CellRect) -> bool {
        self.x1 <= other.x1 && other.x2 <= self.x2 && self.y1 <= other.y1 && other.y2 <= self.y2
    }

    /// The surrounding grid of lattice points, as an inclusive point
    /// rectangle `[x1-1..x2] x [y1-1..y2]`.
    pub fn grid(&self) -> PointRect {
        PointRect {
            x1: self.x1 as i64 - 1,
            y1: self.y1 as i64 - 1,
            x2: self.x2 as i64,
            y2: self.y2 as i64,
        }
    }
}

/// An inclusive rectangle of lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointRect {
    pub x1: i64,
    pub y1: i64,
    pub x2: i64,
    pub y2: i64,
}

impl PointRect {
    pub fn disjoint(&self, other: &PointRect) -> bool {
        self.x2 < other.x1 || other.x2 < self.x1 || self.y2 < other.y1 || other.y2 < self.y1
    }
}

/// Whether the surrounding grids of two cell rectangles share no point.
pub fn grids_disjoint(a: &CellRect, b: &CellRect) -> bool {
    a.grid().disjoint(&b.grid())
}

/// Per-cell heights on a board, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightGrid {
    cols: usize,
    rows: usize,
    data: Vec<i64>,
}

impl HeightGrid {
    pub fn new(board: Board, fill: i64) -> HeightGrid {
        HeightGrid {
            cols: board.cols,
            rows: board.rows,
            data: vec![fill; board.cols * board.rows],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<HeightGrid, IslandsError> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        if height == 0 || width == 0 || rows.iter().any(|r| r.len() != width) {
            return Err(IslandsError::EmptyBoard);
        }
        Ok(HeightGrid {
            cols: width,
            rows: height,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn board(&self) -> Board {
        Board {
            cols: self.cols,
            rows: self.rows,
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn get(&self, x: usize, y: usize) -> i64 {
        self.data[y * self.cols + x]
    }

    pub fn set(&mut self, x: usize, y: usize, h: i64) {
        self.data[y * self.cols + x] = h;
    }
}

/// Whether `rect` is an island of `grid`: its lowest cell tops every board
/// cell at Chebyshev distance one.  The full board is always an island.
pub fn is_island(grid: &HeightGrid, rect: &CellRect) -> bool {
    let mut min_inside = i64::MAX;
    for y in rect.y1..=rect.y2 {
        for x in rect.x1..=rect.x2 {
            min_inside = min_inside.min(grid.get(x, y));
        }
    }
    let x_lo = rect.x1.saturating_sub(1);
    let y_lo = rect.y1.saturating_sub(1);
    let x_hi = (rect.x2 + 1).min(grid.cols - 1);
    let y_hi = (rect.y2 + 1).min(grid.rows - 1);
    for y in y_lo..=y_hi {
        for x in x_lo..=x_hi {
            let inside = rect.x1 <= x && x <= rect.x2 && rect.y1 <= y && y <= rect.y2;
            if !inside && grid.get(x, y) >= min_inside {
                return false;
            }
        }
    }
    true
}

/// Every island of the grid, in lexicographic rectangle order.
pub fn enumerate_islands(grid: &HeightGrid, cap: usize) -> Result<Vec<CellRect>, IslandsError> {
    let mut out = Vec::new();
    for x1 in 0..grid.cols {
        for y1 in 0..grid.rows {
            for x2 in x1..grid.cols {
                for y2 in y1..grid.rows {
                    let rect = CellRect { x1, y1, x2, y2 };
                    if is_island(grid, &rect) {
                        out.push(rect);
                        if out.len() > cap {
                            return Err(IslandsError::CapExceeded { cap });
                        }
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// A set of cell rectangles on one board, canonically ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IslandSystem {
    board: Board,
    rects: Vec<CellRect>,
}

impl IslandSystem {
    /// Validates bounds, deduplicates, and sorts.
    pub fn new(board: Board, rects: Vec<CellRect>) -> Result<IslandSystem, IslandsError> {
        let mut rects = rects;
        for r in &rects {
            if !board.contains(r) {
                return Err(IslandsError::OutOfBounds {
                    rect: *r,
                    cols: board.cols,
                    rows: board.rows,
                });
            }
        }
        rects.sort();
        rects.dedup();
        Ok(IslandSystem { board, rects })
    }

    pub fn board(&self) -> Board {
        self.board
    }

    pub fn rects(&self) -> &[CellRect] {
        &self.rects
    }

    /// The point rectangles spanned by the members' cell vertices, in the
    /// members' order.  `grid` is injective on cell rectangles, so this
    /// has one entry per member even under set semantics.
    pub fn grids(&self) -> Vec<PointRect> {
        self.rects.iter().map(CellRect::grid).collect()
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    pub fn contains_board(&self) -> bool {
        self.rects.contains(&self.board.full_rect())
    }

    /// Laminarity: every pair nests or has disjoint grids.  The witness is
    /// a violating pair of indices into [`IslandSystem::rects`].
    pub fn is_laminar(&self) -> Verdict<(usize, usize)> {
        for i in 0..self.rects.len() {
            for j in (i + 1)..self.rects.len() {
                let (a, b) = (&self.rects[i], &self.rects[j]);
                if !(a.contains(b) || b.contains(a) || grids_disjoint(a, b)) {
                    return Verdict::Fails((i, j));
                }
            }
        }
        Verdict::Holds
    }
}

/// Builds a height grid whose islands are exactly the given laminar
/// system: each cell's height is the number of system rectangles covering
/// it.  Requires the system to be laminar and to contain the full board
/// (the board is an island of every grid, so it must be a member for the
/// round trip to close).
pub fn realize_heights(sys: &IslandSystem) -> Result<HeightGrid, IslandsError> {
    if let Verdict::Fails((a, b)) = sys.is_laminar() {
        return Err(IslandsError::NotLaminar { a, b });
    }
    if !sys.contains_board() {
        return Err(IslandsError::MissingBoard);
    }
    let mut grid = HeightGrid::new(sys.board(), 0);
    for r in sys.rects() {
        for y in r.y1..=r.y2 {
            for x in r.x1..=r.x2 {
                grid.set(x, y, grid.get(x, y) + 1);
            }
        }
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cell_ridge() {
        let grid = HeightGrid::from_rows(vec![vec![2, 1, 2]]).unwrap();
        let islands = enumerate_islands(&grid, DEFAULT_ISLAND_CAP).unwrap();
        assert_eq!(
            islands,
            vec![
                CellRect::new(0, 0, 0, 0),
                CellRect::new(0, 0, 2, 0),
                CellRect::new(2, 0, 2, 0),
            ]
        );
    }

    #[test]
    fn nested_two_by_two() {
        let grid = HeightGrid::from_rows(vec![vec![3, 1], vec![2, 1]]).unwrap();
        let islands = enumerate_islands(&grid, DEFAULT_ISLAND_CAP).unwrap();
        assert_eq!(
            islands,
            vec![
                CellRect::new(0, 0, 0, 0),
                CellRect::new(0, 0, 0, 1),
                CellRect::new(0, 0, 1, 1),
            ]
        );
        let sys = IslandSystem::new(grid.board(), islands).unwrap();
        assert!(sys.is_laminar().holds());
    }

    #[test]
    fn adjacent_rects_are_not_laminar() {
        let board = Board::new(3, 1).unwrap();
        let sys = IslandSystem::new(
            board,
            vec![
                board.full_rect(),
                CellRect::new(0, 0, 0, 0),
                CellRect::new(1, 0, 1, 0),
            ],
        )
        .unwrap();
        // Canonical order: the two unit cells sort to indices 0 and 2.
        assert_eq!(sys.is_laminar(), Verdict::Fails((0, 2)));
        assert_eq!(
            realize_heights(&sys),
            Err(IslandsError::NotLaminar { a: 0, b: 2 })
        );
    }

    #[test]
    fn realization_round_trip() {
        let board = Board::new(3, 1).unwrap();
        let rects = vec![
            board.full_rect(),
            CellRect::new(0, 0, 0, 0),
            CellRect::new(2, 0, 2, 0),
        ];
        let sys = IslandSystem::new(board, rects).unwrap();
        let grid = realize_heights(&sys).unwrap();
        assert_eq!(grid, HeightGrid::from_rows(vec![vec![2, 1, 2]]).unwrap());
        let back = enumerate_islands(&grid, DEFAULT_ISLAND_CAP).unwrap();
        assert_eq!(back, sys.rects());
        // Without the board member the round trip must grow.
        let partial = IslandSystem::new(board, vec![CellRect::new(0, 0, 0, 0)]).unwrap();
        assert_eq!(realize_heights(&partial), Err(IslandsError::MissingBoard));
    }
}
