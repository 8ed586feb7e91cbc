//! CSV input/output for height grids.
//!
//! One line per board row, comma-separated integer heights, `#` comments
//! and blank lines ignored:
//!
//! ```text
//! # a ridge with two peaks
//! 2,1,2
//! 2,1,2
//! ```

use thiserror::Error;

use super::HeightGrid;

/// Errors from reading a height-grid file.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GridReadError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("the file contains no rows")]
    Empty,
    #[error("line {line}: row has {found} cells, expected {expected}")]
    Ragged {
        line: usize,
        found: usize,
        expected: usize,
    },
}

/// Parses the CSV format described in the module docs.
pub fn parse(text: &str) -> Result<HeightGrid, GridReadError> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut width: Option<(usize, usize)> = None; // (cells, defining line)
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for tok in content.split(',') {
            let tok = tok.trim();
            let h: i64 = tok.parse().map_err(|_| GridReadError::Syntax {
                line,
                message: format!("bad height {tok:?}"),
            })?;
            row.push(h);
        }
        match width {
            None => width = Some((row.len(), line)),
            Some((expected, _)) if row.len() != expected => {
                return Err(GridReadError::Ragged {
                    line,
                    found: row.len(),
                    expected,
                });
            }
            Some(_) => {}
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(GridReadError::Empty);
    }
    Ok(HeightGrid::from_rows(rows).expect("rows are nonempty and rectangular"))
}

/// Renders a grid back into the CSV format.
pub fn render(grid: &HeightGrid) -> String {
    let mut out = String::new();
    for y in 0..grid.rows() {
        let cells: Vec<String> = (0..grid.cols()).map(|x| grid.get(x, y).to_string()).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let text = "# demo\n2,1,2\n3, 1, 2\n";
        let grid = parse(text).unwrap();
        assert_eq!(grid.cols(), 3);
        assert_eq!(grid.rows(), 2);
        assert_eq!(grid.get(0, 1), 3);
        assert_eq!(render(&grid), "2,1,2\n3,1,2\n");
        assert_eq!(parse(&render(&grid)).unwrap(), grid);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(parse(""), Err(GridReadError::Empty));
        assert!(matches!(
            parse("1,2\nx,4\n"),
            Err(GridReadError::Syntax { line: 2, .. })
        ));
        assert_eq!(
            parse("1,2\n3\n"),
            Err(GridReadError::Ragged {
                line: 2,
                found: 1,
                expected: 2
            })
        );
    }
}
