//! Lattice text format.
//!
//! ```text
//! elements <n>
//! <i> <j>
//! ```
//!
//! The first significant line declares the element count; every following
//! line is one cover pair `i j` meaning `i` is covered by `j`, 0-based.
//! Lines starting with `#` and blank lines are ignored on input. Bottom and
//! top are inferred. [`render`] emits the canonical form: the header, then
//! cover pairs ascending, one per line, newline-terminated.

use super::{Lattice, LatticeError};

#[derive(Debug, thiserror::Error)]
pub enum LatticeReadError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Parses the lattice text format and validates the lattice.
pub fn parse(text: &str) -> Result<Lattice, LatticeReadError> {
    let mut n: Option<usize> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut tokens = content.split_whitespace();
        if n.is_none() {
            if tokens.next() != Some("elements") {
                return Err(LatticeReadError::Syntax {
                    line,
                    message: "expected header `elements <n>`".into(),
                });
            }
            let count = tokens
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| LatticeReadError::Syntax {
                    line,
                    message: "expected an element count after `elements`".into(),
                })?;
            if tokens.next().is_some() {
                return Err(LatticeReadError::Syntax {
                    line,
                    message: "trailing tokens after element count".into(),
                });
            }
            n = Some(count);
            continue;
        }
        let parse_idx = |t: Option<&str>| {
            t.and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| LatticeReadError::Syntax {
                    line,
                    message: "expected a cover pair `<i> <j>`".into(),
                })
        };
        let i = parse_idx(tokens.next())?;
        let j = parse_idx(tokens.next())?;
        if tokens.next().is_some() {
            return Err(LatticeReadError::Syntax {
                line,
                message: "trailing tokens after cover pair".into(),
            });
        }
        pairs.push((i, j));
    }
    let n = n.ok_or(LatticeReadError::Syntax {
        line: 0,
        message: "missing `elements <n>` header".into(),
    })?;
    Ok(Lattice::from_covers(n, &pairs)?)
}

/// Renders the canonical text form of a lattice.
pub fn render(lat: &Lattice) -> String {
    let mut out = format!("elements {}\n", lat.len());
    for &(i, j) in lat.covers() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}
