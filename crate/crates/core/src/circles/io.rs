//! Text and SVG output for circle families.
//!
//! The text format is line-based.  Blank lines and `#` comments are
//! ignored.  The first significant line declares the mode, then each
//! circle takes one line:
//!
//! ```text
//! # three circles on the axis
//! mode collinear
//! A 0 0 2
//! B 4 0 0.5
//! C 8 0 2
//! ```
//!
//! Columns are id, center x, center y, radius; coordinates are decimal
//! literals and are kept exact.

use std::fmt::Write as _;

use num::ToPrimitive;
use thiserror::Error;

use super::{decimal_string, mask_members, Circle, CircleError, CircleFamily, Mode};

/// Errors from reading a circle-family file.
#[derive(Debug, Error)]
pub enum CircleReadError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Family(#[from] CircleError),
}

/// Parses the text format described in the module docs.
pub fn parse(text: &str) -> Result<CircleFamily, CircleReadError> {
    let mut mode: Option<Mode> = None;
    let mut circles = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match mode {
            None => {
                if tokens.len() != 2 || tokens[0] != "mode" {
                    return Err(CircleReadError::Syntax {
                        line,
                        message: format!(
                            "expected `mode general` or `mode collinear`, found {content:?}"
                        ),
                    });
                }
                mode = Some(Mode::from_str(tokens[1]).ok_or_else(|| {
                    CircleReadError::Syntax {
                        line,
                        message: format!("unknown mode {:?}", tokens[1]),
                    }
                })?);
            }
            Some(_) => {
                if tokens.len() != 4 {
                    return Err(CircleReadError::Syntax {
                        line,
                        message: format!(
                            "expected `<id> <cx> <cy> <r>`, found {} tokens",
                            tokens.len()
                        ),
                    });
                }
                let circle = Circle::new(tokens[0], tokens[1], tokens[2], tokens[3]).ok_or_else(
                    || CircleReadError::Syntax {
                        line,
                        message: format!("bad decimal literal in {content:?}"),
                    },
                )?;
                circles.push(circle);
            }
        }
    }
    let mode = mode.ok_or(CircleReadError::Syntax {
        line: text.lines().count() + 1,
        message: "missing `mode` line".to_string(),
    })?;
    Ok(CircleFamily::new(mode, circles)?)
}

/// Renders a family back into the text format.
pub fn render(family: &CircleFamily) -> Result<String, CircleError> {
    let mut out = format!("mode {}\n", family.mode().as_str());
    for c in family.circles() {
        let field = |v| {
            decimal_string(v).ok_or_else(|| CircleError::NonDecimal {
                value: v.to_string(),
            })
        };
        let _ = writeln!(
            out,
            "{} {} {} {}",
            c.id,
            field(&c.cx)?,
            field(&c.cy)?,
            field(&c.r)?
        );
    }
    Ok(out)
}

/// Renders the family as a standalone SVG document.  Members of
/// `shaded`, if given, are filled; the rest are outlines only.
pub fn render_svg(family: &CircleFamily, shaded: Option<u32>) -> String {
    let f = |v: &super::Rat| v.to_f64().unwrap_or(0.0);
    let (mut min_x, mut min_y) = (f64::INFINITY, f64::INFINITY);
    let (mut max_x, mut max_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for c in family.circles() {
        min_x = min_x.min(f(&c.cx) - f(&c.r));
        max_x = max_x.max(f(&c.cx) + f(&c.r));
        min_y = min_y.min(f(&c.cy) - f(&c.r));
        max_y = max_y.max(f(&c.cy) + f(&c.r));
    }
    if family.is_empty() {
        min_x = -1.0;
        min_y = -1.0;
        max_x = 1.0;
        max_y = 1.0;
    }
    let margin = 0.05 * (max_x - min_x).max(max_y - min_y).max(1.0);
    let (x0, y0) = (min_x - margin, min_y - margin);
    let (w, h) = (max_x - min_x + 2.0 * margin, max_y - min_y + 2.0 * margin);
    let shaded_set: Vec<usize> = shaded.map(mask_members).unwrap_or_default();

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.4} {:.4} {:.4} {:.4}\" width=\"640\">",
        x0,
        -y0 - h,
        w,
        h
    );
    let stroke_w = w.max(h) / 200.0;
    for (i, c) in family.circles().iter().enumerate() {
        let fill = if shaded_set.contains(&i) {
            "rgba(70,130,180,0.35)"
        } else {
            "none"
        };
        let _ = writeln!(
            out,
            "  <circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"{:.6}\" fill=\"{}\" stroke=\"black\" stroke-width=\"{:.4}\"/>",
            f(&c.cx),
            -f(&c.cy),
            f(&c.r),
            fill,
            stroke_w
        );
    }
    for c in family.circles() {
        let _ = writeln!(
            out,
            "  <text x=\"{:.6}\" y=\"{:.6}\" font-size=\"{:.4}\" text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>",
            f(&c.cx),
            -f(&c.cy),
            (w.max(h) / 25.0),
            c.id
        );
    }
    out.push_str("</svg>\n");
    out
}
