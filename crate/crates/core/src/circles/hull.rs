//! Convex-hull membership tests and the induced closure operator.
//!
//! A circle `C` lies in the convex hull of a set of circles `Y` exactly
//! when the support function of `C` never exceeds the upper envelope of
//! the support functions of `Y`.  For circles the support function in
//! direction `θ` is `center · (cos θ, sin θ) + radius`, so for each `D ∈ Y`
//! the directions where `C` pokes out past `D` by more than a threshold
//! form an open arc, and `C` escapes the hull iff the arcs poke out past
//! *every* member simultaneously, i.e. the intersection of the arcs is
//! nonempty.
//!
//! The test runs twice, at thresholds `+eps` and `-eps`.  Escaping at
//! `+eps` means definitely outside; failing to escape even at `-eps`
//! means definitely inside; anything between is reported as
//! [`CircleError::DegenerateInput`] rather than guessed.  Containment of a
//! whole disk inside a single member disk is decided exactly in rational
//! arithmetic first, so deeply nested configurations never depend on the
//! tolerance.

use num::ToPrimitive;

use super::{mask_members, Circle, CircleError, CircleFamily};

/// Default tolerance for hull membership margins.
pub const DEFAULT_EPS: f64 = 1e-9;

/// Arc pieces thinner than this are discarded as numeric dust.
const MIN_ARC: f64 = 1e-12;

const TAU: f64 = std::f64::consts::TAU;

enum Arc {
    Full,
    Empty,
    Open(f64, f64),
}

/// Directions where `h_c(θ) > h_d(θ) + t`, as an arc.
fn dominance_arc(c: &Circle, d: &Circle, t: f64) -> Arc {
    let rho_exact = &d.r - &c.r;
    if c.cx == d.cx && c.cy == d.cy {
        // Concentric: the margin is constant over all directions.
        return if rho_exact.to_f64().unwrap_or(f64::NAN) + t < 0.0 {
            Arc::Full
        } else {
            Arc::Empty
        };
    }
    let dx = (&c.cx - &d.cx).to_f64().unwrap_or(f64::NAN);
    let dy = (&c.cy - &d.cy).to_f64().unwrap_or(f64::NAN);
    let rho = rho_exact.to_f64().unwrap_or(f64::NAN) + t;
    let len = dx.hypot(dy);
    let q = rho / len;
    if q >= 1.0 {
        Arc::Empty
    } else if q <= -1.0 {
        Arc::Full
    } else {
        let phi = dy.atan2(dx);
        let alpha = q.acos();
        Arc::Open(phi - alpha, phi + alpha)
    }
}

/// Intersects a disjoint interval list (within `[0, TAU]`) with one arc.
fn clip(intervals: &[(f64, f64)], lo: f64, hi: f64) -> Vec<(f64, f64)> {
    let start = lo.rem_euclid(TAU);
    let width = hi - lo;
    let mut segments = Vec::with_capacity(2);
    if start + width <= TAU {
        segments.push((start, start + width));
    } else {
        segments.push((start, TAU));
        segments.push((0.0, start + width - TAU));
    }
    let mut out = Vec::new();
    for &(a, b) in intervals {
        for &(c, d) in &segments {
            let (x, y) = (a.max(c), b.min(d));
            if y - x > MIN_ARC {
                out.push((x, y));
            }
        }
    }
    out
}

/// True when some direction lets `c` poke past every member by more
/// than `t`.
fn escapes(c: &Circle, members: &[&Circle], t: f64) -> bool {
    let mut intervals = vec![(0.0, TAU)];
    for d in members {
        match dominance_arc(c, d, t) {
            Arc::Full => {}
            Arc::Empty => return false,
            Arc::Open(lo, hi) => {
                intervals = clip(&intervals, lo, hi);
                if intervals.is_empty() {
                    return false;
                }
            }
        }
    }
    true
}

fn in_hull_inner(c: &Circle, members: &[&Circle], eps: f64) -> Result<bool, CircleError> {
    if members.is_empty() {
        return Ok(false);
    }
    for d in members {
        // Exact disk-in-disk: |center offset|^2 <= (r_d - r_c)^2 with
        // r_c <= r_d.
        if c.r <= d.r {
            let dx = &c.cx - &d.cx;
            let dy = &c.cy - &d.cy;
            let gap = &d.r - &c.r;
            if &dx * &dx + &dy * &dy <= &gap * &gap {
                return Ok(true);
            }
        }
    }
    if escapes(c, members, eps) {
        return Ok(false);
    }
    if !escapes(c, members, -eps) {
        return Ok(true);
    }
    Err(CircleError::DegenerateInput {
        operation: "circle_in_hull",
        question: format!("whether circle {:?} lies in the hull", c.id),
    })
}

/// Whether circle `c` lies in the convex hull of the circles selected by
/// `mask`.  Members trivially contain themselves.
pub fn circle_in_hull(
    family: &CircleFamily,
    c: usize,
    mask: u32,
    eps: f64,
) -> Result<bool, CircleError> {
    family.check_mask(mask)?;
    if mask & (1u32 << c) != 0 {
        return Ok(true);
    }
    let members: Vec<&Circle> = mask_members(mask)
        .into_iter()
        .map(|i| family.circle(i))
        .collect();
    in_hull_inner(family.circle(c), &members, eps)
}

/// The closure of a subset: repeatedly adds family circles lying in the
/// hull of the current members until nothing more joins.
pub fn closure(family: &CircleFamily, mask: u32, eps: f64) -> Result<u32, CircleError> {
    family.check_mask(mask)?;
    let mut cur = mask;
    loop {
        let members: Vec<&Circle> = mask_members(cur)
            .into_iter()
            .map(|i| family.circle(i))
            .collect();
        let mut next = cur;
        for j in 0..family.len() {
            if cur & (1u32 << j) == 0 && in_hull_inner(family.circle(j), &members, eps)? {
                next |= 1u32 << j;
            }
        }
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Whether a subset equals its own closure.
pub fn is_closed(family: &CircleFamily, mask: u32, eps: f64) -> Result<bool, CircleError> {
    Ok(closure(family, mask, eps)? == mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circles::Mode;

    fn fam(specs: &[(&str, &str, &str, &str)]) -> CircleFamily {
        let circles = specs
            .iter()
            .map(|(id, cx, cy, r)| Circle::new(id, cx, cy, r).unwrap())
            .collect();
        CircleFamily::new(Mode::Collinear, circles).unwrap()
    }

    #[test]
    fn small_circle_between_two_big_ones() {
        // A small middle circle under the common tangent of its flanks.
        let f = fam(&[
            ("L", "0", "0", "2"),
            ("m", "4", "0", "0.5"),
            ("R", "8", "0", "2"),
        ]);
        assert!(circle_in_hull(&f, 1, 0b101, DEFAULT_EPS).unwrap());
        assert!(!circle_in_hull(&f, 0, 0b110, DEFAULT_EPS).unwrap());
        assert!(!circle_in_hull(&f, 2, 0b011, DEFAULT_EPS).unwrap());
        assert_eq!(closure(&f, 0b101, DEFAULT_EPS).unwrap(), 0b111);
        assert_eq!(closure(&f, 0b011, DEFAULT_EPS).unwrap(), 0b011);
        assert!(is_closed(&f, 0b011, DEFAULT_EPS).unwrap());
        assert!(!is_closed(&f, 0b101, DEFAULT_EPS).unwrap());
        assert!(is_closed(&f, 0, DEFAULT_EPS).unwrap());
    }

    #[test]
    fn tangency_is_degenerate() {
        // The middle circle exactly touches the tangent line of the
        // flanking pair: equal radii flanks, tangent height 1, middle
        // radius exactly 1.
        let f = fam(&[
            ("L", "0", "0", "1"),
            ("m", "3", "0", "1"),
            ("R", "6", "0", "1"),
        ]);
        // Exact disk-in-disk does not apply; the arc margin is exactly 0.
        assert!(matches!(
            circle_in_hull(&f, 1, 0b101, DEFAULT_EPS),
            Err(CircleError::DegenerateInput { .. })
        ));
    }

    #[test]
    fn nested_disks_decided_exactly() {
        let f = fam(&[("big", "0", "0", "2"), ("tiny", "1.5", "0", "0.25")]);
        assert!(circle_in_hull(&f, 1, 0b01, 1e-300).unwrap());
        assert!(!circle_in_hull(&f, 0, 0b10, DEFAULT_EPS).unwrap());
    }
}
