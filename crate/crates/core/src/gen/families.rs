//! Seeded random circle families.
//!
//! All coordinates are quarter-integers (or dyadic rationals for the
//! concave radii), so every generated value has an exact decimal form
//! and closure tests stay far away from floating-point noise.  Each
//! candidate family is dry-run through [`lat_geometric`] before it is
//! returned: a family that produces any near-tie hull query is rejected
//! and redrawn rather than handed to the caller.

use num::BigRational;

use super::GenError;
use crate::circles::{lat_geometric, Circle, CircleError, CircleFamily, Mode, DEFAULT_EPS};
use crate::rng::Rng;

/// Largest family the generator will attempt; the dry run enumerates
/// all `2^count` subsets.
pub const MAX_GENERATED_CIRCLES: usize = 10;

/// Knobs for [`random_circle_family`].
#[derive(Debug, Clone)]
pub struct FamilyOptions {
    /// Reject families with a repeated left or right endpoint
    /// (collinear mode only).
    pub force_separated: bool,
    /// Construct a concave family: radii follow a strictly convex
    /// parabola over evenly spaced centres (collinear mode only,
    /// implies separated and disjoint spans).
    pub force_concave: bool,
    /// Keep families in which one disk contains another.
    pub allow_encapsulation: bool,
    /// Redraw budget before giving up.
    pub max_attempts: u32,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions {
            force_separated: false,
            force_concave: false,
            allow_encapsulation: true,
            max_attempts: 400,
        }
    }
}

fn quarters(n: i64) -> BigRational {
    BigRational::new(n.into(), 4.into())
}

/// Draws a random circle family with the requested shape, redrawing
/// until the family passes its structural checks and a degenerate-free
/// closure dry run, or the attempt budget runs out.
pub fn random_circle_family(
    seed: u64,
    count: usize,
    mode: Mode,
    opts: &FamilyOptions,
) -> Result<CircleFamily, GenError> {
    if count == 0 || count > MAX_GENERATED_CIRCLES {
        return Err(GenError::CapExceeded {
            what: "family generation",
            value: count,
            cap: MAX_GENERATED_CIRCLES,
        });
    }
    if mode == Mode::General && (opts.force_separated || opts.force_concave) {
        return Err(GenError::UnsupportedOptions {
            detail: "separated/concave shapes only apply to collinear families".to_string(),
        });
    }
    let mut rng = Rng::new(seed);
    for _ in 0..opts.max_attempts {
        let circles = match (mode, opts.force_concave) {
            (Mode::Collinear, true) => concave_circles(&mut rng, count),
            (Mode::Collinear, false) => collinear_circles(&mut rng, count, opts.force_separated),
            (Mode::General, _) => general_circles(&mut rng, count),
        };
        let family = match CircleFamily::new(mode, circles) {
            Ok(f) => f,
            Err(_) => continue,
        };
        if has_duplicate_circles(&family) {
            continue;
        }
        if !opts.allow_encapsulation && has_encapsulation(&family) {
            continue;
        }
        if opts.force_separated || opts.force_concave {
            match family.is_separated() {
                Ok(v) if v.holds() => {}
                _ => continue,
            }
        }
        if opts.force_concave {
            match family.is_concave(DEFAULT_EPS) {
                Ok(v) if v.holds() => {}
                _ => continue,
            }
        }
        match lat_geometric(&family, DEFAULT_EPS, count) {
            Ok(_) => return Ok(family),
            Err(CircleError::DegenerateInput { .. }) => continue,
            Err(e) => unreachable!("dry run rejected a generated family: {e}"),
        }
    }
    Err(GenError::RejectionBudgetExceeded {
        attempts: opts.max_attempts,
    })
}

fn circle(i: usize, cx: BigRational, cy: BigRational, r: BigRational) -> Circle {
    Circle {
        id: format!("c{i}"),
        cx,
        cy,
        r,
    }
}

fn general_circles(rng: &mut Rng, count: usize) -> Vec<Circle> {
    (0..count)
        .map(|i| {
            circle(
                i,
                quarters(rng.below(97) as i64),
                quarters(rng.below(97) as i64),
                quarters(1 + rng.below(12) as i64),
            )
        })
        .collect()
}

fn collinear_circles(rng: &mut Rng, count: usize, separated: bool) -> Vec<Circle> {
    let zero = BigRational::from_integer(0.into());
    let mut out = Vec::with_capacity(count);
    let mut cursor = 0i64; // right frontier, in quarters
    for i in 0..count {
        let r = 1 + rng.below(10) as i64;
        let c = if separated {
            // Leave a positive gap after the previous right endpoint.
            let gap = 1 + rng.below(8) as i64;
            cursor + gap + r
        } else {
            cursor + rng.below(12) as i64
        };
        cursor = cursor.max(c + r);
        out.push(circle(i, quarters(c), zero.clone(), quarters(r)));
    }
    out
}

/// Evenly spaced centres with radii on a strictly convex parabola:
/// every circle then sits strictly inside the hull of any pair that
/// brackets it, with a margin far above the comparison tolerance.
fn concave_circles(rng: &mut Rng, count: usize) -> Vec<Circle> {
    let valley = rng.below(count as u64) as i64;
    let base = quarters(1 + rng.below(3) as i64);
    let scale_exp = 4 + rng.below(2); // bump = (i - valley)^2 / 2^scale_exp
    let radii: Vec<BigRational> = (0..count as i64)
        .map(|i| {
            let d = i - valley;
            &base + BigRational::new((d * d).into(), (1i64 << scale_exp).into())
        })
        .collect();
    let r_max = radii.iter().cloned().fold(base.clone(), |a, b| a.max(b));
    // Spacing keeps neighbouring spans disjoint with a positive gap.
    let spacing = &r_max + &r_max + quarters(1 + rng.below(8) as i64);
    let zero = BigRational::from_integer(0.into());
    radii
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            circle(
                i,
                BigRational::from_integer((i as i64).into()) * &spacing,
                zero.clone(),
                r,
            )
        })
        .collect()
}

fn has_duplicate_circles(family: &CircleFamily) -> bool {
    let cs = family.circles();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            if cs[i].cx == cs[j].cx && cs[i].cy == cs[j].cy && cs[i].r == cs[j].r {
                return true;
            }
        }
    }
    false
}

fn has_encapsulation(family: &CircleFamily) -> bool {
    let cs = family.circles();
    for i in 0..cs.len() {
        for j in 0..cs.len() {
            if i == j || cs[i].r > cs[j].r {
                continue;
            }
            let dx = &cs[i].cx - &cs[j].cx;
            let dy = &cs[i].cy - &cs[j].cy;
            let slack = &cs[j].r - &cs[i].r;
            if &dx * &dx + &dy * &dy <= &slack * &slack {
                return true;
            }
        }
    }
    false
}
