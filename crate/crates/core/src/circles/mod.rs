//! Families of circles in the plane and their closure structure.
//!
//! A [`CircleFamily`] is a finite list of labelled circles, either in
//! *general* position or *collinear* (all centers on the x-axis).  Subsets
//! are addressed by bit masks over the circle indices.  The closure of a
//! subset adds every family circle lying inside the convex hull of the
//! subset's members (see [`hull`]); the closed subsets ordered by inclusion
//! form a lattice (see [`lat`]).
//!
//! Coordinates are kept as exact rationals parsed from decimal literals, so
//! the collinear combinatorics (endpoints, separation, horizontal
//! intervals, canonical decompositions) are exact.  Only the hull tests in
//! [`hull`] use floating point, with an explicit tolerance and a degenerate
//! verdict instead of a silent guess when a margin is too thin.

pub mod hull;
pub mod io;
pub mod lat;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

use crate::props::Verdict;

pub use hull::{circle_in_hull, closure, is_closed, DEFAULT_EPS};
pub use lat::{builder_by_name, builders, lat_geometric, lat_interval, CircleLattice, LatBuilder};

/// Exact coordinate type.
pub type Rat = BigRational;

/// The largest family size; subsets are 32-bit masks.
pub const MAX_CIRCLES: usize = 32;

/// Errors from circle-family operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CircleError {
    #[error("family has {count} circles, above the cap of {cap}")]
    TooManyCircles { count: usize, cap: usize },
    #[error("duplicate circle id {0:?}")]
    DuplicateId(String),
    #[error("circle id {0:?} is empty or contains whitespace")]
    BadId(String),
    #[error("circle {id:?} has a negative radius")]
    NegativeRadius { id: String },
    #[error("{detail}")]
    NotCollinear { detail: String },
    #[error("{operation} requires {requires} (witness: {witness:?})")]
    PreconditionViolated {
        operation: &'static str,
        requires: String,
        witness: Vec<String>,
    },
    #[error("subset {mask:#x} is not closed")]
    NotClosed { mask: u32 },
    #[error("subset mask {mask:#x} uses bits beyond the {count} family members")]
    BadMask { mask: u32, count: usize },
    #[error("{value} has no finite decimal expansion")]
    NonDecimal { value: String },
    #[error("{operation}: margins thinner than the tolerance leave the answer to {question} unresolved")]
    DegenerateInput {
        operation: &'static str,
        question: String,
    },
}

/// A labelled circle with exact center and radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    pub id: String,
    pub cx: Rat,
    pub cy: Rat,
    pub r: Rat,
}

impl Circle {
    /// Convenience constructor parsing decimal literals.
    pub fn new(id: &str, cx: &str, cy: &str, r: &str) -> Option<Circle> {
        Some(Circle {
            id: id.to_string(),
            cx: parse_decimal(cx)?,
            cy: parse_decimal(cy)?,
            r: parse_decimal(r)?,
        })
    }
}

/// Whether a family is constrained to centers on the x-axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    General,
    Collinear,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::General => "general",
            Mode::Collinear => "collinear",
        }
    }

    pub fn from_str(s: &str) -> Option<Mode> {
        match s {
            "general" => Some(Mode::General),
            "collinear" => Some(Mode::Collinear),
            _ => None,
        }
    }
}

/// A validated, ordered family of circles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleFamily {
    mode: Mode,
    circles: Vec<Circle>,
}

impl CircleFamily {
    /// Validates ids, radii, the size cap, and (in collinear mode) that all
    /// centers lie on the x-axis.
    pub fn new(mode: Mode, circles: Vec<Circle>) -> Result<CircleFamily, CircleError> {
        if circles.len() > MAX_CIRCLES {
            return Err(CircleError::TooManyCircles {
                count: circles.len(),
                cap: MAX_CIRCLES,
            });
        }
        let mut seen = std::collections::HashSet::new();
        for c in &circles {
            if c.id.is_empty() || c.id.chars().any(char::is_whitespace) {
                return Err(CircleError::BadId(c.id.clone()));
            }
            if !seen.insert(c.id.clone()) {
                return Err(CircleError::DuplicateId(c.id.clone()));
            }
            if c.r.is_negative() {
                return Err(CircleError::NegativeRadius { id: c.id.clone() });
            }
            if mode == Mode::Collinear && !c.cy.is_zero() {
                return Err(CircleError::NotCollinear {
                    detail: format!("circle {:?} has a center off the x-axis", c.id),
                });
            }
        }
        Ok(CircleFamily { mode, circles })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.circles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circles.is_empty()
    }

    pub fn circle(&self, i: usize) -> &Circle {
        &self.circles[i]
    }

    pub fn circles(&self) -> &[Circle] {
        &self.circles
    }

    /// Index of the circle with the given id.
    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.circles.iter().position(|c| c.id == id)
    }

    /// The mask selecting every circle.
    pub fn full_mask(&self) -> u32 {
        if self.circles.len() == 32 {
            u32::MAX
        } else {
            (1u32 << self.circles.len()) - 1
        }
    }

    /// Renders a subset mask as `{id, id, ...}` in index order.
    pub fn mask_label(&self, mask: u32) -> String {
        let names: Vec<&str> = mask_members(mask)
            .into_iter()
            .filter(|&i| i < self.circles.len())
            .map(|i| self.circles[i].id.as_str())
            .collect();
        format!("{{{}}}", names.join(", "))
    }

    fn require_collinear(&self, operation: &'static str) -> Result<(), CircleError> {
        if self.mode != Mode::Collinear {
            return Err(CircleError::NotCollinear {
                detail: format!("{operation} requires collinear mode"),
            });
        }
        Ok(())
    }

    pub(crate) fn check_mask(&self, mask: u32) -> Result<(), CircleError> {
        let full = self.full_mask();
        if mask & !full != 0 {
            return Err(CircleError::BadMask {
                mask,
                count: self.circles.len(),
            });
        }
        Ok(())
    }

    /// Leftmost and rightmost points of circle `i` on the x-axis
    /// (collinear mode only).
    pub fn endpoints(&self, i: usize) -> Result<(Rat, Rat), CircleError> {
        self.require_collinear("endpoints")?;
        let c = &self.circles[i];
        Ok((&c.cx - &c.r, &c.cx + &c.r))
    }

    /// A collinear family is separated when its `2n` endpoints are pairwise
    /// distinct values.  The witness names two circles sharing an endpoint
    /// (possibly the same circle twice, for a radius-zero member).
    pub fn is_separated(&self) -> Result<Verdict<(usize, usize)>, CircleError> {
        self.require_collinear("is_separated")?;
        let mut pts: Vec<(Rat, usize)> = Vec::with_capacity(2 * self.circles.len());
        for i in 0..self.circles.len() {
            let (l, r) = self.endpoints(i)?;
            pts.push((l, i));
            pts.push((r, i));
        }
        pts.sort();
        for w in pts.windows(2) {
            if w[0].0 == w[1].0 {
                return Ok(Verdict::Fails((w[0].1.min(w[1].1), w[0].1.max(w[1].1))));
            }
        }
        Ok(Verdict::Holds)
    }

    /// A separated collinear family is concave when for all pairwise
    /// distinct `i, j, k` with `lmpt(i) <= lmpt(j)` and `rmpt(j) <=
    /// rmpt(k)`, circle `j` belongs to the closure of `{i, k}`.  The
    /// witness is a violating `(i, j, k)`.
    pub fn is_concave(&self, eps: f64) -> Result<Verdict<(usize, usize, usize)>, CircleError> {
        self.require_collinear("is_concave")?;
        let n = self.circles.len();
        let mut ends = Vec::with_capacity(n);
        for i in 0..n {
            ends.push(self.endpoints(i)?);
        }
        let mut pair_closure: std::collections::HashMap<u32, u32> = std::collections::HashMap::new();
        for i in 0..n {
            for k in 0..n {
                if i == k {
                    continue;
                }
                for j in 0..n {
                    if j == i || j == k {
                        continue;
                    }
                    if !(ends[i].0 <= ends[j].0 && ends[j].1 <= ends[k].1) {
                        continue;
                    }
                    let pair = (1u32 << i) | (1u32 << k);
                    let closed = match pair_closure.get(&pair) {
                        Some(&m) => m,
                        None => {
                            let m = hull::closure(self, pair, eps)?;
                            pair_closure.insert(pair, m);
                            m
                        }
                    };
                    if closed & (1u32 << j) == 0 {
                        return Ok(Verdict::Fails((i, j, k)));
                    }
                }
            }
        }
        Ok(Verdict::Holds)
    }

    /// The horizontal interval from circle `a` to circle `b`: every circle
    /// whose span lies between `lmpt(a)` and `rmpt(b)`.  Defined only when
    /// `a` and `b` themselves qualify, so `None` signals configurations
    /// such as `a` encapsulating `b`.  Requires a separated collinear
    /// family.
    pub fn horizontal_interval(&self, a: usize, b: usize) -> Result<Option<u32>, CircleError> {
        self.require_collinear("horizontal_interval")?;
        if let Verdict::Fails((i, j)) = self.is_separated()? {
            return Err(CircleError::PreconditionViolated {
                operation: "horizontal_interval",
                requires: "a separated family".to_string(),
                witness: vec![self.circles[i].id.clone(), self.circles[j].id.clone()],
            });
        }
        let lo = self.endpoints(a)?.0;
        let hi = self.endpoints(b)?.1;
        let mut mask = 0u32;
        for i in 0..self.circles.len() {
            let (l, r) = self.endpoints(i)?;
            if lo <= l && r <= hi {
                mask |= 1u32 << i;
            }
        }
        if mask & (1u32 << a) != 0 && mask & (1u32 << b) != 0 {
            Ok(Some(mask))
        } else {
            Ok(None)
        }
    }

    /// For a nonempty closed subset of a separated collinear family, the
    /// pair `(a, b)` where `a` has the least left endpoint and `b` the
    /// greatest right endpoint among the members.  For concave families
    /// the subset then equals the horizontal interval from `a` to `b`.
    pub fn canonical_decomposition(
        &self,
        mask: u32,
        eps: f64,
    ) -> Result<(usize, usize), CircleError> {
        self.require_collinear("canonical_decomposition")?;
        self.check_mask(mask)?;
        if mask == 0 {
            return Err(CircleError::PreconditionViolated {
                operation: "canonical_decomposition",
                requires: "a nonempty subset".to_string(),
                witness: vec![],
            });
        }
        if let Verdict::Fails((i, j)) = self.is_separated()? {
            return Err(CircleError::PreconditionViolated {
                operation: "canonical_decomposition",
                requires: "a separated family".to_string(),
                witness: vec![self.circles[i].id.clone(), self.circles[j].id.clone()],
            });
        }
        if !hull::is_closed(self, mask, eps)? {
            return Err(CircleError::NotClosed { mask });
        }
        let members = mask_members(mask);
        let mut a = members[0];
        let mut b = members[0];
        for &i in &members[1..] {
            if self.endpoints(i)?.0 < self.endpoints(a)?.0 {
                a = i;
            }
            if self.endpoints(i)?.1 > self.endpoints(b)?.1 {
                b = i;
            }
        }
        Ok((a, b))
    }
}

/// The indices selected by a subset mask, ascending.
pub fn mask_members(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1u32 << i) != 0).collect()
}

/// Parses a decimal literal (`-3`, `0.5`, `+.25`) into an exact rational.
pub fn parse_decimal(s: &str) -> Option<Rat> {
    let (negative, rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match rest.split_once('.') {
        Some((i, f)) => (i, f),
        None => (rest, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let mut digits = String::with_capacity(int_part.len() + frac_part.len());
    digits.push_str(int_part);
    digits.push_str(frac_part);
    let mut num: BigInt = digits.parse().ok()?;
    if negative {
        num = -num;
    }
    let mut den = BigInt::one();
    for _ in 0..frac_part.len() {
        den *= 10;
    }
    Some(Rat::new(num, den))
}

/// Renders an exact rational as the shortest decimal literal, when its
/// reduced denominator divides a power of ten.
pub fn decimal_string(r: &Rat) -> Option<String> {
    let mut d = r.denom().clone();
    let mut twos = 0u32;
    let mut fives = 0u32;
    while (&d % BigInt::from(2)).is_zero() {
        d /= 2;
        twos += 1;
    }
    while (&d % BigInt::from(5)).is_zero() {
        d /= 5;
        fives += 1;
    }
    if !d.is_one() {
        return None;
    }
    let k = twos.max(fives) as usize;
    let mut pow10 = BigInt::one();
    for _ in 0..k {
        pow10 *= 10;
    }
    let scaled = r.numer() * (&pow10 / r.denom());
    let neg = scaled.is_negative();
    let mut digits = scaled.abs().to_string();
    if digits.len() < k + 1 {
        digits = format!("{}{}", "0".repeat(k + 1 - digits.len()), digits);
    }
    let split = digits.len() - k;
    let int_part = &digits[..split];
    let frac_part = digits[split..].trim_end_matches('0');
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(int_part);
    if !frac_part.is_empty() {
        out.push('.');
        out.push_str(frac_part);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(mode: Mode, specs: &[(&str, &str, &str, &str)]) -> CircleFamily {
        let circles = specs
            .iter()
            .map(|(id, cx, cy, r)| Circle::new(id, cx, cy, r).unwrap())
            .collect();
        CircleFamily::new(mode, circles).unwrap()
    }

    #[test]
    fn decimal_roundtrip() {
        for s in ["0", "-3", "0.5", "12.25", "-0.0009765625", "4"] {
            let r = parse_decimal(s).unwrap();
            assert_eq!(decimal_string(&r).unwrap(), s.trim_start_matches('+'));
        }
        assert_eq!(parse_decimal(".5"), parse_decimal("0.5"));
        assert!(parse_decimal("1/2").is_none());
        assert!(parse_decimal("").is_none());
        assert!(decimal_string(&Rat::new(1.into(), 3.into())).is_none());
    }

    #[test]
    fn family_validation() {
        let c = |id: &str| Circle::new(id, "0", "0", "1").unwrap();
        assert_eq!(
            CircleFamily::new(Mode::General, vec![c("A"), c("A")]),
            Err(CircleError::DuplicateId("A".to_string()))
        );
        let off = Circle::new("B", "1", "2", "1").unwrap();
        assert!(matches!(
            CircleFamily::new(Mode::Collinear, vec![off]),
            Err(CircleError::NotCollinear { .. })
        ));
        let neg = Circle::new("C", "0", "0", "-1").unwrap();
        assert!(matches!(
            CircleFamily::new(Mode::General, vec![neg]),
            Err(CircleError::NegativeRadius { .. })
        ));
    }

    #[test]
    fn separation_and_intervals() {
        // Two disjoint circles and one encapsulating the first.
        let f = fam(
            Mode::Collinear,
            &[
                ("a", "0", "0", "1"),
                ("b", "5", "0", "1"),
                ("big", "0.25", "0", "3"),
            ],
        );
        assert!(f.is_separated().unwrap().holds());
        // Interval from the big circle reaches everything under its span.
        assert_eq!(f.horizontal_interval(2, 2).unwrap(), Some(0b101));
        // An encapsulated left end cannot span its encapsulator.
        assert_eq!(f.horizontal_interval(0, 0).unwrap(), Some(0b001));
        assert_eq!(f.horizontal_interval(2, 0).unwrap(), None);
        assert_eq!(f.horizontal_interval(0, 1).unwrap(), Some(0b011));

        let touching = fam(
            Mode::Collinear,
            &[("a", "0", "0", "1"), ("b", "2", "0", "1")],
        );
        assert_eq!(touching.is_separated().unwrap(), Verdict::Fails((0, 1)));
    }
}
