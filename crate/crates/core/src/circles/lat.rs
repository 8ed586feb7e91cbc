//! Lattices of closed circle subsets.
//!
//! Two builders produce the same lattice on their common domain:
//!
//! * [`lat_geometric`] runs the closure operator over every subset of the
//!   family — exponential in the family size, but applicable to any mode;
//! * [`lat_interval`] lists the horizontal intervals of a separated,
//!   concave collinear family — quadratically many candidates, no hull
//!   arithmetic beyond the up-front concavity check.
//!
//! Both sort the closed subsets by (cardinality, mask), so equal families
//! yield identically indexed lattices.  The [`LatBuilder`] trait lets
//! front ends pick a builder by name.

use crate::bitset::ElemSet;
use crate::lattice::Lattice;
use crate::props::Verdict;

use super::{hull, CircleError, CircleFamily, Mode};

/// Default cap on the family size for the subset-scanning builder.
pub const DEFAULT_GEOMETRIC_CAP: usize = 10;

/// A lattice of closed subsets along with the subset mask that each
/// lattice element stands for.
#[derive(Debug, Clone)]
pub struct CircleLattice {
    pub lattice: Lattice,
    /// `labels[e]` is the member mask of lattice element `e`.
    pub labels: Vec<u32>,
}

impl CircleLattice {
    /// The lattice element standing for `mask`, if `mask` is closed.
    pub fn element_of(&self, mask: u32) -> Option<usize> {
        self.labels.iter().position(|&m| m == mask)
    }
}

fn lattice_from_masks(masks: Vec<u32>) -> CircleLattice {
    let mut masks = masks;
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
    let lattice = Lattice::from_leq_rows(n, rows)
        .expect("closed subsets are intersection-closed and bounded, hence a lattice");
    CircleLattice {
        lattice,
        labels: masks,
    }
}

/// Builds the closed-subset lattice by closing every subset of the family.
///
/// Errs with [`CircleError::TooManyCircles`] past `cap` circles, and
/// propagates [`CircleError::DegenerateInput`] from hull tests whose
/// margins are thinner than `eps`.
pub fn lat_geometric(
    family: &CircleFamily,
    eps: f64,
    cap: usize,
) -> Result<CircleLattice, CircleError> {
    let k = family.len();
    if k > cap {
        return Err(CircleError::TooManyCircles { count: k, cap });
    }
    let mut closed = Vec::new();
    for mask in 0..(1u64 << k) {
        let mask = mask as u32;
        if hull::closure(family, mask, eps)? == mask {
            closed.push(mask);
        }
    }
    Ok(lattice_from_masks(closed))
}

/// Builds the same lattice for a separated, concave collinear family from
/// its horizontal intervals, without scanning all subsets.
///
/// The concavity precondition is verified (that is the only use of `eps`);
/// the interval collection itself is exact rational arithmetic.
pub fn lat_interval(family: &CircleFamily, eps: f64) -> Result<CircleLattice, CircleError> {
    if family.mode() != Mode::Collinear {
        return Err(CircleError::NotCollinear {
            detail: "lat_interval requires collinear mode".to_string(),
        });
    }
    if let Verdict::Fails((i, j)) = family.is_separated()? {
        return Err(CircleError::PreconditionViolated {
            operation: "lat_interval",
            requires: "a separated family".to_string(),
            witness: vec![
                family.circle(i).id.clone(),
                family.circle(j).id.clone(),
            ],
        });
    }
    if let Verdict::Fails((i, j, k)) = family.is_concave(eps)? {
        return Err(CircleError::PreconditionViolated {
            operation: "lat_interval",
            requires: "a concave family".to_string(),
            witness: vec![
                family.circle(i).id.clone(),
                family.circle(j).id.clone(),
                family.circle(k).id.clone(),
            ],
        });
    }
    let mut masks = std::collections::BTreeSet::new();
    masks.insert(0u32);
    for a in 0..family.len() {
        for b in 0..family.len() {
            if let Some(m) = family.horizontal_interval(a, b)? {
                masks.insert(m);
            }
        }
    }
    Ok(lattice_from_masks(masks.into_iter().collect()))
}

/// A named way of building the closed-subset lattice of a family.
pub trait LatBuilder {
    /// Stable name used to select the builder on a command line.
    fn name(&self) -> &'static str;
    /// Build the lattice; `cap` guards builders that scan all subsets.
    fn build(
        &self,
        family: &CircleFamily,
        eps: f64,
        cap: usize,
    ) -> Result<CircleLattice, CircleError>;
}

struct GeometricBuilder;
struct IntervalBuilder;

impl LatBuilder for GeometricBuilder {
    fn name(&self) -> &'static str {
        "geometric"
    }
    fn build(
        &self,
        family: &CircleFamily,
        eps: f64,
        cap: usize,
    ) -> Result<CircleLattice, CircleError> {
        lat_geometric(family, eps, cap)
    }
}

impl LatBuilder for IntervalBuilder {
    fn name(&self) -> &'static str {
        "interval"
    }
    fn build(
        &self,
        family: &CircleFamily,
        eps: f64,
        _cap: usize,
    ) -> Result<CircleLattice, CircleError> {
        lat_interval(family, eps)
    }
}

/// All lattice builders.
pub fn builders() -> Vec<Box<dyn LatBuilder>> {
    vec![Box::new(GeometricBuilder), Box::new(IntervalBuilder)]
}

/// Look up a builder by name.
pub fn builder_by_name(name: &str) -> Option<Box<dyn LatBuilder>> {
    builders().into_iter().find(|b| b.name() == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circles::{Circle, DEFAULT_EPS};

    fn fam(mode: Mode, specs: &[(&str, &str, &str, &str)]) -> CircleFamily {
        let circles = specs
            .iter()
            .map(|(id, cx, cy, r)| Circle::new(id, cx, cy, r).unwrap())
            .collect();
        CircleFamily::new(mode, circles).unwrap()
    }

    #[test]
    fn single_circle_gives_a_two_chain() {
        let f = fam(Mode::Collinear, &[("a", "0", "0", "1")]);
        let cl = lat_geometric(&f, DEFAULT_EPS, 10).unwrap();
        assert_eq!(cl.lattice.len(), 2);
        assert_eq!(cl.labels, vec![0, 1]);
        assert_eq!(cl.lattice.length(), 1);
    }

    #[test]
    fn two_distant_circles_give_a_square() {
        let f = fam(
            Mode::Collinear,
            &[("a", "0", "0", "1"), ("b", "10", "0", "1")],
        );
        let cl = lat_geometric(&f, DEFAULT_EPS, 10).unwrap();
        assert_eq!(cl.labels, vec![0b00, 0b01, 0b10, 0b11]);
        assert_eq!(cl.lattice.atoms().len(), 2);
    }

    #[test]
    fn builders_agree_on_a_concave_triple() {
        let f = fam(
            Mode::Collinear,
            &[
                ("A", "0", "0", "2"),
                ("B", "4", "0", "0.5"),
                ("C", "8", "0", "2"),
            ],
        );
        let geo = lat_geometric(&f, DEFAULT_EPS, 10).unwrap();
        let itv = lat_interval(&f, DEFAULT_EPS).unwrap();
        assert_eq!(geo.labels, itv.labels);
        assert_eq!(geo.lattice.covers(), itv.lattice.covers());
        // {A, C} closes to the whole family, so it is absent.
        assert_eq!(geo.element_of(0b101), None);
        assert_eq!(geo.lattice.len(), 7);
    }

    #[test]
    fn interval_builder_rejects_non_concave_families() {
        // The middle circle pokes far above the tangent of its flanks.
        let f = fam(
            Mode::Collinear,
            &[
                ("A", "0", "0", "0.5"),
                ("B", "4", "0", "3"),
                ("C", "8", "0", "0.5"),
            ],
        );
        assert!(matches!(
            lat_interval(&f, DEFAULT_EPS),
            Err(CircleError::PreconditionViolated { operation: "lat_interval", .. })
        ));
        assert!(builder_by_name("geometric").is_some());
        assert!(builder_by_name("interval").is_some());
        assert!(builder_by_name("brute").is_none());
    }
}
