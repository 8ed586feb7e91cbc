//! Structural property checks for finite lattices.
//!
//! Every check returns a [`Verdict`] that either confirms the property or
//! carries a concrete witness of its failure, so callers can report *why* a
//! lattice was rejected rather than just that it was.  The checks are also
//! wrapped in the [`PropertyCheck`] trait so front ends can run a configurable
//! batch of them by name (see [`registry`]).

use serde::Serialize;
use thiserror::Error;

use crate::lattice::Lattice;

/// Outcome of a property check: the property holds, or it fails with a
/// witness describing a smallest offending configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    /// The property holds for the whole lattice.
    Holds,
    /// The property fails; the payload pins down one violation.
    Fails(W),
}

impl<W> Verdict<W> {
    /// True when the property holds.
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    /// The witness, if the property failed.
    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// Errors from checks that only make sense under a precondition.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PropsError {
    #[error("{operation} requires a {requires} lattice")]
    PreconditionViolated {
        operation: &'static str,
        requires: &'static str,
    },
}

/// Distributivity: `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples.
///
/// On failure the witness is one violating `(x, y, z)`.
pub fn is_distributive(lat: &Lattice) -> Verdict<(usize, usize, usize)> {
    let n = lat.len();
    for x in 0..n {
        for y in 0..n {
            for z in y..n {
                let lhs = lat.meet(x, lat.join(y, z));
                let rhs = lat.join(lat.meet(x, y), lat.meet(x, z));
                if lhs != rhs {
                    return Verdict::Fails((x, y, z));
                }
            }
        }
    }
    Verdict::Holds
}

/// Meet-distributivity: for every element `u` above the bottom, the interval
/// from the meet of the lower covers of `u` up to `u` is a distributive
/// lattice.
///
/// On failure the witness is one element whose interval is not distributive.
pub fn is_meet_distributive(lat: &Lattice) -> Verdict<usize> {
    for u in 0..lat.len() {
        if u == lat.bottom() {
            continue;
        }
        let lo = lat.lowstar(u).expect("non-bottom element has lower covers");
        let (interval, _) = lat.interval(lo, u);
        if !is_distributive(&interval).holds() {
            return Verdict::Fails(u);
        }
    }
    Verdict::Holds
}

/// Lower semimodularity: whenever `a` is covered by `a ∨ b`, the meet
/// `a ∧ b` is covered by `b`.
///
/// On failure the witness is one violating `(a, b)`.
pub fn is_lower_semimodular(lat: &Lattice) -> Verdict<(usize, usize)> {
    let n = lat.len();
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            if lat.is_cover(a, lat.join(a, b)) && !lat.is_cover(lat.meet(a, b), b) {
                return Verdict::Fails((a, b));
            }
        }
    }
    Verdict::Holds
}

/// Dual slimness: the meet-irreducible elements contain no three-element
/// antichain.
///
/// On failure the witness is one such antichain `(a, b, c)`.
pub fn is_dually_slim(lat: &Lattice) -> Verdict<(usize, usize, usize)> {
    let mir: Vec<usize> = lat.mir().iter().collect();
    for (i, &a) in mir.iter().enumerate() {
        for (j, &b) in mir.iter().enumerate().skip(i + 1) {
            if !lat.incomparable(a, b) {
                continue;
            }
            for &c in mir.iter().skip(j + 1) {
                if lat.incomparable(a, c) && lat.incomparable(b, c) {
                    return Verdict::Fails((a, b, c));
                }
            }
        }
    }
    Verdict::Holds
}

/// For a meet-distributive lattice, the number of join-irreducible elements
/// equals the length.  Returns that count/length pair; errs if the lattice is
/// not meet-distributive, where the identity is not guaranteed.
pub fn jir_count_vs_length(lat: &Lattice) -> Result<(usize, usize), PropsError> {
    if !is_meet_distributive(lat).holds() {
        return Err(PropsError::PreconditionViolated {
            operation: "jir_count_vs_length",
            requires: "meet-distributive",
        });
    }
    Ok((lat.jir().len(), lat.length()))
}

/// Report produced by a named [`PropertyCheck`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    /// Registry name of the check.
    pub name: &'static str,
    /// What the check concluded.
    pub outcome: PropertyOutcome,
}

/// Conclusion of a named property check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum PropertyOutcome {
    /// The property holds.
    Holds,
    /// The property fails; `witness` describes one violation.
    Fails { witness: String },
    /// The check does not apply to this lattice; `reason` says why.
    Skipped { reason: String },
}

/// A named lattice property that can be run from a front end.
pub trait PropertyCheck {
    /// Stable name used to select the check on a command line.
    fn name(&self) -> &'static str;
    /// Run the check and describe the outcome.
    fn check(&self, lat: &Lattice) -> PropertyReport;
}

struct Distributive;
struct MeetDistributive;
struct LowerSemimodular;
struct DuallySlim;
struct JirLength;

impl PropertyCheck for Distributive {
    fn name(&self) -> &'static str {
        "distributive"
    }
    fn check(&self, lat: &Lattice) -> PropertyReport {
        let outcome = match is_distributive(lat) {
            Verdict::Holds => PropertyOutcome::Holds,
            Verdict::Fails((x, y, z)) => PropertyOutcome::Fails {
                witness: format!(
                    "meet({x}, join({y}, {z})) = {} but join(meet({x}, {y}), meet({x}, {z})) = {}",
                    lat.meet(x, lat.join(y, z)),
                    lat.join(lat.meet(x, y), lat.meet(x, z)),
                ),
            },
        };
        PropertyReport { name: self.name(), outcome }
    }
}

impl PropertyCheck for MeetDistributive {
    fn name(&self) -> &'static str {
        "meet-distributive"
    }
    fn check(&self, lat: &Lattice) -> PropertyReport {
        let outcome = match is_meet_distributive(lat) {
            Verdict::Holds => PropertyOutcome::Holds,
            Verdict::Fails(u) => {
                let lo = lat.lowstar(u).expect("witness is not the bottom");
                PropertyOutcome::Fails {
                    witness: format!("interval [{lo}, {u}] is not distributive"),
                }
            }
        };
        PropertyReport { name: self.name(), outcome }
    }
}

impl PropertyCheck for LowerSemimodular {
    fn name(&self) -> &'static str {
        "lower-semimodular"
    }
    fn check(&self, lat: &Lattice) -> PropertyReport {
        let outcome = match is_lower_semimodular(lat) {
            Verdict::Holds => PropertyOutcome::Holds,
            Verdict::Fails((a, b)) => PropertyOutcome::Fails {
                witness: format!(
                    "{a} is covered by join({a}, {b}) = {} but meet({a}, {b}) = {} is not covered by {b}",
                    lat.join(a, b),
                    lat.meet(a, b),
                ),
            },
        };
        PropertyReport { name: self.name(), outcome }
    }
}

impl PropertyCheck for DuallySlim {
    fn name(&self) -> &'static str {
        "dually-slim"
    }
    fn check(&self, lat: &Lattice) -> PropertyReport {
        let outcome = match is_dually_slim(lat) {
            Verdict::Holds => PropertyOutcome::Holds,
            Verdict::Fails((a, b, c)) => PropertyOutcome::Fails {
                witness: format!("{{{a}, {b}, {c}}} is an antichain of meet-irreducible elements"),
            },
        };
        PropertyReport { name: self.name(), outcome }
    }
}

impl PropertyCheck for JirLength {
    fn name(&self) -> &'static str {
        "jir-length"
    }
    fn check(&self, lat: &Lattice) -> PropertyReport {
        let outcome = match jir_count_vs_length(lat) {
            Err(_) => PropertyOutcome::Skipped {
                reason: "lattice is not meet-distributive".to_string(),
            },
            Ok((jir, len)) if jir == len => PropertyOutcome::Holds,
            Ok((jir, len)) => PropertyOutcome::Fails {
                witness: format!("{jir} join-irreducible elements but length {len}"),
            },
        };
        PropertyReport { name: self.name(), outcome }
    }
}

/// All named checks, in the order a batch run reports them.
pub fn registry() -> Vec<Box<dyn PropertyCheck>> {
    vec![
        Box::new(Distributive),
        Box::new(MeetDistributive),
        Box::new(LowerSemimodular),
        Box::new(DuallySlim),
        Box::new(JirLength),
    ]
}

/// Look up a single named check.
pub fn by_name(name: &str) -> Option<Box<dyn PropertyCheck>> {
    registry().into_iter().find(|c| c.name() == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Lattice;

    fn diamond_m3() -> Lattice {
        Lattice::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap()
    }

    fn pentagon() -> Lattice {
        Lattice::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn chain_has_every_property() {
        let chain = Lattice::from_covers(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(is_distributive(&chain).holds());
        assert!(is_meet_distributive(&chain).holds());
        assert!(is_lower_semimodular(&chain).holds());
        assert!(is_dually_slim(&chain).holds());
        assert_eq!(jir_count_vs_length(&chain), Ok((3, 3)));
    }

    #[test]
    fn diamond_witnesses() {
        let m3 = diamond_m3();
        let w = is_distributive(&m3).witness().copied().unwrap();
        let (x, y, z) = w;
        assert_ne!(
            m3.meet(x, m3.join(y, z)),
            m3.join(m3.meet(x, y), m3.meet(x, z))
        );
        // The top's lower covers meet at the bottom, so its interval is the
        // whole non-distributive lattice.
        assert_eq!(is_meet_distributive(&m3), Verdict::Fails(4));
        assert_eq!(
            jir_count_vs_length(&m3),
            Err(PropsError::PreconditionViolated {
                operation: "jir_count_vs_length",
                requires: "meet-distributive",
            })
        );
    }

    #[test]
    fn pentagon_is_not_lower_semimodular() {
        let n5 = pentagon();
        let (a, b) = is_lower_semimodular(&n5).witness().copied().unwrap();
        assert!(n5.is_cover(a, n5.join(a, b)));
        assert!(!n5.is_cover(n5.meet(a, b), b));
        // The top's lower covers meet at the bottom, so its interval is the
        // whole pentagon, which is not distributive.
        assert_eq!(is_meet_distributive(&n5), Verdict::Fails(4));
        assert!(is_dually_slim(&n5).holds());
    }

    #[test]
    fn registry_names_are_stable() {
        let names: Vec<&str> = registry().iter().map(|c| c.name()).collect();
        assert_eq!(
            names,
            vec![
                "distributive",
                "meet-distributive",
                "lower-semimodular",
                "dually-slim",
                "jir-length"
            ]
        );
        assert!(by_name("dually-slim").is_some());
        assert!(by_name("modular").is_none());
    }
}
