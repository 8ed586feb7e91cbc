//! CD-independent subsets of a finite lattice.
//!
//! A subset is *CD-independent* when any two of its elements are either
//! comparable or *disjoint* (their meet is the bottom).  Such families
//! generalize laminar set systems: viewed as a graph whose edges join
//! compatible pairs, CD-independent sets are exactly the cliques, so the
//! maximal ones can be enumerated with a maximal-clique search.  Every
//! CD-independent set extends to a maximal one, which lets callers reason
//! about all of them by looking only at the maximal family.
//!
//! Beyond the basic predicates this module provides:
//!
//! * [`enumerate_maximal`]: all maximal CD-independent sets, in a canonical
//!   order, guarded by a cap on the lattice size;
//! * [`size_bound`]: the `length + number of atoms` ceiling that maximal
//!   CD-independent sets respect in meet-distributive lattices;
//! * [`pseudocomplement`] and the pair classification ([`classify_pairs`])
//!   of complemented and mutually-pseudocomplemented pairs;
//! * [`verify_size_and_descriptions`]: recomputes the maximal family two
//!   ways — by direct enumeration and from coatom/pair descriptions — and
//!   reports any disagreement;
//! * [`verify_mir_pairs`]: checks that complemented, mutually
//!   pseudocomplemented pairs consist of meet-irreducible elements, under
//!   the hypotheses where that is guaranteed.

use std::collections::BTreeSet;
use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::ElemSet;
use crate::lattice::Lattice;
use crate::props::{self, Verdict};

/// Default lattice-size cap for the exhaustive enumeration routines.
///
/// Maximal-clique enumeration is exponential in the worst case; callers
/// that want to go past this must pass a larger cap explicitly.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

/// Errors from CD-independence operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CdError {
    /// The lattice exceeds the enumeration cap; raise the cap to proceed.
    #[error("lattice has {size} elements, above the enumeration cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    /// An operation was invoked outside its supported inputs.
    #[error("{operation} requires {requires} (offending elements: {witness:?})")]
    PreconditionViolated {
        operation: &'static str,
        requires: String,
        witness: Vec<usize>,
    },
}

/// True when `x` and `y` may share a CD-independent set: they are comparable
/// or their meet is the bottom.
pub fn compatible(lat: &Lattice, x: usize, y: usize) -> bool {
    !lat.incomparable(x, y) || lat.meet(x, y) == lat.bottom()
}

/// Checks pairwise compatibility of `set`; the witness is an incompatible
/// pair.
pub fn is_cd_independent(lat: &Lattice, set: &ElemSet) -> Verdict<(usize, usize)> {
    let members = set.to_vec();
    for (i, &x) in members.iter().enumerate() {
        for &y in members.iter().skip(i + 1) {
            if !compatible(lat, x, y) {
                return Verdict::Fails((x, y));
            }
        }
    }
    Verdict::Holds
}

fn require_cd_independent(
    lat: &Lattice,
    set: &ElemSet,
    operation: &'static str,
) -> Result<(), CdError> {
    match is_cd_independent(lat, set) {
        Verdict::Holds => Ok(()),
        Verdict::Fails((x, y)) => Err(CdError::PreconditionViolated {
            operation,
            requires: "a CD-independent input set".to_string(),
            witness: vec![x, y],
        }),
    }
}

/// Grows a CD-independent set to a maximal one by scanning elements in
/// ascending order.  A single pass suffices: an element rejected against a
/// partial set stays incompatible with the final superset.
pub fn extend_to_maximal(lat: &Lattice, set: &ElemSet) -> Result<ElemSet, CdError> {
    require_cd_independent(lat, set, "extend_to_maximal")?;
    let mut out = set.clone();
    for v in 0..lat.len() {
        if out.contains(v) {
            continue;
        }
        if out.iter().all(|u| compatible(lat, u, v)) {
            out.insert(v);
        }
    }
    Ok(out)
}

/// True when no further element is compatible with all of `set`.
pub fn is_maximal(lat: &Lattice, set: &ElemSet) -> Result<bool, CdError> {
    require_cd_independent(lat, set, "is_maximal")?;
    for v in 0..lat.len() {
        if !set.contains(v) && set.iter().all(|u| compatible(lat, u, v)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Upper bound `length + |atoms|` on the size of CD-independent sets in
/// meet-distributive lattices.
pub fn size_bound(lat: &Lattice) -> usize {
    lat.length() + lat.atoms().len()
}

fn bron_kerbosch(
    adj: &[ElemSet],
    r: &mut ElemSet,
    mut p: ElemSet,
    mut x: ElemSet,
    out: &mut Vec<ElemSet>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.intersection(&adj[u]).len())
        .expect("p or x is nonempty");
    for v in p.difference(&adj[pivot]).to_vec() {
        r.insert(v);
        bron_kerbosch(adj, r, p.intersection(&adj[v]), x.intersection(&adj[v]), out);
        r.remove(v);
        p.remove(v);
        x.insert(v);
    }
}

/// All maximal CD-independent sets, sorted by their ascending element lists.
///
/// Errs with [`CdError::CapExceeded`] when the lattice has more than `cap`
/// elements, since the search can in principle grow exponentially.
pub fn enumerate_maximal(lat: &Lattice, cap: usize) -> Result<Vec<ElemSet>, CdError> {
    let n = lat.len();
    if n > cap {
        return Err(CdError::CapExceeded { size: n, cap });
    }
    let mut adj = vec![ElemSet::empty(n); n];
    for x in 0..n {
        for y in (x + 1)..n {
            if compatible(lat, x, y) {
                adj[x].insert(y);
                adj[y].insert(x);
            }
        }
    }
    let mut out = Vec::new();
    let mut r = ElemSet::empty(n);
    bron_kerbosch(&adj, &mut r, ElemSet::full(n), ElemSet::empty(n), &mut out);
    out.sort_by_key(|s| s.to_vec());
    Ok(out)
}

/// A maximal CD-independent set of maximum cardinality (the canonically
/// first among ties).
pub fn largest_maximal(lat: &Lattice, cap: usize) -> Result<ElemSet, CdError> {
    let all = enumerate_maximal(lat, cap)?;
    let mut best: Option<ElemSet> = None;
    for s in all {
        if best.as_ref().map_or(true, |b| s.len() > b.len()) {
            best = Some(s);
        }
    }
    Ok(best.expect("a lattice is nonempty, so some maximal set exists"))
}

/// The pseudocomplement of `a`: the greatest element whose meet with `a` is
/// the bottom, when that greatest element exists.
pub fn pseudocomplement(lat: &Lattice, a: usize) -> Option<usize> {
    let bottom = lat.bottom();
    let disjoint: Vec<usize> = (0..lat.len())
        .filter(|&x| lat.meet(a, x) == bottom)
        .collect();
    // Height strictly increases along <, so a highest disjoint element is
    // maximal among them; it is the greatest iff it bounds them all.
    let m = *disjoint
        .iter()
        .max_by_key(|&&x| (lat.height_of(x), x))
        .expect("the bottom is disjoint from everything");
    if disjoint.iter().all(|&x| lat.leq(x, m)) {
        Some(m)
    } else {
        None
    }
}

/// True when `a ∧ b` is the bottom and `a ∨ b` is the top.
pub fn complemented_pair(lat: &Lattice, a: usize, b: usize) -> bool {
    lat.meet(a, b) == lat.bottom() && lat.join(a, b) == lat.top()
}

/// True when `a` and `b` are pseudocomplements of each other.
pub fn mutual_pseudocomplements(lat: &Lattice, a: usize, b: usize) -> bool {
    pseudocomplement(lat, a) == Some(b) && pseudocomplement(lat, b) == Some(a)
}

/// The classified pairs of a lattice: complemented pairs and mutually
/// pseudocomplemented pairs, restricted to pairs that are incomparable or
/// consist of two meet-irreducible elements, with the bottom/top pair left
/// out.  Pairs are reported as `(a, b)` with `a < b`, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairClassification {
    pub complemented: Vec<(usize, usize)>,
    pub mutual_pseudocomplemented: Vec<(usize, usize)>,
}

/// Classifies every admissible pair of the lattice; see
/// [`PairClassification`] for the admissibility rule.
pub fn classify_pairs(lat: &Lattice) -> PairClassification {
    let mir = lat.mir();
    let mut complemented = Vec::new();
    let mut mutual = Vec::new();
    for a in 0..lat.len() {
        for b in (a + 1)..lat.len() {
            if (a, b) == (lat.bottom(), lat.top()) || (a, b) == (lat.top(), lat.bottom()) {
                continue;
            }
            let admissible = lat.incomparable(a, b) || (mir.contains(a) && mir.contains(b));
            if !admissible {
                continue;
            }
            if complemented_pair(lat, a, b) {
                complemented.push((a, b));
            }
            if mutual_pseudocomplements(lat, a, b) {
                mutual.push((a, b));
            }
        }
    }
    PairClassification {
        complemented,
        mutual_pseudocomplemented: mutual,
    }
}

/// The maximal elements of `set`, ascending.
pub fn maximal_members(lat: &Lattice, set: &ElemSet) -> Vec<usize> {
    set.iter()
        .filter(|&x| !set.iter().any(|y| lat.lt(x, y)))
        .collect()
}

/// Size check of the maximal family against [`size_bound`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    /// Number of maximal CD-independent sets.
    pub maximal_sets: usize,
    /// Largest cardinality seen.
    pub largest: usize,
    /// The `length + |atoms|` ceiling.
    pub bound: usize,
    /// Sets exceeding the ceiling (empty when the bound holds).
    pub violations: Vec<Vec<usize>>,
}

impl BoundReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Comparison of the enumerated maximal family against a described family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCompare {
    /// Size of the directly enumerated family.
    pub enumerated: usize,
    /// Size of the family built from the description.
    pub described: usize,
    /// Sets found by enumeration that the description misses.
    pub only_enumerated: Vec<Vec<usize>>,
    /// Described sets that are not maximal CD-independent sets.
    pub only_described: Vec<Vec<usize>>,
}

impl FamilyCompare {
    pub fn ok(&self) -> bool {
        self.only_enumerated.is_empty() && self.only_described.is_empty()
    }
}

/// Combined verification report; parts are `None` when their structural
/// hypotheses do not hold for the lattice (or when it has fewer than two
/// elements).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub elements: usize,
    pub length: usize,
    pub atoms: usize,
    pub bound: usize,
    pub meet_distributive: bool,
    pub dually_slim: bool,
    pub lower_semimodular: bool,
    pub distributive: bool,
    /// Bound check; runs on meet-distributive lattices.
    pub bound_check: Option<BoundReport>,
    /// Coatom/pair description with both pair members meet-irreducible;
    /// runs on dually slim, lower semimodular lattices.
    pub mir_pair_description: Option<FamilyCompare>,
    /// Same, with the pair members required incomparable instead.
    pub incomparable_pair_description: Option<FamilyCompare>,
    /// Complemented-pair description; runs on distributive lattices.
    pub complement_pair_description: Option<FamilyCompare>,
}

impl VerificationReport {
    /// True when every applicable part verified cleanly.
    pub fn ok(&self) -> bool {
        self.bound_check.as_ref().map_or(true, BoundReport::ok)
            && [
                &self.mir_pair_description,
                &self.incomparable_pair_description,
                &self.complement_pair_description,
            ]
            .iter()
            .all(|part| part.as_ref().map_or(true, FamilyCompare::ok))
    }
}

#[derive(Clone, Copy)]
enum PairRule {
    /// Complemented, mutually pseudocomplemented, both meet-irreducible.
    ComplementedPcMir,
    /// Complemented, mutually pseudocomplemented, incomparable.
    ComplementedPcIncomparable,
    /// Complemented and incomparable.
    ComplementedIncomparable,
}

/// Maximal CD-independent sets of the ideal of `root`, mapped back to
/// ambient element indices.
fn maximal_in_ideal(lat: &Lattice, root: usize, cap: usize) -> Result<Vec<ElemSet>, CdError> {
    let (sub, map) = lat.interval(lat.bottom(), root);
    let subsets = enumerate_maximal(&sub, cap)?;
    Ok(subsets
        .into_iter()
        .map(|s| ElemSet::from_indices(lat.len(), s.iter().map(|e| map[e])))
        .collect())
}

/// Builds the family of candidate sets a description announces: every
/// candidate keeps the bottom, the top, and all atoms, and is either
/// rooted at a single coatom or at a pair admitted by `rule`; candidates
/// whose maximal members differ from the announced roots are dropped.
fn described_family(
    lat: &Lattice,
    cap: usize,
    rule: PairRule,
) -> Result<BTreeSet<Vec<usize>>, CdError> {
    let n = lat.len();
    let bottom = lat.bottom();
    let top = lat.top();
    let mut required = ElemSet::from_indices(n, lat.atoms().iter().copied());
    required.insert(bottom);
    required.insert(top);

    let mut ideal_cache: HashMap<usize, Vec<ElemSet>> = HashMap::new();
    let ideal = |root: usize, cache: &mut HashMap<usize, Vec<ElemSet>>| -> Result<Vec<ElemSet>, CdError> {
        if let Some(v) = cache.get(&root) {
            return Ok(v.clone());
        }
        let v = maximal_in_ideal(lat, root, cap)?;
        cache.insert(root, v.clone());
        Ok(v)
    };

    let mut fam = BTreeSet::new();
    let admit = |x: ElemSet, roots: &[usize], fam: &mut BTreeSet<Vec<usize>>| {
        if !required.is_subset_of(&x) {
            return;
        }
        let mut below_top = x.clone();
        below_top.remove(top);
        if maximal_members(lat, &below_top) == roots {
            fam.insert(x.to_vec());
        }
    };

    for &a1 in lat.coatoms() {
        for x1 in ideal(a1, &mut ideal_cache)? {
            let mut x = x1.clone();
            x.insert(top);
            admit(x, &[a1], &mut fam);
        }
    }

    let mir = lat.mir();
    for a in 0..n {
        for b in (a + 1)..n {
            if a == bottom || a == top || b == bottom || b == top {
                continue;
            }
            let pair_ok = match rule {
                PairRule::ComplementedPcMir => {
                    complemented_pair(lat, a, b)
                        && mutual_pseudocomplements(lat, a, b)
                        && mir.contains(a)
                        && mir.contains(b)
                }
                PairRule::ComplementedPcIncomparable => {
                    complemented_pair(lat, a, b)
                        && mutual_pseudocomplements(lat, a, b)
                        && lat.incomparable(a, b)
                }
                PairRule::ComplementedIncomparable => {
                    complemented_pair(lat, a, b) && lat.incomparable(a, b)
                }
            };
            if !pair_ok {
                continue;
            }
            for x1 in ideal(a, &mut ideal_cache)? {
                for x2 in ideal(b, &mut ideal_cache)? {
                    let mut x = x1.union(&x2);
                    x.insert(top);
                    admit(x, &[a, b], &mut fam);
                }
            }
        }
    }
    Ok(fam)
}

fn compare_families(
    enumerated: &BTreeSet<Vec<usize>>,
    described: &BTreeSet<Vec<usize>>,
) -> FamilyCompare {
    FamilyCompare {
        enumerated: enumerated.len(),
        described: described.len(),
        only_enumerated: enumerated.difference(described).cloned().collect(),
        only_described: described.difference(enumerated).cloned().collect(),
    }
}

/// Runs every applicable verification on `lat`:
///
/// * on meet-distributive lattices, that no maximal CD-independent set
///   exceeds [`size_bound`];
/// * on dually slim, lower semimodular lattices, that the enumerated maximal
///   family coincides with the coatom/pair described families (pair members
///   meet-irreducible, and pair members incomparable);
/// * on distributive lattices, that it coincides with the complemented-pair
///   described family.
///
/// Lattices with fewer than two elements skip all parts.
pub fn verify_size_and_descriptions(
    lat: &Lattice,
    cap: usize,
) -> Result<VerificationReport, CdError> {
    let meet_distributive = props::is_meet_distributive(lat).holds();
    let dually_slim = props::is_dually_slim(lat).holds();
    let lower_semimodular = props::is_lower_semimodular(lat).holds();
    let distributive = props::is_distributive(lat).holds();
    let applicable = lat.len() >= 2;

    let mut report = VerificationReport {
        elements: lat.len(),
        length: lat.length(),
        atoms: lat.atoms().len(),
        bound: size_bound(lat),
        meet_distributive,
        dually_slim,
        lower_semimodular,
        distributive,
        bound_check: None,
        mir_pair_description: None,
        incomparable_pair_description: None,
        complement_pair_description: None,
    };
    if !applicable {
        return Ok(report);
    }

    let need_enumeration =
        meet_distributive || (dually_slim && lower_semimodular) || distributive;
    if !need_enumeration {
        return Ok(report);
    }
    let maximal = enumerate_maximal(lat, cap)?;

    if meet_distributive {
        let bound = size_bound(lat);
        let largest = maximal.iter().map(ElemSet::len).max().unwrap_or(0);
        let violations = maximal
            .iter()
            .filter(|s| s.len() > bound)
            .map(ElemSet::to_vec)
            .collect();
        report.bound_check = Some(BoundReport {
            maximal_sets: maximal.len(),
            largest,
            bound,
            violations,
        });
    }

    let enumerated: BTreeSet<Vec<usize>> = maximal.iter().map(ElemSet::to_vec).collect();
    if dually_slim && lower_semimodular {
        let mir_desc = described_family(lat, cap, PairRule::ComplementedPcMir)?;
        let incomp_desc = described_family(lat, cap, PairRule::ComplementedPcIncomparable)?;
        report.mir_pair_description = Some(compare_families(&enumerated, &mir_desc));
        report.incomparable_pair_description = Some(compare_families(&enumerated, &incomp_desc));
    }
    if distributive {
        let comp_desc = described_family(lat, cap, PairRule::ComplementedIncomparable)?;
        report.complement_pair_description = Some(compare_families(&enumerated, &comp_desc));
    }
    Ok(report)
}

/// A complemented, mutually pseudocomplemented pair with a member that is
/// not meet-irreducible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MirViolation {
    pub a: usize,
    pub b: usize,
    /// The pair members that fail meet-irreducibility.
    pub not_meet_irreducible: Vec<usize>,
}

/// Scans every pair `a < b` strictly between bottom and top that is both
/// complemented and mutually pseudocomplemented, and reports those with a
/// member outside the meet-irreducibles.  Returns `(pairs_checked,
/// violations)`.  This is a raw scan with no structural hypotheses; see
/// [`verify_mir_pairs`] for the guarded form.
pub fn mir_pair_scan(lat: &Lattice) -> (usize, Vec<MirViolation>) {
    let mir = lat.mir();
    let mut checked = 0;
    let mut violations = Vec::new();
    for a in 0..lat.len() {
        for b in (a + 1)..lat.len() {
            if a == lat.bottom() || a == lat.top() || b == lat.bottom() || b == lat.top() {
                continue;
            }
            if !(complemented_pair(lat, a, b) && mutual_pseudocomplements(lat, a, b)) {
                continue;
            }
            checked += 1;
            let not_mir: Vec<usize> = [a, b]
                .into_iter()
                .filter(|&x| !mir.contains(x))
                .collect();
            if !not_mir.is_empty() {
                violations.push(MirViolation {
                    a,
                    b,
                    not_meet_irreducible: not_mir,
                });
            }
        }
    }
    (checked, violations)
}

/// Outcome of [`verify_mir_pairs`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MirPairReport {
    pub pairs_checked: usize,
    pub violations: Vec<MirViolation>,
}

impl MirPairReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies that in a dually slim, lower semimodular lattice, every
/// complemented, mutually pseudocomplemented pair strictly between bottom
/// and top consists of meet-irreducible elements.  Errs when the lattice
/// does not satisfy those hypotheses (the claim can fail without them —
/// run [`mir_pair_scan`] to see raw violations).
pub fn verify_mir_pairs(lat: &Lattice) -> Result<MirPairReport, CdError> {
    if let Verdict::Fails((a, b, c)) = props::is_dually_slim(lat) {
        return Err(CdError::PreconditionViolated {
            operation: "verify_mir_pairs",
            requires: "a dually slim lattice".to_string(),
            witness: vec![a, b, c],
        });
    }
    if let Verdict::Fails((a, b)) = props::is_lower_semimodular(lat) {
        return Err(CdError::PreconditionViolated {
            operation: "verify_mir_pairs",
            requires: "a lower semimodular lattice".to_string(),
            witness: vec![a, b],
        });
    }
    let (pairs_checked, violations) = mir_pair_scan(lat);
    Ok(MirPairReport {
        pairs_checked,
        violations,
    })
}
