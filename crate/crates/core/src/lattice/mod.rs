//! Finite bounded lattices over dense element indices.
//!
//! A lattice is stored as the full order relation (bit-matrix rows of
//! up-sets and down-sets) plus precomputed meet and join tables. Elements
//! are `0..n`; the cover relation kept alongside is always the transitive
//! reduction of the order, regardless of which redundant pairs were given
//! at construction.
//!
//! Construction validates eagerly: [`Lattice::from_covers`] rejects cyclic
//! cover lists and any order in which some pair lacks a meet or a join,
//! naming a witness pair. A successfully built value is therefore always a
//! bounded lattice, and query methods never fail on valid indices.

pub mod io;

use crate::bitset::ElemSet;

/// Which bound was missing when a pair of elements broke latticehood.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundKind::Meet => write!(f, "meet"),
            BoundKind::Join => write!(f, "join"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("cover index {index} out of range for {n} elements")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("cover relation contains a cycle")]
    CyclicCovers,
    #[error("not a lattice: elements {x} and {y} have no {missing}")]
    NotALattice { x: usize, y: usize, missing: BoundKind },
    #[error("not a partial order: {reason}")]
    NotAPartialOrder { reason: String },
    #[error("the bottom element has no lower covers")]
    BottomHasNoLowerCovers,
}

/// A finite bounded lattice on elements `0..n`.
#[derive(Debug, Clone)]
pub struct Lattice {
    n: usize,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    covers: Vec<(usize, usize)>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    meet_t: Vec<u32>,
    join_t: Vec<u32>,
    bottom: usize,
    top: usize,
    height: Vec<u32>,
}

impl Lattice {
    /// Builds a lattice from its element count and a list of cover pairs
    /// `(i, j)` meaning `i` is covered by `j`. The order is the
    /// reflexive-transitive closure of the pairs; redundant pairs are
    /// dropped when the stored cover relation is recomputed as the
    /// transitive reduction.
    pub fn from_covers(n: usize, pairs: &[(usize, usize)]) -> Result<Lattice, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        for &(i, j) in pairs {
            for index in [i, j] {
                if index >= n {
                    return Err(LatticeError::IndexOutOfRange { index, n });
                }
            }
            if i == j {
                return Err(LatticeError::CyclicCovers);
            }
        }
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        let mut seen = std::collections::HashSet::new();
        for &(i, j) in pairs {
            if seen.insert((i, j)) {
                succ[i].push(j);
                indeg[j] += 1;
            }
        }
        // Kahn topological order; a leftover vertex means a cycle.
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        let mut qi = 0;
        while qi < queue.len() {
            let v = queue[qi];
            qi += 1;
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if order.len() < n {
            return Err(LatticeError::CyclicCovers);
        }
        let mut up = vec![ElemSet::empty(n); n];
        for &v in order.iter().rev() {
            up[v].insert(v);
            let mut row = up[v].clone();
            for &w in &succ[v] {
                row.union_with(&up[w]);
            }
            up[v] = row;
        }
        Self::finish(n, up)
    }

    /// Builds a lattice from up-set rows: `rows[x]` must be `{y : x <= y}`.
    /// Validates that the relation is a partial order and a lattice.
    pub fn from_leq_rows(n: usize, rows: Vec<ElemSet>) -> Result<Lattice, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        assert_eq!(rows.len(), n);
        for (x, row) in rows.iter().enumerate() {
            if !row.contains(x) {
                return Err(LatticeError::NotAPartialOrder {
                    reason: format!("relation is not reflexive at {x}"),
                });
            }
        }
        for x in 0..n {
            for y in rows[x].iter() {
                if y != x && rows[y].contains(x) {
                    return Err(LatticeError::NotAPartialOrder {
                        reason: format!("elements {x} and {y} are mutually related"),
                    });
                }
                if !rows[y].is_subset_of(&rows[x]) {
                    return Err(LatticeError::NotAPartialOrder {
                        reason: format!("relation is not transitive through {x} <= {y}"),
                    });
                }
            }
        }
        Self::finish(n, rows)
    }

    /// Shared second construction stage: derives down-sets, meet and join
    /// tables (failing with a witness pair when a bound is missing), the
    /// cover relation as a transitive reduction, and chain heights.
    fn finish(n: usize, up: Vec<ElemSet>) -> Result<Lattice, LatticeError> {
        let mut down = vec![ElemSet::empty(n); n];
        for x in 0..n {
            for y in up[x].iter() {
                down[y].insert(x);
            }
        }
        // Linear extension: ascending down-set size, ties by index.
        let mut topo: Vec<usize> = (0..n).collect();
        topo.sort_by_key(|&x| (down[x].len(), x));
        let mut pos = vec![0usize; n];
        for (p, &x) in topo.iter().enumerate() {
            pos[x] = p;
        }

        let mut meet_t = vec![0u32; n * n];
        let mut join_t = vec![0u32; n * n];
        for x in 0..n {
            for y in x..n {
                let common_lower = down[x].intersection(&down[y]);
                // The greatest element of the common lower bounds, if it
                // exists, is the one latest in the linear extension.
                let m = common_lower.iter().max_by_key(|&e| pos[e]);
                let m = match m {
                    Some(m) if common_lower.is_subset_of(&down[m]) => m,
                    _ => {
                        return Err(LatticeError::NotALattice {
                            x,
                            y,
                            missing: BoundKind::Meet,
                        })
                    }
                };
                let common_upper = up[x].intersection(&up[y]);
                let j = common_upper.iter().min_by_key(|&e| pos[e]);
                let j = match j {
                    Some(j) if common_upper.is_subset_of(&up[j]) => j,
                    _ => {
                        return Err(LatticeError::NotALattice {
                            x,
                            y,
                            missing: BoundKind::Join,
                        })
                    }
                };
                meet_t[x * n + y] = m as u32;
                meet_t[y * n + x] = m as u32;
                join_t[x * n + y] = j as u32;
                join_t[y * n + x] = j as u32;
            }
        }
        let bottom = topo[0];
        let top = topo[n - 1];

        // Transitive reduction: y covers x iff x < y with nothing strictly
        // between, i.e. the strict interval (x, y) is empty.
        let mut covers = Vec::new();
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for x in 0..n {
            for y in up[x].iter() {
                if y == x {
                    continue;
                }
                let mut between = up[x].intersection(&down[y]);
                between.remove(x);
                between.remove(y);
                if between.is_empty() {
                    covers.push((x, y));
                    upper_covers[x].push(y);
                    lower_covers[y].push(x);
                }
            }
        }
        covers.sort_unstable();
        for list in upper_covers.iter_mut().chain(lower_covers.iter_mut()) {
            list.sort_unstable();
        }

        let mut height = vec![0u32; n];
        for &x in &topo {
            height[x] = lower_covers[x]
                .iter()
                .map(|&c| height[c] + 1)
                .max()
                .unwrap_or(0);
        }

        Ok(Lattice {
            n,
            up,
            down,
            covers,
            upper_covers,
            lower_covers,
            meet_t,
            join_t,
            bottom,
            top,
            height,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        !self.leq(x, y) && !self.leq(y, x)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet_t[x * self.n + y] as usize
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join_t[x * self.n + y] as usize
    }

    /// Cover pairs `(x, y)` with `x` covered by `y`, ascending.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.upper_covers[x].binary_search(&y).is_ok()
    }

    /// Principal ideal `{x : x <= u}`.
    pub fn ideal(&self, u: usize) -> &ElemSet {
        &self.down[u]
    }

    /// Principal filter `{x : u <= x}`.
    pub fn filter(&self, u: usize) -> &ElemSet {
        &self.up[u]
    }

    /// Atoms: upper covers of the bottom element.
    pub fn atoms(&self) -> &[usize] {
        &self.upper_covers[self.bottom]
    }

    /// Coatoms: lower covers of the top element.
    pub fn coatoms(&self) -> &[usize] {
        &self.lower_covers[self.top]
    }

    /// Length: number of covers on a longest maximal chain.
    pub fn length(&self) -> usize {
        self.height[self.top] as usize
    }

    /// Length of a longest chain from the bottom up to `x`.
    pub fn height_of(&self, x: usize) -> usize {
        self.height[x] as usize
    }

    /// Meet of the lower covers of `u`. Errors on the bottom element,
    /// which has none.
    pub fn lowstar(&self, u: usize) -> Result<usize, LatticeError> {
        let mut it = self.lower_covers[u].iter();
        let first = *it.next().ok_or(LatticeError::BottomHasNoLowerCovers)?;
        Ok(it.fold(first, |acc, &c| self.meet(acc, c)))
    }

    /// Join-irreducible elements: exactly one lower cover.
    pub fn jir(&self) -> ElemSet {
        ElemSet::from_indices(
            self.n,
            (0..self.n).filter(|&x| self.lower_covers[x].len() == 1),
        )
    }

    /// Meet-irreducible elements: exactly one upper cover.
    pub fn mir(&self) -> ElemSet {
        ElemSet::from_indices(
            self.n,
            (0..self.n).filter(|&x| self.upper_covers[x].len() == 1),
        )
    }

    /// Iterator over all maximal chains, each a bottom-to-top element list.
    pub fn maximal_chains(&self) -> MaximalChains<'_> {
        MaximalChains {
            lat: self,
            stack: Vec::new(),
            started: false,
        }
    }

    /// The interval `[lo, hi]` as a lattice of its own, together with the
    /// map from new indices to ambient ones. Requires `lo <= hi`.
    pub fn interval(&self, lo: usize, hi: usize) -> (Lattice, Vec<usize>) {
        assert!(
            self.leq(lo, hi),
            "interval endpoints must satisfy lo <= hi"
        );
        let members: Vec<usize> = self.up[lo].intersection(&self.down[hi]).to_vec();
        let m = members.len();
        let mut index_of = std::collections::HashMap::new();
        for (i, &e) in members.iter().enumerate() {
            index_of.insert(e, i);
        }
        let mut rows = vec![ElemSet::empty(m); m];
        for (i, &e) in members.iter().enumerate() {
            for y in self.up[e].iter() {
                if let Some(&j) = index_of.get(&y) {
                    if self.leq(y, hi) {
                        rows[i].insert(j);
                    }
                }
            }
        }
        let lat = Lattice::from_leq_rows(m, rows)
            .expect("an interval of a lattice is itself a lattice");
        (lat, members)
    }
}

/// Depth-first enumeration of maximal chains along cover edges.
pub struct MaximalChains<'a> {
    lat: &'a Lattice,
    stack: Vec<(usize, usize)>,
    started: bool,
}

impl Iterator for MaximalChains<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        loop {
            if self.stack.is_empty() {
                if self.started {
                    return None;
                }
                self.started = true;
                self.stack.push((self.lat.bottom, 0));
            }
            let (e, ci) = *self.stack.last().unwrap();
            if e == self.lat.top {
                let chain: Vec<usize> = self.stack.iter().map(|&(x, _)| x).collect();
                self.stack.pop();
                return Some(chain);
            }
            let kids = &self.lat.upper_covers[e];
            if ci < kids.len() {
                self.stack.last_mut().unwrap().1 = ci + 1;
                self.stack.push((kids[ci], 0));
            } else {
                self.stack.pop();
            }
        }
    }
}
