//! Arc-coloured digraphs with dense (bitmask) and sparse (arc list) views,
//! plus the structural queries the solvers are built on: strongly connected
//! components in condensation order, bounded cycle enumeration and induced
//! subdigraphs.
//!
//! Vertices are indices `0..n` with `n <= 64`, so every vertex set fits in a
//! `u64` and neighbourhood tests are single mask operations.

use std::fmt;

use crate::error::{Error, Result};

/// Index of a vertex, stable within one digraph. Indices run 0..n with no gaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// Arc colour, a positive integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColourId(pub u32);

impl ColourId {
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for ColourId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A coloured arc. Loops are forbidden; the reverse arc may exist
/// independently (a symmetrical pair) with its own colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub from: VertexId,
    pub to: VertexId,
    pub colour: ColourId,
}

impl Arc {
    pub fn new(from: usize, to: usize, colour: u32) -> Self {
        Arc {
            from: VertexId(from),
            to: VertexId(to),
            colour: ColourId(colour),
        }
    }
}

/// A set of vertices of one digraph, stored as a bitmask. Iteration is always
/// in ascending index order, which is the canonical order used everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    mask: u64,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { mask: 0 };

    pub fn from_mask(mask: u64) -> Self {
        VertexSet { mask }
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet { mask: u64::MAX }
        } else {
            VertexSet { mask: (1u64 << n) - 1 }
        }
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet { mask: 1u64 << v.0 }
    }

    pub fn mask(self) -> u64 {
        self.mask
    }

    pub fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.mask >> v.0 & 1 == 1
    }

    pub fn insert(&mut self, v: VertexId) {
        self.mask |= 1u64 << v.0;
    }

    pub fn remove(&mut self, v: VertexId) {
        self.mask &= !(1u64 << v.0);
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet { mask: self.mask | other.mask }
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet { mask: self.mask & other.mask }
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet { mask: self.mask & !other.mask }
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.mask & !other.mask == 0
    }

    /// Smallest vertex of the set, if any.
    pub fn min_vertex(self) -> Option<VertexId> {
        if self.mask == 0 {
            None
        } else {
            Some(VertexId(self.mask.trailing_zeros() as usize))
        }
    }

    pub fn iter(self) -> impl Iterator<Item = VertexId> {
        let mut rest = self.mask;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(VertexId(v))
            }
        })
    }

    pub fn to_vec(self) -> Vec<VertexId> {
        self.iter().collect()
    }

    /// Canonical order: by size first, then lexicographic on the ascending
    /// element lists. `all_kernels` and the brute-force oracle report sets in
    /// this order.
    pub fn canonical_cmp(self, other: VertexSet) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.to_vec().cmp(&other.to_vec()))
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v.0)?;
        }
        write!(f, "}}")
    }
}

/// An uncoloured digraph on `0..n`, the codomain of the rainbow closure and
/// the universe of the classical kernel machinery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
    inc: Vec<u64>,
}

impl Digraph {
    pub fn new(n: usize) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooManyVertices { n });
        }
        Ok(Digraph { n, out: vec![0; n], inc: vec![0; n] })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Digraph::new(n)?;
        for &(u, v) in arcs {
            g.check_pair(u, v)?;
            if g.has_arc(VertexId(u), VertexId(v)) {
                return Err(Error::DuplicateArc { from: u, to: v });
            }
            g.add_arc(VertexId(u), VertexId(v));
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::InvalidVertex { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::InvalidVertex { v, n: self.n });
        }
        if u == v {
            return Err(Error::LoopArc { v: u });
        }
        Ok(())
    }

    pub fn add_arc(&mut self, u: VertexId, v: VertexId) {
        debug_assert!(u != v && u.0 < self.n && v.0 < self.n);
        self.out[u.0] |= 1u64 << v.0;
        self.inc[v.0] |= 1u64 << u.0;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.out[u.0] >> v.0 & 1 == 1
    }

    pub fn out_set(&self, u: VertexId) -> VertexSet {
        VertexSet::from_mask(self.out[u.0])
    }

    pub fn in_set(&self, u: VertexId) -> VertexSet {
        VertexSet::from_mask(self.inc[u.0])
    }

    /// Arcs in ascending (from, to) order.
    pub fn arcs(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in VertexSet::from_mask(self.out[u]).iter() {
                out.push((VertexId(u), v));
            }
        }
        out
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// The subdigraph keeping only arcs whose reverse is absent.
    pub fn asymmetric_part(&self) -> Digraph {
        let mut g = Digraph { n: self.n, out: vec![0; self.n], inc: vec![0; self.n] };
        for u in 0..self.n {
            let keep = self.out[u] & !self.inc[u];
            g.out[u] = keep;
            for v in VertexSet::from_mask(keep).iter() {
                g.inc[v.0] |= 1u64 << u;
            }
        }
        g
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Kahn's algorithm; among ready vertices the smallest index goes first,
    /// so the order is deterministic. Returns None when a cycle exists.
    pub fn topological_order(&self) -> Option<Vec<VertexId>> {
        let mut indeg: Vec<usize> = (0..self.n)
            .map(|v| self.inc[v].count_ones() as usize)
            .collect();
        let mut ready: u64 = 0;
        for (v, &deg) in indeg.iter().enumerate() {
            if deg == 0 {
                ready |= 1u64 << v;
            }
        }
        let mut order = Vec::with_capacity(self.n);
        while ready != 0 {
            let v = ready.trailing_zeros() as usize;
            ready &= ready - 1;
            order.push(VertexId(v));
            for w in VertexSet::from_mask(self.out[v]).iter() {
                indeg[w.0] -= 1;
                if indeg[w.0] == 0 {
                    ready |= 1u64 << w.0;
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }
}

/// An arc-coloured digraph: the universe every operation of this crate
/// consumes. Immutable after construction and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcColouredDigraph {
    n: usize,
    colour_count: usize,
    /// Row-major colour lookup; `colour[u*n+v]` is 0 when the arc is absent.
    colour: Vec<u32>,
    out: Vec<u64>,
    inc: Vec<u64>,
    /// Arc list in ascending (from, to) order.
    arcs: Vec<Arc>,
}

impl ArcColouredDigraph {
    /// Strict constructor: colours must be exactly 1..=m with every value used.
    pub fn new(n: usize, arcs: Vec<Arc>) -> Result<Self> {
        let g = Self::build(n, arcs)?;
        // colour_count is the number of distinct values, so the colours are
        // contiguous exactly when every value in 1..=colour_count appears
        let mut seen = vec![false; g.colour_count + 1];
        for a in &g.arcs {
            let c = a.colour.0 as usize;
            if c <= g.colour_count {
                seen[c] = true;
            }
        }
        for (c, &present) in seen.iter().enumerate().skip(1) {
            if !present {
                return Err(Error::ColourGap { missing: c as u32 });
            }
        }
        Ok(g)
    }

    /// Accepts arbitrary positive colours and relabels them to 1..=m,
    /// preserving equality classes, in ascending order of the original values.
    pub fn from_arcs_relabelled(n: usize, arcs: Vec<Arc>) -> Result<Self> {
        let mut values: Vec<u32> = arcs.iter().map(|a| a.colour.0).collect();
        values.sort_unstable();
        values.dedup();
        let relabelled = arcs
            .into_iter()
            .map(|a| {
                let idx = values.binary_search(&a.colour.0).unwrap();
                Arc { colour: ColourId(idx as u32 + 1), ..a }
            })
            .collect();
        Self::build(n, relabelled)
    }

    /// Shared validation; colour contiguity is the caller's concern.
    fn build(n: usize, mut arcs: Vec<Arc>) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooManyVertices { n });
        }
        arcs.sort_by_key(|a| (a.from, a.to));
        let mut colour = vec![0u32; n * n];
        let mut out = vec![0u64; n];
        let mut inc = vec![0u64; n];
        let mut distinct: Vec<u32> = Vec::new();
        for a in &arcs {
            let (u, v) = (a.from.0, a.to.0);
            if u >= n {
                return Err(Error::InvalidVertex { v: u, n });
            }
            if v >= n {
                return Err(Error::InvalidVertex { v, n });
            }
            if u == v {
                return Err(Error::LoopArc { v: u });
            }
            if a.colour.0 == 0 {
                return Err(Error::InvalidColour);
            }
            if colour[u * n + v] != 0 {
                return Err(Error::DuplicateArc { from: u, to: v });
            }
            colour[u * n + v] = a.colour.0;
            out[u] |= 1u64 << v;
            inc[v] |= 1u64 << u;
            distinct.push(a.colour.0);
        }
        distinct.sort_unstable();
        distinct.dedup();
        Ok(ArcColouredDigraph {
            n,
            colour_count: distinct.len(),
            colour,
            out,
            inc,
            arcs,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    /// Number of distinct colours appearing on arcs.
    pub fn colour_count(&self) -> usize {
        self.colour_count
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.out[u.0] >> v.0 & 1 == 1
    }

    pub fn arc_colour(&self, u: VertexId, v: VertexId) -> Option<ColourId> {
        let c = self.colour[u.0 * self.n + v.0];
        (c != 0).then_some(ColourId(c))
    }

    pub fn out_set(&self, u: VertexId) -> VertexSet {
        VertexSet::from_mask(self.out[u.0])
    }

    pub fn in_set(&self, u: VertexId) -> VertexSet {
        VertexSet::from_mask(self.inc[u.0])
    }

    pub fn out_degree(&self, u: VertexId) -> usize {
        self.out[u.0].count_ones() as usize
    }

    pub fn in_degree(&self, u: VertexId) -> usize {
        self.inc[u.0].count_ones() as usize
    }

    /// Vertices adjacent to `u` in either direction.
    pub fn adjacent_set(&self, u: VertexId) -> VertexSet {
        VertexSet::from_mask(self.out[u.0] | self.inc[u.0])
    }

    pub fn is_source(&self, u: VertexId) -> bool {
        self.inc[u.0] == 0
    }

    pub fn is_sink(&self, u: VertexId) -> bool {
        self.out[u.0] == 0
    }

    /// Forget colours.
    pub fn underlying(&self) -> Digraph {
        Digraph { n: self.n, out: self.out.clone(), inc: self.inc.clone() }
    }

    /// Subdigraph induced by `s`, with vertices renumbered 0..|s| in ascending
    /// order of the original indices. Arc colours are preserved exactly, so
    /// the sub-instance may use a non-contiguous colour set; `colour_count`
    /// is the number of distinct colours actually present. The returned
    /// back-map sends each new index to its original vertex.
    pub fn induced_subdigraph(&self, s: VertexSet) -> Result<(ArcColouredDigraph, Vec<VertexId>)> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if !s.is_subset_of(VertexSet::full(self.n)) {
            let v = s.iter().find(|v| v.0 >= self.n).unwrap();
            return Err(Error::InvalidVertex { v: v.0, n: self.n });
        }
        let back: Vec<VertexId> = s.to_vec();
        let mut fwd = vec![usize::MAX; self.n];
        for (i, v) in back.iter().enumerate() {
            fwd[v.0] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|a| s.contains(a.from) && s.contains(a.to))
            .map(|a| Arc {
                from: VertexId(fwd[a.from.0]),
                to: VertexId(fwd[a.to.0]),
                colour: a.colour,
            })
            .collect();
        let g = Self::build(back.len(), arcs)?;
        Ok((g, back))
    }
}

/// Strongly connected components, ordered so that every arc runs from an
/// earlier component to a later one (no arc from a later component back).
/// Ties in the topological order of the condensation are broken by smallest
/// contained vertex index.
pub fn strong_components(d: &ArcColouredDigraph) -> Vec<VertexSet> {
    let comps = tarjan(d.n, &d.out);
    // Condensation plus deterministic Kahn.
    let k = comps.len();
    let mut comp_of = vec![0usize; d.n];
    for (i, c) in comps.iter().enumerate() {
        for v in c.iter() {
            comp_of[v.0] = i;
        }
    }
    let mut succ = vec![std::collections::BTreeSet::new(); k];
    for u in 0..d.n {
        for v in VertexSet::from_mask(d.out[u]).iter() {
            let (cu, cv) = (comp_of[u], comp_of[v.0]);
            if cu != cv {
                succ[cu].insert(cv);
            }
        }
    }
    let mut indeg = vec![0usize; k];
    for adj in &succ {
        for &v in adj {
            indeg[v] += 1;
        }
    }
    let mut order = Vec::with_capacity(k);
    let mut ready: Vec<usize> = (0..k).filter(|&i| indeg[i] == 0).collect();
    while !ready.is_empty() {
        // smallest min-vertex first
        let (pos, _) = ready
            .iter()
            .enumerate()
            .min_by_key(|(_, &i)| comps[i].min_vertex())
            .unwrap();
        let i = ready.swap_remove(pos);
        order.push(comps[i]);
        for &j in &succ[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                ready.push(j);
            }
        }
    }
    order
}

fn tarjan(n: usize, out: &[u64]) -> Vec<VertexSet> {
    struct State<'a> {
        out: &'a [u64],
        index: usize,
        idx: Vec<Option<usize>>,
        low: Vec<usize>,
        stack: Vec<usize>,
        on_stack: u64,
        comps: Vec<VertexSet>,
    }
    fn connect(v: usize, st: &mut State) {
        st.idx[v] = Some(st.index);
        st.low[v] = st.index;
        st.index += 1;
        st.stack.push(v);
        st.on_stack |= 1u64 << v;
        for w in VertexSet::from_mask(st.out[v]).iter() {
            let w = w.0;
            if st.idx[w].is_none() {
                connect(w, st);
                st.low[v] = st.low[v].min(st.low[w]);
            } else if st.on_stack >> w & 1 == 1 {
                st.low[v] = st.low[v].min(st.idx[w].unwrap());
            }
        }
        if st.low[v] == st.idx[v].unwrap() {
            let mut comp = VertexSet::EMPTY;
            loop {
                let w = st.stack.pop().unwrap();
                st.on_stack &= !(1u64 << w);
                comp.insert(VertexId(w));
                if w == v {
                    break;
                }
            }
            st.comps.push(comp);
        }
    }
    let mut st = State {
        out,
        index: 0,
        idx: vec![None; n],
        low: vec![0; n],
        stack: Vec::new(),
        on_stack: 0,
        comps: Vec::new(),
    };
    for v in 0..n {
        if st.idx[v].is_none() {
            connect(v, &mut st);
        }
    }
    st.comps
}

/// Every directed cycle of length at most `k`, one entry per cycle, rotated
/// so the smallest vertex comes first. Results are sorted by (length,
/// vertex sequence). `k < 2` yields nothing since loops are forbidden.
pub fn cycles_up_to(d: &ArcColouredDigraph, k: usize) -> Vec<Vec<VertexId>> {
    let mut cycles = Vec::new();
    enumerate_cycles(d, k, &mut |cyc| {
        cycles.push(cyc.to_vec());
        true
    });
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    cycles
}

/// Visits each cycle of length <= k exactly once, in canonical rotation.
/// The callback returns false to stop early. Each cycle is discovered from
/// its minimum vertex with only larger vertices inside, so no deduplication
/// is needed.
pub(crate) fn enumerate_cycles(
    d: &ArcColouredDigraph,
    k: usize,
    visit: &mut dyn FnMut(&[VertexId]) -> bool,
) -> bool {
    fn dfs(
        d: &ArcColouredDigraph,
        start: usize,
        k: usize,
        path: &mut Vec<VertexId>,
        visited: u64,
        visit: &mut dyn FnMut(&[VertexId]) -> bool,
    ) -> bool {
        let cur = path.last().unwrap().0;
        for w in d.out_set(VertexId(cur)).iter() {
            if w.0 == start && path.len() >= 2 {
                if !visit(path) {
                    return false;
                }
            } else if w.0 > start && visited >> w.0 & 1 == 0 && path.len() < k {
                path.push(w);
                if !dfs(d, start, k, path, visited | 1u64 << w.0, visit) {
                    return false;
                }
                path.pop();
            }
        }
        true
    }
    if k < 2 {
        return true;
    }
    for start in 0..d.n {
        let mut path = vec![VertexId(start)];
        if !dfs(d, start, k, &mut path, 1u64 << start, visit) {
            return false;
        }
    }
    true
}

/// Colours along a cycle given as a vertex sequence.
pub fn cycle_colours(d: &ArcColouredDigraph, cycle: &[VertexId]) -> Vec<ColourId> {
    (0..cycle.len())
        .map(|i| {
            d.arc_colour(cycle[i], cycle[(i + 1) % cycle.len()])
                .expect("cycle must follow arcs of the digraph")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> ArcColouredDigraph {
        ArcColouredDigraph::new(
            3,
            vec![Arc::new(0, 1, 1), Arc::new(1, 2, 2), Arc::new(2, 0, 3)],
        )
        .unwrap()
    }

    #[test]
    fn rejects_loops_duplicates_and_gaps() {
        assert_eq!(
            ArcColouredDigraph::new(2, vec![Arc::new(0, 0, 1)]),
            Err(Error::LoopArc { v: 0 })
        );
        assert_eq!(
            ArcColouredDigraph::new(2, vec![Arc::new(0, 1, 1), Arc::new(0, 1, 2)]),
            Err(Error::DuplicateArc { from: 0, to: 1 })
        );
        assert_eq!(
            ArcColouredDigraph::new(2, vec![Arc::new(0, 1, 2)]),
            Err(Error::ColourGap { missing: 1 })
        );
        assert_eq!(
            ArcColouredDigraph::new(2, vec![Arc::new(0, 1, 0)]),
            Err(Error::InvalidColour)
        );
        assert_eq!(
            ArcColouredDigraph::new(1, vec![Arc::new(0, 1, 1)]),
            Err(Error::InvalidVertex { v: 1, n: 1 })
        );
    }

    #[test]
    fn relabelling_compacts_colours() {
        let g = ArcColouredDigraph::from_arcs_relabelled(
            3,
            vec![Arc::new(0, 1, 7), Arc::new(1, 2, 3), Arc::new(2, 0, 7)],
        )
        .unwrap();
        assert_eq!(g.colour_count(), 2);
        assert_eq!(g.arc_colour(VertexId(1), VertexId(2)), Some(ColourId(1)));
        assert_eq!(g.arc_colour(VertexId(0), VertexId(1)), Some(ColourId(2)));
        assert_eq!(g.arc_colour(VertexId(2), VertexId(0)), Some(ColourId(2)));
    }

    #[test]
    fn symmetric_pair_is_allowed() {
        let g = ArcColouredDigraph::new(2, vec![Arc::new(0, 1, 1), Arc::new(1, 0, 2)]).unwrap();
        assert!(g.has_arc(VertexId(0), VertexId(1)));
        assert!(g.has_arc(VertexId(1), VertexId(0)));
    }

    #[test]
    fn strong_components_of_triangle() {
        let comps = strong_components(&triangle());
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 3);
    }

    #[test]
    fn strong_components_of_path_in_order() {
        let g = ArcColouredDigraph::new(3, vec![Arc::new(0, 1, 1), Arc::new(1, 2, 2)]).unwrap();
        let comps = strong_components(&g);
        assert_eq!(
            comps,
            vec![
                VertexSet::singleton(VertexId(0)),
                VertexSet::singleton(VertexId(1)),
                VertexSet::singleton(VertexId(2)),
            ]
        );
    }

    #[test]
    fn component_order_has_no_backward_arc() {
        // two triangles joined by one arc, plus a pendant sink
        let g = ArcColouredDigraph::new(
            7,
            vec![
                Arc::new(3, 4, 1),
                Arc::new(4, 5, 1),
                Arc::new(5, 3, 1),
                Arc::new(5, 0, 1),
                Arc::new(0, 1, 1),
                Arc::new(1, 2, 1),
                Arc::new(2, 0, 1),
                Arc::new(2, 6, 1),
            ],
        )
        .unwrap();
        let comps = strong_components(&g);
        assert_eq!(comps.len(), 3);
        let pos = |v: usize| comps.iter().position(|c| c.contains(VertexId(v))).unwrap();
        for a in g.arcs() {
            assert!(pos(a.from.0) <= pos(a.to.0));
        }
        assert_eq!(pos(6), 2);
    }

    #[test]
    fn cycles_in_triangle() {
        let cycles = cycles_up_to(&triangle(), 3);
        assert_eq!(cycles, vec![vec![VertexId(0), VertexId(1), VertexId(2)]]);
    }

    #[test]
    fn cycles_respect_bound() {
        let g = ArcColouredDigraph::new(
            4,
            vec![
                Arc::new(0, 1, 1),
                Arc::new(1, 2, 1),
                Arc::new(2, 3, 1),
                Arc::new(3, 0, 1),
            ],
        )
        .unwrap();
        assert!(cycles_up_to(&g, 3).is_empty());
        assert_eq!(cycles_up_to(&g, 4).len(), 1);
    }

    #[test]
    fn acyclic_has_no_cycles() {
        let g = ArcColouredDigraph::new(3, vec![Arc::new(0, 1, 1), Arc::new(0, 2, 1)]).unwrap();
        assert!(cycles_up_to(&g, 3).is_empty());
    }

    #[test]
    fn induced_subdigraph_identity_and_errors() {
        let g = triangle();
        let (h, back) = g.induced_subdigraph(VertexSet::full(3)).unwrap();
        assert_eq!(h, g);
        assert_eq!(back, vec![VertexId(0), VertexId(1), VertexId(2)]);
        assert_eq!(
            g.induced_subdigraph(VertexSet::EMPTY),
            Err(Error::EmptyVertexSet)
        );
    }

    #[test]
    fn induced_subdigraph_preserves_colours() {
        let g = ArcColouredDigraph::new(
            4,
            vec![
                Arc::new(0, 1, 1),
                Arc::new(1, 2, 2),
                Arc::new(2, 0, 3),
                Arc::new(3, 0, 4),
            ],
        )
        .unwrap();
        let s: VertexSet = [VertexId(0), VertexId(1), VertexId(2)].into_iter().collect();
        let (h, back) = g.induced_subdigraph(s).unwrap();
        assert_eq!(back, vec![VertexId(0), VertexId(1), VertexId(2)]);
        assert_eq!(h.arc_colour(VertexId(2), VertexId(0)), Some(ColourId(3)));
        assert_eq!(h.colour_count(), 3);
        let single = g.induced_subdigraph(VertexSet::singleton(VertexId(3))).unwrap().0;
        assert_eq!(single.vertex_count(), 1);
        assert_eq!(single.arc_count(), 0);
    }

    #[test]
    fn digraph_topological_order_and_asymmetric_part() {
        let g = Digraph::from_arcs(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert!(!g.is_acyclic());
        let asym = g.asymmetric_part();
        assert_eq!(asym.arcs(), vec![(VertexId(1), VertexId(2))]);
        assert!(asym.is_acyclic());
    }

    #[test]
    fn canonical_set_order_is_size_then_lex() {
        let a: VertexSet = [VertexId(0), VertexId(3)].into_iter().collect();
        let b: VertexSet = [VertexId(1), VertexId(2)].into_iter().collect();
        let c = VertexSet::singleton(VertexId(5));
        assert_eq!(c.canonical_cmp(a), std::cmp::Ordering::Less);
        assert_eq!(a.canonical_cmp(b), std::cmp::Ordering::Less);
    }
}
