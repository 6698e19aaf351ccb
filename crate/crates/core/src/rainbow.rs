//! Rainbow-path existence queries and the rainbow closure.
//!
//! A rainbow path is a vertex-simple directed path whose arcs carry pairwise
//! distinct colours; a single arc counts. Existence is decided by depth-first
//! backtracking over (current vertex, visited vertices, used colours), with
//! vertices as a u64 mask and colours as a multiword mask. No memoization:
//! these routines double as the trusted oracle, and desk-scale instances do
//! not need it. Path length never exceeds min(n-1, m), which bounds the
//! search depth.

use crate::digraph::{ArcColouredDigraph, ColourId, Digraph, VertexId, VertexSet};
use crate::error::{Error, Result};

/// Used-colour set for the backtracking search; sized to the host palette.
struct ColourMask {
    words: Vec<u64>,
}

impl ColourMask {
    fn new(max_colour: u32) -> Self {
        ColourMask { words: vec![0; (max_colour as usize + 64) / 64] }
    }

    fn contains(&self, c: ColourId) -> bool {
        self.words[c.0 as usize / 64] >> (c.0 as usize % 64) & 1 == 1
    }

    fn set(&mut self, c: ColourId) {
        self.words[c.0 as usize / 64] |= 1 << (c.0 as usize % 64);
    }

    fn clear(&mut self, c: ColourId) {
        self.words[c.0 as usize / 64] &= !(1 << (c.0 as usize % 64));
    }
}

fn max_colour(d: &ArcColouredDigraph) -> u32 {
    d.arcs().iter().map(|a| a.colour.0).max().unwrap_or(0)
}

/// A concrete rainbow path: the vertex sequence and the arc colours in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPath {
    pub vertices: Vec<VertexId>,
    pub colours: Vec<ColourId>,
}

impl WitnessPath {
    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Checks the type invariants against the host digraph: arcs exist with
    /// the recorded colours, vertices are pairwise distinct, colours are
    /// pairwise distinct.
    pub fn validate(&self, d: &ArcColouredDigraph) -> bool {
        if self.vertices.len() != self.colours.len() + 1 || self.colours.is_empty() {
            return false;
        }
        let mut vseen = 0u64;
        for v in &self.vertices {
            if vseen >> v.0 & 1 == 1 {
                return false;
            }
            vseen |= 1 << v.0;
        }
        let mut cseen = std::collections::BTreeSet::new();
        for (i, c) in self.colours.iter().enumerate() {
            if d.arc_colour(self.vertices[i], self.vertices[i + 1]) != Some(*c) {
                return false;
            }
            if !cseen.insert(c.0) {
                return false;
            }
        }
        true
    }
}

/// Does some rainbow (u,v)-path exist? When it does, a shortest witness is
/// returned, found by iterative deepening on path length.
pub fn rainbow_path_exists(
    d: &ArcColouredDigraph,
    u: VertexId,
    v: VertexId,
) -> Result<Option<WitnessPath>> {
    if u == v {
        return Err(Error::SameEndpoints);
    }
    let bound = depth_bound(d);
    let mut used = ColourMask::new(max_colour(d));
    let mut path = vec![u];
    let mut colours = Vec::new();
    for budget in 1..=bound {
        if bounded_search(d, v, budget, &mut path, &mut colours, 1u64 << u.0, &mut used) {
            return Ok(Some(WitnessPath { vertices: path, colours }));
        }
    }
    Ok(None)
}

fn depth_bound(d: &ArcColouredDigraph) -> usize {
    // A rainbow path repeats neither vertices nor colours.
    d.vertex_count().saturating_sub(1).min(d.colour_count())
}

fn bounded_search(
    d: &ArcColouredDigraph,
    target: VertexId,
    budget: usize,
    path: &mut Vec<VertexId>,
    colours: &mut Vec<ColourId>,
    visited: u64,
    used: &mut ColourMask,
) -> bool {
    let cur = *path.last().unwrap();
    if budget == 0 {
        return cur == target;
    }
    if cur == target {
        return false;
    }
    for w in d.out_set(cur).iter() {
        if visited >> w.0 & 1 == 1 {
            continue;
        }
        let c = d.arc_colour(cur, w).unwrap();
        if used.contains(c) {
            continue;
        }
        path.push(w);
        colours.push(c);
        used.set(c);
        if bounded_search(d, target, budget - 1, path, colours, visited | 1 << w.0, used) {
            return true;
        }
        used.clear(c);
        colours.pop();
        path.pop();
    }
    false
}

/// Boolean matrix of rainbow reachability: `reaches(u, v)` iff a rainbow
/// (u,v)-path exists. `reaches(u, u)` is false by convention; kernels and
/// RP-kernels quantify over pairs of distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowReachability {
    n: usize,
    rows: Vec<u64>,
}

impl RainbowReachability {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn reaches(&self, u: VertexId, v: VertexId) -> bool {
        u != v && self.rows[u.0] >> v.0 & 1 == 1
    }

    /// Vertices reachable from `u` by a rainbow path.
    pub fn row(&self, u: VertexId) -> VertexSet {
        VertexSet::from_mask(self.rows[u.0])
    }

    /// True when `u` rainbow-reaches some vertex of `s`.
    pub fn reaches_set(&self, u: VertexId, s: VertexSet) -> bool {
        self.rows[u.0] & s.mask() & !(1u64 << u.0) != 0
    }
}

/// Full reachability matrix. One backtracking sweep per source vertex marks
/// everything any rainbow path from it touches; results equal per-pair
/// queries.
pub fn rainbow_reachability(d: &ArcColouredDigraph) -> RainbowReachability {
    let n = d.vertex_count();
    let mc = max_colour(d);
    let bound = depth_bound(d);
    let mut rows = vec![0u64; n];
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for (u, row) in rows.iter_mut().enumerate() {
        let mut used = ColourMask::new(mc);
        let mut reached = 0u64;
        let goal = all & !(1u64 << u);
        sweep(d, VertexId(u), bound, 1u64 << u, &mut used, &mut reached, goal);
        *row = reached & !(1u64 << u);
    }
    RainbowReachability { n, rows }
}

fn sweep(
    d: &ArcColouredDigraph,
    cur: VertexId,
    budget: usize,
    visited: u64,
    used: &mut ColourMask,
    reached: &mut u64,
    goal: u64,
) {
    if budget == 0 || *reached & goal == goal {
        return;
    }
    for w in d.out_set(cur).iter() {
        if visited >> w.0 & 1 == 1 {
            continue;
        }
        let c = d.arc_colour(cur, w).unwrap();
        if used.contains(c) {
            continue;
        }
        *reached |= 1u64 << w.0;
        used.set(c);
        sweep(d, w, budget - 1, visited | 1 << w.0, used, reached, goal);
        used.clear(c);
    }
}

/// The rainbow closure: an uncoloured digraph on the same vertices with an
/// arc (u,v) exactly when a rainbow (u,v)-path exists in `d`. Every arc of
/// `d` is a rainbow path of length one, so the closure contains `d`.
pub fn rainbow_closure(d: &ArcColouredDigraph) -> Digraph {
    closure_of(d, &rainbow_reachability(d))
}

/// Closure from a precomputed reachability matrix.
pub fn closure_of(d: &ArcColouredDigraph, r: &RainbowReachability) -> Digraph {
    let mut g = Digraph::new(d.vertex_count()).expect("same vertex count as host");
    for u in d.vertices() {
        for v in r.row(u).iter() {
            if u != v {
                g.add_arc(u, v);
            }
        }
    }
    g
}
