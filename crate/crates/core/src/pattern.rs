//! The three small pattern digraphs whose induced copies the colour
//! hypotheses constrain, and induced-subdigraph isomorphism search.

use std::fmt;

use crate::digraph::{ArcColouredDigraph, VertexId, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternName {
    Qt4,
    Cb5,
    Tb4,
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternName::Qt4 => write!(f, "QT4"),
            PatternName::Cb5 => write!(f, "CB5"),
            PatternName::Tb4 => write!(f, "TB4"),
        }
    }
}

/// A small uncoloured digraph used as an induced-subdigraph pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGraph {
    pub name: PatternName,
    n: usize,
    arcs: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl PatternGraph {
    fn from_arcs(name: PatternName, n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut adj = vec![0u64; n];
        for &(u, v) in arcs {
            adj[u] |= 1u64 << v;
        }
        PatternGraph { name, n, arcs: arcs.to_vec(), adj }
    }

    /// Vertices x, u, v, y as indices 0..4.
    pub fn qt4() -> Self {
        Self::from_arcs(PatternName::Qt4, 4, &[(0, 1), (1, 2), (2, 3), (3, 1), (2, 0)])
    }

    /// Vertices u1..u5 as indices 0..5.
    pub fn cb5() -> Self {
        Self::from_arcs(
            PatternName::Cb5,
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (3, 0), (4, 1)],
        )
    }

    /// Vertices u1..u4 as indices 0..4.
    pub fn tb4() -> Self {
        Self::from_arcs(PatternName::Tb4, 4, &[(0, 1), (1, 2), (2, 3), (0, 3)])
    }

    pub fn by_name(name: PatternName) -> Self {
        match name {
            PatternName::Qt4 => Self::qt4(),
            PatternName::Cb5 => Self::cb5(),
            PatternName::Tb4 => Self::tb4(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// All permutations of the pattern vertices preserving the arc set.
    /// Patterns have at most 5 vertices, so plain enumeration is fine.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let mut perms = Vec::new();
        let mut perm: Vec<usize> = (0..self.n).collect();
        permute(&mut perm, 0, &mut |p| {
            let ok = (0..self.n).all(|u| {
                (0..self.n).all(|v| u == v || self.has_arc(u, v) == self.has_arc(p[u], p[v]))
            });
            if ok {
                perms.push(p.to_vec());
            }
        });
        perms
    }
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// An injective map from pattern vertices to digraph vertices; `image[i]` is
/// the vertex playing the role of pattern vertex `i`.
pub type PatternCopy = Vec<VertexId>;

/// All induced copies of `p` in `d`: injective maps under which the
/// subdigraph induced by the image has exactly the image of the pattern's
/// arc set. One representative per automorphism orbit of the pattern is
/// reported, namely the lexicographically smallest map; two maps lie in the
/// same orbit exactly when they share an image set, so deduplication is by
/// image set. Maps come out in lexicographic order.
pub fn induced_copies(d: &ArcColouredDigraph, p: &PatternGraph) -> Vec<PatternCopy> {
    let k = p.vertex_count();
    if k > d.vertex_count() {
        return Vec::new();
    }
    let mut seen_images: std::collections::BTreeSet<u64> = Default::default();
    let mut copies = Vec::new();
    let mut map: Vec<VertexId> = Vec::with_capacity(k);
    extend(d, p, &mut map, 0, &mut seen_images, &mut copies);
    copies
}

fn extend(
    d: &ArcColouredDigraph,
    p: &PatternGraph,
    map: &mut Vec<VertexId>,
    used: u64,
    seen_images: &mut std::collections::BTreeSet<u64>,
    out: &mut Vec<PatternCopy>,
) {
    let i = map.len();
    if i == p.vertex_count() {
        if seen_images.insert(used) {
            out.push(map.clone());
        }
        return;
    }
    for w in 0..d.vertex_count() {
        if used >> w & 1 == 1 {
            continue;
        }
        let w = VertexId(w);
        // induced condition against every already-placed vertex, both
        // directions
        let consistent = map.iter().enumerate().all(|(j, &mj)| {
            p.has_arc(i, j) == d.has_arc(w, mj) && p.has_arc(j, i) == d.has_arc(mj, w)
        });
        if consistent {
            map.push(w);
            extend(d, p, map, used | 1u64 << w.0, seen_images, out);
            map.pop();
        }
    }
}

/// Arcs of a concrete copy, as vertex pairs of the host digraph in
/// pattern-arc order.
pub fn copy_arcs(p: &PatternGraph, copy: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    p.arcs().iter().map(|&(u, v)| (copy[u], copy[v])).collect()
}

/// The image of a copy as a vertex set.
pub fn copy_image(copy: &[VertexId]) -> VertexSet {
    copy.iter().copied().collect()
}
