//! Shared helpers for the integration tests: seeded random instances and an
//! independent brute-force rainbow-path oracle. The oracle deliberately uses
//! plain vectors and linear scans rather than the library's bitmask search,
//! so the two routes share no code.
#![allow(dead_code)] // each test target uses its own subset of the helpers

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rpk_core::digraph::{Arc, ArcColouredDigraph, VertexId};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random arc-coloured digraph with n vertices, arc probability p and
/// colours drawn from 1..=m.
pub fn random_instance(rng: &mut ChaCha8Rng, n: usize, m: u32, p: f64) -> ArcColouredDigraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push(Arc::new(u, v, rng.gen_range(1..=m)));
            }
        }
    }
    ArcColouredDigraph::from_arcs_relabelled(n, arcs).unwrap()
}

/// Does a rainbow (u,v)-path exist? Exhaustive enumeration of all simple
/// paths, colours kept in a vector and compared linearly.
pub fn oracle_rainbow_reaches(d: &ArcColouredDigraph, u: VertexId, v: VertexId) -> bool {
    fn dfs(
        d: &ArcColouredDigraph,
        cur: VertexId,
        target: VertexId,
        seen: &mut Vec<VertexId>,
        colours: &mut Vec<u32>,
    ) -> bool {
        if cur == target {
            return !colours.is_empty();
        }
        for w in d.vertices() {
            if seen.contains(&w) || !d.has_arc(cur, w) {
                continue;
            }
            let c = d.arc_colour(cur, w).unwrap().value();
            if colours.contains(&c) {
                continue;
            }
            seen.push(w);
            colours.push(c);
            if dfs(d, w, target, seen, colours) {
                return true;
            }
            colours.pop();
            seen.pop();
        }
        false
    }
    if u == v {
        return false;
    }
    dfs(d, u, v, &mut vec![u], &mut Vec::new())
}

/// All simple directed cycles, canonical rotation (minimum vertex first),
/// found by plain DFS from every vertex and deduplicated through a set.
pub fn oracle_all_cycles(d: &ArcColouredDigraph) -> std::collections::BTreeSet<Vec<usize>> {
    let n = d.vertex_count();
    let mut out = std::collections::BTreeSet::new();
    fn dfs(
        d: &ArcColouredDigraph,
        start: usize,
        cur: usize,
        path: &mut Vec<usize>,
        out: &mut std::collections::BTreeSet<Vec<usize>>,
    ) {
        for w in 0..d.vertex_count() {
            if !d.has_arc(VertexId(cur), VertexId(w)) {
                continue;
            }
            if w == start && path.len() >= 2 {
                let min_pos = path
                    .iter()
                    .enumerate()
                    .min_by_key(|(_, &v)| v)
                    .map(|(i, _)| i)
                    .unwrap();
                let mut rotated = path[min_pos..].to_vec();
                rotated.extend_from_slice(&path[..min_pos]);
                out.insert(rotated);
            } else if w != start && !path.contains(&w) {
                path.push(w);
                dfs(d, start, w, path, out);
                path.pop();
            }
        }
    }
    for start in 0..n {
        dfs(d, start, start, &mut vec![start], &mut out);
    }
    out
}
