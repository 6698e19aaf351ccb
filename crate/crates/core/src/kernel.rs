//! Classical (uncoloured) kernel machinery: validation, exhaustive
//! enumeration, the unique kernel of an acyclic digraph, and the
//! kernel-perfect sufficient condition (every cycle has a symmetrical arc).

use crate::digraph::{Digraph, VertexId, VertexSet};
use crate::error::{Error, Result};

/// Default vertex bound for exhaustive kernel enumeration.
pub const DEFAULT_KERNEL_BOUND: usize = 20;

/// Why a candidate set is not a kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelViolation {
    /// Two set members joined by an arc (either direction).
    AdjacentPair(VertexId, VertexId),
    /// An outside vertex with no arc into the set.
    Unabsorbed(VertexId),
}

/// Kernel test: `s` must be independent (no arc between members) and
/// absorbing (every outside vertex has an arc into `s`). On failure the
/// first violation in ascending vertex order is reported.
pub fn is_kernel(g: &Digraph, s: VertexSet) -> std::result::Result<(), KernelViolation> {
    for u in s.iter() {
        let hit = g.out_set(u).intersection(s);
        if let Some(v) = hit.min_vertex() {
            return Err(KernelViolation::AdjacentPair(u, v));
        }
    }
    for v in g.vertices() {
        if !s.contains(v) && g.out_set(v).intersection(s).is_empty() {
            return Err(KernelViolation::Unabsorbed(v));
        }
    }
    Ok(())
}

/// Every kernel of `g`, in canonical order (size, then lexicographic).
/// Enumerates independent sets by include/exclude recursion, pruning on
/// adjacency, then filters by absorption.
pub fn all_kernels(g: &Digraph) -> Result<Vec<VertexSet>> {
    all_kernels_bounded(g, DEFAULT_KERNEL_BOUND)
}

pub fn all_kernels_bounded(g: &Digraph, bound: usize) -> Result<Vec<VertexSet>> {
    let n = g.vertex_count();
    if n > bound {
        return Err(Error::InstanceTooLarge { n, bound });
    }
    let mut kernels = Vec::new();
    let mut independent = Vec::new();
    enumerate_independent(g, 0, VertexSet::EMPTY, VertexSet::EMPTY, &mut independent);
    for s in independent {
        if is_kernel(g, s).is_ok() {
            kernels.push(s);
        }
    }
    kernels.sort_by(|a, b| a.canonical_cmp(*b));
    Ok(kernels)
}

fn enumerate_independent(
    g: &Digraph,
    v: usize,
    current: VertexSet,
    blocked: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if v == g.vertex_count() {
        out.push(current);
        return;
    }
    let vid = VertexId(v);
    // exclude v
    enumerate_independent(g, v + 1, current, blocked, out);
    // include v if no neighbour (either direction) is already in
    if !blocked.contains(vid) {
        let mut cur = current;
        cur.insert(vid);
        let newly = g.out_set(vid).union(g.in_set(vid));
        enumerate_independent(g, v + 1, cur, blocked.union(newly), out);
    }
}

/// The unique kernel of an acyclic digraph: scan vertices in reverse
/// topological order, adding each vertex with no out-neighbour already
/// selected.
pub fn acyclic_kernel(g: &Digraph) -> Result<VertexSet> {
    let order = g.topological_order().ok_or(Error::NotAcyclic)?;
    let mut s = VertexSet::EMPTY;
    for &v in order.iter().rev() {
        if g.out_set(v).intersection(s).is_empty() {
            s.insert(v);
        }
    }
    Ok(s)
}

/// Sufficient condition for kernel-perfectness: every cycle contains a
/// symmetrical arc, equivalently the subdigraph of asymmetrical arcs is
/// acyclic (a cycle avoiding symmetrical arcs is exactly a cycle of the
/// asymmetric part).
pub fn kp_sufficient(g: &Digraph) -> bool {
    g.asymmetric_part().is_acyclic()
}

/// A kernel of a digraph satisfying [`kp_sufficient`], deterministically the
/// canonically smallest one. Existence is guaranteed; failure to find one
/// signals an implementation bug.
pub fn kernel_of_kp(g: &Digraph) -> Result<VertexSet> {
    kernel_of_kp_bounded(g, DEFAULT_KERNEL_BOUND)
}

pub fn kernel_of_kp_bounded(g: &Digraph, bound: usize) -> Result<VertexSet> {
    let kernels = all_kernels_bounded(g, bound)?;
    kernels.into_iter().next().ok_or_else(|| Error::TheoremViolation {
        detail: "digraph with every cycle carrying a symmetrical arc has no kernel".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Digraph {
        Digraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().map(|&v| VertexId(v)).collect()
    }

    #[test]
    fn kernel_checks_on_small_digraphs() {
        let single = Digraph::new(1).unwrap();
        assert!(is_kernel(&single, set(&[0])).is_ok());

        let p = path3();
        assert!(is_kernel(&p, set(&[0, 2])).is_ok());
        assert_eq!(
            is_kernel(&p, set(&[2])),
            Err(KernelViolation::Unabsorbed(VertexId(0)))
        );

        let two_cycle = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(
            is_kernel(&two_cycle, set(&[0, 1])),
            Err(KernelViolation::AdjacentPair(VertexId(0), VertexId(1)))
        );
    }

    #[test]
    fn all_kernels_of_path_is_unique() {
        assert_eq!(all_kernels(&path3()).unwrap(), vec![set(&[0, 2])]);
    }

    #[test]
    fn asymmetric_triangle_has_no_kernel() {
        let t = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(all_kernels(&t).unwrap().is_empty());
        assert!(!kp_sufficient(&t));
    }

    #[test]
    fn arcless_digraph_has_the_full_kernel() {
        let g = Digraph::new(3).unwrap();
        assert_eq!(all_kernels(&g).unwrap(), vec![set(&[0, 1, 2])]);
    }

    #[test]
    fn bound_is_enforced() {
        let g = Digraph::new(25).unwrap();
        assert_eq!(
            all_kernels(&g),
            Err(Error::InstanceTooLarge { n: 25, bound: 20 })
        );
    }

    #[test]
    fn acyclic_kernel_examples() {
        let single = Digraph::new(1).unwrap();
        assert_eq!(acyclic_kernel(&single).unwrap(), set(&[0]));
        assert_eq!(acyclic_kernel(&path3()).unwrap(), set(&[0, 2]));
        let isolated = Digraph::new(2).unwrap();
        assert_eq!(acyclic_kernel(&isolated).unwrap(), set(&[0, 1]));
        let two_cycle = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(acyclic_kernel(&two_cycle), Err(Error::NotAcyclic));
    }

    #[test]
    fn kp_sufficient_examples() {
        assert!(kp_sufficient(&path3()));
        let two_cycle = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(kp_sufficient(&two_cycle));
    }

    #[test]
    fn kernel_of_kp_is_canonically_smallest() {
        assert_eq!(kernel_of_kp(&path3()).unwrap(), acyclic_kernel(&path3()).unwrap());
        let two_cycle = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(kernel_of_kp(&two_cycle).unwrap(), set(&[0]));
        let complete3 = Digraph::from_arcs(
            3,
            &[(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)],
        )
        .unwrap();
        assert_eq!(kernel_of_kp(&complete3).unwrap(), set(&[0]));
    }

    #[test]
    fn every_reported_kernel_passes_is_kernel() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let n = rng.gen_range(1..=8);
            let mut g = Digraph::new(n).unwrap();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(0.35) {
                        g.add_arc(VertexId(u), VertexId(v));
                    }
                }
            }
            for k in all_kernels(&g).unwrap() {
                assert!(is_kernel(&g, k).is_ok());
            }
        }
    }
}
