//! RP-kernel validation, the exhaustive oracle, and one theorem-guided
//! constructor per digraph class, with a dispatcher. Every constructor
//! re-validates its output before returning; a set a theorem guarantees but
//! validation rejects surfaces as a loud `TheoremViolation`, never as a
//! silent wrong answer.

mod bipartite;

pub use bipartite::{rp_kernel_bipartite, rp_kernel_bipartite_bounded};

use std::fmt;

use crate::conditions::{
    check_induced_pattern_rainbow, check_small_cycles_rainbow, classify, is_quasi_transitive,
    is_semicomplete, is_unicyclic,
};
use crate::digraph::{cycle_colours, strong_components, ArcColouredDigraph, VertexId, VertexSet};
use crate::error::{Error, Result};
use crate::kernel::{kernel_of_kp_bounded, kp_sufficient};
use crate::pattern::PatternName;
use crate::rainbow::{closure_of, rainbow_reachability, RainbowReachability};

/// Default vertex bound for the brute-force RP-kernel oracle.
pub const DEFAULT_BRUTE_BOUND: usize = 18;

/// Which constructor produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Unicyclic,
    Semicomplete,
    QuasiTransitive,
    /// 1-arc-coloured bipartite tournament: X or Y is a kernel.
    Bipartite1Coloured,
    /// min{|X|,|Y|} = 1: the closure is acyclic.
    BipartiteMin1,
    /// min{|X|,|Y|} = 2 with every 4-cycle on >= 3 colours.
    Bipartite2,
    /// min{|X|,|Y|} >= 3 with the four rainbow/proper conditions.
    BipartiteMin3,
    BruteForce,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Unicyclic => "unicyclic",
            Method::Semicomplete => "semicomplete",
            Method::QuasiTransitive => "quasi_transitive",
            Method::Bipartite1Coloured => "bipartite_1coloured",
            Method::BipartiteMin1 => "bipartite_min1",
            Method::Bipartite2 => "bipartite_2",
            Method::BipartiteMin3 => "bipartite_min3",
            Method::BruteForce => "brute_force",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Overall outcome of a solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Found,
    /// Exhaustively proven: no RP-kernel exists.
    ProvenAbsent,
    /// No constructor applies and the instance exceeds the brute-force bound.
    Unknown,
}

/// Result of a constructor or of the dispatcher. When a kernel is present it
/// has already passed [`is_rp_kernel`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub kernel: Option<VertexSet>,
    pub outcome: Outcome,
    pub method: Option<Method>,
    pub validated: bool,
    /// Stable identifier of the construction branch that produced the set,
    /// used by branch-coverage accounting.
    pub leaf: Option<String>,
    pub diagnostics: String,
}

impl SolveResult {
    fn found(
        kernel: VertexSet,
        method: Method,
        leaf: impl Into<String>,
        diagnostics: impl Into<String>,
    ) -> Self {
        SolveResult {
            kernel: Some(kernel),
            outcome: Outcome::Found,
            method: Some(method),
            validated: true,
            leaf: Some(leaf.into()),
            diagnostics: diagnostics.into(),
        }
    }
}

/// Why a candidate set is not an RP-kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RpViolation {
    /// A rainbow path joins two set members (in the recorded direction).
    RainbowPathInside(VertexId, VertexId),
    /// An outside vertex with no rainbow path into the set.
    Unabsorbed(VertexId),
}

impl fmt::Display for RpViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RpViolation::RainbowPathInside(u, v) => {
                write!(f, "rainbow path joins set members {} and {}", u, v)
            }
            RpViolation::Unabsorbed(v) => {
                write!(f, "{} has no rainbow path into the set", v)
            }
        }
    }
}

/// RP-kernel test: no rainbow path between any two distinct members, and
/// every outside vertex rainbow-reaches the set.
pub fn is_rp_kernel(
    d: &ArcColouredDigraph,
    s: VertexSet,
) -> Result<std::result::Result<(), RpViolation>> {
    if s.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let r = rainbow_reachability(d);
    Ok(is_rp_kernel_with(&r, d.vertex_count(), s))
}

/// Same test against a precomputed reachability matrix.
pub fn is_rp_kernel_with(
    r: &RainbowReachability,
    n: usize,
    s: VertexSet,
) -> std::result::Result<(), RpViolation> {
    for u in s.iter() {
        let hit = r.row(u).intersection(s);
        if let Some(v) = hit.iter().find(|&v| v != u) {
            return Err(RpViolation::RainbowPathInside(u, v));
        }
    }
    for w in (0..n).map(VertexId) {
        if !s.contains(w) && !r.reaches_set(w, s) {
            return Err(RpViolation::Unabsorbed(w));
        }
    }
    Ok(())
}

/// Exhaustive oracle: every RP-kernel, in canonical order. Enumerates
/// candidate sets directly against the rainbow reachability matrix, pruning
/// pair-reachable sets, which keeps it an independent route from the
/// closure-then-kernel composition it is checked against.
pub fn brute_force_rp_kernel(d: &ArcColouredDigraph) -> Result<Vec<VertexSet>> {
    brute_force_rp_kernel_bounded(d, DEFAULT_BRUTE_BOUND)
}

pub fn brute_force_rp_kernel_bounded(
    d: &ArcColouredDigraph,
    bound: usize,
) -> Result<Vec<VertexSet>> {
    let n = d.vertex_count();
    if n > bound {
        return Err(Error::InstanceTooLarge { n, bound });
    }
    let r = rainbow_reachability(d);
    let mut out = Vec::new();
    // include/exclude recursion over vertices; a vertex pair-reachable with a
    // chosen one can never join
    fn rec(
        r: &RainbowReachability,
        n: usize,
        v: usize,
        current: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if v == n {
            if !current.is_empty() && is_rp_kernel_with(r, n, current).is_ok() {
                out.push(current);
            }
            return;
        }
        let vid = VertexId(v);
        rec(r, n, v + 1, current, out);
        let clashes = current
            .iter()
            .any(|u| r.reaches(u, vid) || r.reaches(vid, u));
        if !clashes {
            let mut cur = current;
            cur.insert(vid);
            rec(r, n, v + 1, cur, out);
        }
    }
    rec(&r, n, 0, VertexSet::EMPTY, &mut out);
    out.sort_by(|a, b| a.canonical_cmp(*b));
    Ok(out)
}

fn precondition(hypothesis: impl Into<String>) -> Error {
    Error::PreconditionFailed { hypothesis: hypothesis.into() }
}

/// Validates a constructed set, converting any failure into a loud
/// `TheoremViolation`.
fn validated(
    d: &ArcColouredDigraph,
    kernel: VertexSet,
    method: Method,
    leaf: &str,
    diagnostics: String,
) -> Result<SolveResult> {
    match is_rp_kernel(d, kernel)? {
        Ok(()) => Ok(SolveResult::found(kernel, method, leaf, diagnostics)),
        Err(v) => Err(Error::TheoremViolation {
            detail: format!(
                "{} constructor (branch {}) produced {} but {}",
                method, leaf, kernel, v
            ),
        }),
    }
}

/// Constructor for unicyclic digraphs whose unique cycle is rainbow. Follows
/// the strong-component procedure: seed from the last component, then
/// repeatedly add a vertex of the largest-index component that cannot yet
/// rainbow-reach the set (minimum index among qualifying vertices).
pub fn rp_kernel_unicyclic(d: &ArcColouredDigraph) -> Result<SolveResult> {
    let cycle = is_unicyclic(d).ok_or_else(|| precondition("digraph has exactly one cycle"))?;
    let colours = cycle_colours(d, &cycle);
    let mut distinct: Vec<u32> = colours.iter().map(|c| c.0).collect();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != colours.len() {
        return Err(precondition("the unique cycle is rainbow"));
    }

    let r = rainbow_reachability(d);
    let comps = strong_components(d);
    let k = comps.len();
    let mut s = VertexSet::EMPTY;
    // D_k is the last component; arcs run only towards larger indices.
    s.insert(comps[k - 1].min_vertex().unwrap());
    let mut steps = vec![format!("seed {} from component {}", s, k)];
    loop {
        // largest-index component still holding a vertex that cannot reach S
        let next = comps
            .iter()
            .rev()
            .find_map(|comp| comp.iter().find(|&v| !s.contains(v) && !r.reaches_set(v, s)));
        match next {
            Some(v) => {
                s.insert(v);
                steps.push(format!("add {}", v));
            }
            None => break,
        }
    }
    validated(d, s, Method::Unicyclic, "unicyclic", steps.join("; "))
}

/// Constructor for semicomplete digraphs with all 3-cycles rainbow: a vertex
/// of maximum in-degree (ties to the smallest index) is a one-vertex
/// RP-kernel.
pub fn rp_kernel_semicomplete(d: &ArcColouredDigraph) -> Result<SolveResult> {
    if !is_semicomplete(d) {
        return Err(precondition("digraph is semicomplete"));
    }
    let c3 = check_small_cycles_rainbow(d, 3);
    if !c3.holds {
        return Err(precondition("all 3-cycles are rainbow"));
    }
    let v = d
        .vertices()
        .max_by_key(|&v| (d.in_degree(v), std::cmp::Reverse(v.0)))
        .expect("semicomplete digraphs are nonempty");
    validated(
        d,
        VertexSet::singleton(v),
        Method::Semicomplete,
        "semicomplete",
        format!("maximum in-degree vertex {} (in-degree {})", v, d.in_degree(v)),
    )
}

/// Constructor for quasi-transitive digraphs with rainbow 3-cycles and
/// rainbow induced QT4 copies: the rainbow closure is kernel-perfect, and a
/// kernel of the closure is an RP-kernel.
pub fn rp_kernel_quasi_transitive(d: &ArcColouredDigraph) -> Result<SolveResult> {
    rp_kernel_quasi_transitive_bounded(d, crate::kernel::DEFAULT_KERNEL_BOUND)
}

pub fn rp_kernel_quasi_transitive_bounded(
    d: &ArcColouredDigraph,
    bound: usize,
) -> Result<SolveResult> {
    if !is_quasi_transitive(d) {
        return Err(precondition("digraph is quasi-transitive"));
    }
    if !check_small_cycles_rainbow(d, 3).holds {
        return Err(precondition("all 3-cycles are rainbow"));
    }
    if !check_induced_pattern_rainbow(d, PatternName::Qt4).holds {
        return Err(precondition("all induced QT4 copies are rainbow"));
    }
    let r = rainbow_reachability(d);
    let closure = closure_of(d, &r);
    if !kp_sufficient(&closure) {
        return Err(Error::TheoremViolation {
            detail: "rainbow closure of a conditioned quasi-transitive digraph has a cycle \
                     with no symmetrical arc"
                .into(),
        });
    }
    let kernel = kernel_of_kp_bounded(&closure, bound)?;
    validated(
        d,
        kernel,
        Method::QuasiTransitive,
        "quasi_transitive",
        "kernel of the rainbow closure (closure is kernel-perfect)".into(),
    )
}

/// Tries the constructors in class order, falling back to the exhaustive
/// oracle within its bound.
pub fn solve(d: &ArcColouredDigraph) -> SolveResult {
    solve_bounded(d, DEFAULT_BRUTE_BOUND)
}

pub fn solve_bounded(d: &ArcColouredDigraph, bound: usize) -> SolveResult {
    let report = classify(d);
    let mut skipped: Vec<String> = Vec::new();

    // Arcless digraphs satisfy some class hypotheses vacuously; send them
    // straight to the oracle, which reports the full vertex set.
    let any_arcs = d.arc_count() > 0;

    if any_arcs && report.is_unicyclic {
        match rp_kernel_unicyclic(d) {
            Ok(res) => return res,
            Err(Error::PreconditionFailed { hypothesis }) => skipped.push(hypothesis),
            Err(e) => return error_result(e),
        }
    }
    if any_arcs && report.is_semicomplete {
        match rp_kernel_semicomplete(d) {
            Ok(res) => return res,
            Err(Error::PreconditionFailed { hypothesis }) => skipped.push(hypothesis),
            Err(e) => return error_result(e),
        }
    }
    if any_arcs && report.is_quasi_transitive {
        match rp_kernel_quasi_transitive_bounded(d, bound.max(crate::kernel::DEFAULT_KERNEL_BOUND))
        {
            Ok(res) => return res,
            Err(Error::PreconditionFailed { hypothesis }) => skipped.push(hypothesis),
            Err(e) => return error_result(e),
        }
    }
    if any_arcs && report.is_bipartite_tournament {
        match rp_kernel_bipartite(d) {
            Ok(res) => return res,
            Err(Error::PreconditionFailed { hypothesis }) => skipped.push(hypothesis),
            Err(e) => return error_result(e),
        }
    }

    match brute_force_rp_kernel_bounded(d, bound) {
        Ok(kernels) => {
            let diagnostics = if skipped.is_empty() {
                format!("exhaustive enumeration found {} RP-kernel(s)", kernels.len())
            } else {
                format!(
                    "constructors skipped ({}); exhaustive enumeration found {} RP-kernel(s)",
                    skipped.join("; "),
                    kernels.len()
                )
            };
            match kernels.into_iter().next() {
                Some(kernel) => SolveResult {
                    kernel: Some(kernel),
                    outcome: Outcome::Found,
                    method: Some(Method::BruteForce),
                    validated: true,
                    leaf: Some("brute_force".into()),
                    diagnostics,
                },
                None => SolveResult {
                    kernel: None,
                    outcome: Outcome::ProvenAbsent,
                    method: Some(Method::BruteForce),
                    validated: false,
                    leaf: Some("brute_force".into()),
                    diagnostics,
                },
            }
        }
        Err(Error::InstanceTooLarge { n, bound }) => SolveResult {
            kernel: None,
            outcome: Outcome::Unknown,
            method: None,
            validated: false,
            leaf: None,
            diagnostics: format!(
                "no constructor applies and {} vertices exceed the brute-force bound {}",
                n, bound
            ),
        },
        Err(e) => error_result(e),
    }
}

fn error_result(e: Error) -> SolveResult {
    SolveResult {
        kernel: None,
        outcome: Outcome::Unknown,
        method: None,
        validated: false,
        leaf: None,
        diagnostics: format!("internal failure: {}", e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Arc;
    use crate::factory::{fixture, FixtureName};

    fn rainbow_triangle() -> ArcColouredDigraph {
        ArcColouredDigraph::new(
            3,
            vec![Arc::new(0, 1, 1), Arc::new(1, 2, 2), Arc::new(2, 0, 3)],
        )
        .unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().map(|&v| VertexId(v)).collect()
    }

    #[test]
    fn singleton_is_rp_kernel_of_rainbow_triangle() {
        let d = rainbow_triangle();
        for v in 0..3 {
            assert!(is_rp_kernel(&d, set(&[v])).unwrap().is_ok());
        }
    }

    #[test]
    fn fig4_pair_fails_with_unabsorbed_witness() {
        let d = fixture(FixtureName::Fig4).unwrap().digraph;
        // y1=2, y2=3; x2=1 is the unabsorbed vertex
        let res = is_rp_kernel(&d, set(&[2, 3])).unwrap();
        assert_eq!(res, Err(RpViolation::Unabsorbed(VertexId(1))));
    }

    #[test]
    fn arcless_digraph_has_the_full_set_as_rp_kernel() {
        let d = ArcColouredDigraph::new(3, vec![]).unwrap();
        assert!(is_rp_kernel(&d, VertexSet::full(3)).unwrap().is_ok());
        assert_eq!(is_rp_kernel(&d, VertexSet::EMPTY), Err(Error::EmptyVertexSet));
        assert_eq!(brute_force_rp_kernel(&d).unwrap(), vec![VertexSet::full(3)]);
    }

    #[test]
    fn brute_force_on_small_fixtures() {
        let d = fixture(FixtureName::Fig4).unwrap().digraph;
        assert!(brute_force_rp_kernel(&d).unwrap().is_empty());
        let t = rainbow_triangle();
        assert_eq!(
            brute_force_rp_kernel(&t).unwrap(),
            vec![set(&[0]), set(&[1]), set(&[2])]
        );
    }

    #[test]
    fn unicyclic_on_a_lone_rainbow_cycle() {
        let d = rainbow_triangle();
        let res = rp_kernel_unicyclic(&d).unwrap();
        assert_eq!(res.kernel, Some(set(&[0])));
        assert_eq!(res.method, Some(Method::Unicyclic));
        assert!(res.validated);
    }

    #[test]
    fn unicyclic_with_pendant_arc() {
        // rainbow 2-cycle a<->b with pendant arc c->a, all colours distinct
        let d = ArcColouredDigraph::new(
            3,
            vec![Arc::new(0, 1, 1), Arc::new(1, 0, 2), Arc::new(2, 0, 3)],
        )
        .unwrap();
        let res = rp_kernel_unicyclic(&d).unwrap();
        assert_eq!(res.kernel, Some(set(&[0])));
        let oracle = brute_force_rp_kernel(&d).unwrap();
        assert!(oracle.contains(&res.kernel.unwrap()));
    }

    #[test]
    fn unicyclic_rejects_acyclic_and_non_rainbow_cycles() {
        let acyclic =
            ArcColouredDigraph::new(3, vec![Arc::new(0, 1, 1), Arc::new(1, 2, 2)]).unwrap();
        assert!(matches!(
            rp_kernel_unicyclic(&acyclic),
            Err(Error::PreconditionFailed { .. })
        ));
        let mono = ArcColouredDigraph::new(
            3,
            vec![Arc::new(0, 1, 1), Arc::new(1, 2, 1), Arc::new(2, 0, 1)],
        )
        .unwrap();
        assert!(matches!(
            rp_kernel_unicyclic(&mono),
            Err(Error::PreconditionFailed { .. })
        ));
    }

    #[test]
    fn unicyclic_multi_component() {
        // source chain into a rainbow 3-cycle: 3 -> 4 -> 0, cycle 0,1,2
        let d = ArcColouredDigraph::new(
            5,
            vec![
                Arc::new(0, 1, 1),
                Arc::new(1, 2, 2),
                Arc::new(2, 0, 3),
                Arc::new(3, 4, 1),
                Arc::new(4, 0, 1),
            ],
        )
        .unwrap();
        let res = rp_kernel_unicyclic(&d).unwrap();
        let oracle = brute_force_rp_kernel(&d).unwrap();
        assert!(oracle.contains(&res.kernel.unwrap()));
    }

    #[test]
    fn semicomplete_constructor_examples() {
        let res = rp_kernel_semicomplete(&rainbow_triangle()).unwrap();
        assert_eq!(res.kernel, Some(set(&[0]))); // all in-degrees 1, tie-break
        let oracle = brute_force_rp_kernel(&rainbow_triangle()).unwrap();
        assert!(oracle.contains(&res.kernel.unwrap()));

        // transitive tournament a->b, a->c, b->c: c has in-degree 2
        let t = ArcColouredDigraph::new(
            3,
            vec![Arc::new(0, 1, 1), Arc::new(0, 2, 2), Arc::new(1, 2, 3)],
        )
        .unwrap();
        let res = rp_kernel_semicomplete(&t).unwrap();
        assert_eq!(res.kernel, Some(set(&[2])));

        let mono = ArcColouredDigraph::new(
            3,
            vec![Arc::new(0, 1, 1), Arc::new(1, 2, 1), Arc::new(2, 0, 1)],
        )
        .unwrap();
        assert!(matches!(
            rp_kernel_semicomplete(&mono),
            Err(Error::PreconditionFailed { .. })
        ));
    }

    #[test]
    fn quasi_transitive_constructor_examples() {
        let d = fixture(FixtureName::Qt4).unwrap().digraph;
        let res = rp_kernel_quasi_transitive(&d).unwrap();
        let oracle = brute_force_rp_kernel(&d).unwrap();
        assert!(!oracle.is_empty());
        assert!(oracle.contains(&res.kernel.unwrap()));

        // transitive triangle, rainbow: the sink is the kernel
        let t = ArcColouredDigraph::new(
            3,
            vec![Arc::new(0, 1, 1), Arc::new(1, 2, 2), Arc::new(0, 2, 3)],
        )
        .unwrap();
        let res = rp_kernel_quasi_transitive(&t).unwrap();
        assert_eq!(res.kernel, Some(set(&[2])));

        let path =
            ArcColouredDigraph::new(3, vec![Arc::new(0, 1, 1), Arc::new(1, 2, 2)]).unwrap();
        assert!(matches!(
            rp_kernel_quasi_transitive(&path),
            Err(Error::PreconditionFailed { .. })
        ));
    }

    #[test]
    fn solve_dispatch_examples() {
        let res = solve(&rainbow_triangle());
        assert_eq!(res.method, Some(Method::Unicyclic));
        assert_eq!(res.kernel.map(|k| k.len()), Some(1));

        let fig4 = fixture(FixtureName::Fig4).unwrap().digraph;
        let res = solve(&fig4);
        assert_eq!(res.method, Some(Method::BruteForce));
        assert_eq!(res.outcome, Outcome::ProvenAbsent);
        assert!(res.kernel.is_none());

        let arcless = ArcColouredDigraph::new(3, vec![]).unwrap();
        let res = solve(&arcless);
        assert_eq!(res.method, Some(Method::BruteForce));
        assert_eq!(res.kernel, Some(VertexSet::full(3)));
    }

    #[test]
    fn solve_reports_unknown_beyond_the_bound() {
        // 21 isolated vertices plus one monochromatic 4-cycle defeats every
        // class detector
        let mut arcs = vec![
            Arc::new(0, 1, 1),
            Arc::new(1, 2, 1),
            Arc::new(2, 3, 1),
            Arc::new(3, 0, 1),
            Arc::new(0, 2, 1),
        ];
        arcs.push(Arc::new(4, 5, 1));
        let d = ArcColouredDigraph::new(21, arcs).unwrap();
        let res = solve_bounded(&d, 18);
        assert_eq!(res.outcome, Outcome::Unknown);
        assert!(res.kernel.is_none());
    }
}
