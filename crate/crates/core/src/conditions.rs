//! Recognition of the digraph classes the constructors apply to, plus the
//! per-theorem colouring hypotheses, each producing a concrete witness when
//! it fails.

use std::fmt;

use crate::digraph::{
    cycle_colours, cycles_up_to, enumerate_cycles, ArcColouredDigraph, ColourId, VertexId,
    VertexSet,
};
use crate::pattern::{copy_arcs, induced_copies, PatternGraph, PatternName};

/// Semicomplete: at least one arc between every unordered vertex pair.
pub fn is_semicomplete(d: &ArcColouredDigraph) -> bool {
    let n = d.vertex_count();
    (0..n).all(|u| {
        let adj = d.adjacent_set(VertexId(u)).mask();
        let others = VertexSet::full(n).mask() & !(1u64 << u);
        adj & others == others
    })
}

/// Tournament: semicomplete and free of 2-cycles.
pub fn is_tournament(d: &ArcColouredDigraph) -> bool {
    is_semicomplete(d)
        && d.vertices()
            .all(|u| d.out_set(u).intersection(d.in_set(u)).is_empty())
}

/// Quasi-transitive: whenever u -> v -> w with u != w, u and w are adjacent.
pub fn is_quasi_transitive(d: &ArcColouredDigraph) -> bool {
    for v in d.vertices() {
        for u in d.in_set(v).iter() {
            // every out-neighbour of v other than u must be adjacent to u
            let must_cover = d.out_set(v).mask() & !(1u64 << u.0);
            let covered = d.adjacent_set(u).mask();
            if must_cover & !covered != 0 {
                return false;
            }
        }
    }
    true
}

/// Bipartite tournament: a partition (X,Y) with no arc inside a part and
/// exactly one arc per cross pair (2-cycles excluded; orientations of a
/// complete bipartite graph). Both parts must be nonempty. When the
/// partition exists it is unique and is returned with vertex 0 in X.
pub fn is_bipartite_tournament(d: &ArcColouredDigraph) -> Option<(VertexSet, VertexSet)> {
    let n = d.vertex_count();
    if n < 2 {
        return None;
    }
    // Candidate: X = vertex 0 plus everything non-adjacent to it.
    let v0 = VertexId(0);
    let x = VertexSet::from_mask(!d.adjacent_set(v0).mask() & VertexSet::full(n).mask());
    let y = VertexSet::full(n).difference(x);
    if y.is_empty() {
        return None;
    }
    for u in d.vertices() {
        let part = if x.contains(u) { x } else { y };
        let other = VertexSet::full(n).difference(part);
        // no arc inside the part
        if !d.out_set(u).intersection(part).is_empty() {
            return None;
        }
        // exactly one arc per cross pair: adjacent to all of the other part,
        // no symmetric pairs
        if d.adjacent_set(u).intersection(other) != other {
            return None;
        }
        if !d.out_set(u).intersection(d.in_set(u)).is_empty() {
            return None;
        }
    }
    Some((x, y))
}

/// Unicyclic: exactly one directed cycle, counted up to rotation. Returns
/// the cycle in canonical rotation when unique.
pub fn is_unicyclic(d: &ArcColouredDigraph) -> Option<Vec<VertexId>> {
    let mut found: Option<Vec<VertexId>> = None;
    let mut count = 0usize;
    enumerate_cycles(d, d.vertex_count(), &mut |cyc| {
        count += 1;
        if count == 1 {
            found = Some(cyc.to_vec());
            true
        } else {
            false // a second cycle settles the question
        }
    });
    if count == 1 {
        found
    } else {
        None
    }
}

/// Hypothesis identifiers, named by what they require of the colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    CyclesRainbow(usize),
    Cycles4MinColours(usize),
    PatternRainbow(PatternName),
    Tb4ProperlyColoured,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::CyclesRainbow(k) => write!(f, "cycles{}_rainbow", k),
            Condition::Cycles4MinColours(c) => write!(f, "cycles4_min{}_colours", c),
            Condition::PatternRainbow(p) => {
                write!(f, "{}_copies_rainbow", p.to_string().to_lowercase())
            }
            Condition::Tb4ProperlyColoured => write!(f, "tb4_copies_properly_coloured"),
        }
    }
}

/// Evidence that a condition fails, checkable against the digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionWitness {
    Cycle { vertices: Vec<VertexId>, colours: Vec<ColourId> },
    PatternCopy { pattern: PatternName, image: Vec<VertexId> },
}

/// Outcome of one condition check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionResult {
    pub condition: Condition,
    pub holds: bool,
    pub witness: Option<ConditionWitness>,
}

fn distinct_colours(colours: &[ColourId]) -> usize {
    let mut c: Vec<u32> = colours.iter().map(|c| c.0).collect();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Are all cycles of length exactly `k` rainbow? The first violating cycle
/// in canonical order is the witness.
pub fn check_small_cycles_rainbow(d: &ArcColouredDigraph, k: usize) -> ConditionResult {
    check_cycles(d, k, k, Condition::CyclesRainbow(k))
}

/// Does every 4-cycle use at least `c` distinct colours?
pub fn check_4cycles_min_colours(d: &ArcColouredDigraph, c: usize) -> ConditionResult {
    check_cycles(d, 4, c, Condition::Cycles4MinColours(c))
}

fn check_cycles(
    d: &ArcColouredDigraph,
    k: usize,
    min_colours: usize,
    condition: Condition,
) -> ConditionResult {
    for cyc in cycles_up_to(d, k) {
        if cyc.len() != k {
            continue;
        }
        let colours = cycle_colours(d, &cyc);
        if distinct_colours(&colours) < min_colours {
            return ConditionResult {
                condition,
                holds: false,
                witness: Some(ConditionWitness::Cycle { vertices: cyc, colours }),
            };
        }
    }
    ConditionResult { condition, holds: true, witness: None }
}

/// Is every induced copy of the pattern rainbow (its arcs pairwise distinct
/// in colour)?
pub fn check_induced_pattern_rainbow(
    d: &ArcColouredDigraph,
    name: PatternName,
) -> ConditionResult {
    let p = PatternGraph::by_name(name);
    for copy in induced_copies(d, &p) {
        let colours: Vec<ColourId> = copy_arcs(&p, &copy)
            .iter()
            .map(|&(u, v)| d.arc_colour(u, v).unwrap())
            .collect();
        if distinct_colours(&colours) < colours.len() {
            return ConditionResult {
                condition: Condition::PatternRainbow(name),
                holds: false,
                witness: Some(ConditionWitness::PatternCopy { pattern: name, image: copy }),
            };
        }
    }
    ConditionResult { condition: Condition::PatternRainbow(name), holds: true, witness: None }
}

/// Is every induced TB4 copy properly coloured? Consecutive arcs are read
/// within the copy: (u1,u2)(u2,u3) and (u2,u3)(u3,u4); the arc (u1,u4) has
/// no successor in the copy.
pub fn check_induced_tb4_properly(d: &ArcColouredDigraph) -> ConditionResult {
    let p = PatternGraph::tb4();
    for copy in induced_copies(d, &p) {
        let c01 = d.arc_colour(copy[0], copy[1]).unwrap();
        let c12 = d.arc_colour(copy[1], copy[2]).unwrap();
        let c23 = d.arc_colour(copy[2], copy[3]).unwrap();
        if c01 == c12 || c12 == c23 {
            return ConditionResult {
                condition: Condition::Tb4ProperlyColoured,
                holds: false,
                witness: Some(ConditionWitness::PatternCopy {
                    pattern: PatternName::Tb4,
                    image: copy,
                }),
            };
        }
    }
    ConditionResult { condition: Condition::Tb4ProperlyColoured, holds: true, witness: None }
}

/// Class flags and condition outcomes for one instance. All conditions are
/// checked regardless of which classes hold, so a report always carries the
/// same entries in the same order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub is_unicyclic: bool,
    pub unique_cycle: Option<Vec<VertexId>>,
    pub is_semicomplete: bool,
    pub is_tournament: bool,
    pub is_quasi_transitive: bool,
    pub is_bipartite_tournament: bool,
    pub bipartition: Option<(VertexSet, VertexSet)>,
    pub conditions: Vec<ConditionResult>,
}

pub fn classify(d: &ArcColouredDigraph) -> ClassReport {
    let unique_cycle = is_unicyclic(d);
    let bipartition = is_bipartite_tournament(d);
    let conditions = vec![
        check_small_cycles_rainbow(d, 3),
        check_small_cycles_rainbow(d, 4),
        check_small_cycles_rainbow(d, 6),
        check_4cycles_min_colours(d, 3),
        check_induced_pattern_rainbow(d, PatternName::Qt4),
        check_induced_pattern_rainbow(d, PatternName::Cb5),
        check_induced_tb4_properly(d),
    ];
    ClassReport {
        is_unicyclic: unique_cycle.is_some(),
        unique_cycle,
        is_semicomplete: is_semicomplete(d),
        is_tournament: is_tournament(d),
        is_quasi_transitive: is_quasi_transitive(d),
        is_bipartite_tournament: bipartition.is_some(),
        bipartition,
        conditions,
    }
}

impl ClassReport {
    pub fn condition(&self, c: Condition) -> &ConditionResult {
        self.conditions
            .iter()
            .find(|r| r.condition == c)
            .expect("classify checks every condition")
    }
}
