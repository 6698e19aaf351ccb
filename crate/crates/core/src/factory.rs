//! Named fixtures and seeded, hypothesis-conditioned random generators.
//!
//! Generation is self-certifying: every instance is checked against its
//! class detector and colour hypotheses before being returned, so a bad
//! repair cannot ship silently. Colour repair always assigns a fresh,
//! never-before-used colour; a repaired arc can never again collide, which
//! bounds the number of repairs by the arc count.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conditions::{
    check_4cycles_min_colours, check_induced_pattern_rainbow, check_induced_tb4_properly,
    check_small_cycles_rainbow, is_bipartite_tournament, is_quasi_transitive, is_semicomplete,
    is_unicyclic,
};
use crate::digraph::{cycle_colours, cycles_up_to, Arc, ArcColouredDigraph, VertexId};
use crate::error::{Error, Result};
use crate::pattern::{copy_arcs, induced_copies, PatternGraph, PatternName};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixtureName {
    Qt4,
    Cb5,
    Tb4,
    Fig4,
}

impl std::str::FromStr for FixtureName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "QT4" => Ok(FixtureName::Qt4),
            "CB5" => Ok(FixtureName::Cb5),
            "TB4" => Ok(FixtureName::Tb4),
            "FIG4" => Ok(FixtureName::Fig4),
            _ => Err(Error::UnknownFixture { name: s.to_string() }),
        }
    }
}

/// A fixture digraph together with its conventional vertex names.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub digraph: ArcColouredDigraph,
    pub names: Vec<&'static str>,
}

/// The figure digraphs. QT4, CB5 and TB4 come injectively coloured; FIG4 is
/// the 2-coloured bipartite tournament with |X| = 2 whose 4-cycles all use
/// exactly two colours and which has no RP-kernel.
pub fn fixture(name: FixtureName) -> Result<Fixture> {
    let (n, names, arcs): (usize, Vec<&'static str>, Vec<Arc>) = match name {
        FixtureName::Qt4 => (
            4,
            vec!["x", "u", "v", "y"],
            vec![
                Arc::new(0, 1, 1),
                Arc::new(1, 2, 2),
                Arc::new(2, 3, 3),
                Arc::new(3, 1, 4),
                Arc::new(2, 0, 5),
            ],
        ),
        FixtureName::Cb5 => (
            5,
            vec!["u1", "u2", "u3", "u4", "u5"],
            vec![
                Arc::new(0, 1, 1),
                Arc::new(1, 2, 2),
                Arc::new(2, 3, 3),
                Arc::new(3, 4, 4),
                Arc::new(3, 0, 5),
                Arc::new(4, 1, 6),
            ],
        ),
        FixtureName::Tb4 => (
            4,
            vec!["u1", "u2", "u3", "u4"],
            vec![
                Arc::new(0, 1, 1),
                Arc::new(1, 2, 2),
                Arc::new(2, 3, 3),
                Arc::new(0, 3, 4),
            ],
        ),
        FixtureName::Fig4 => (
            5,
            vec!["x1", "x2", "y1", "y2", "y3"],
            vec![
                Arc::new(0, 2, 1),
                Arc::new(0, 3, 1),
                Arc::new(1, 4, 1),
                Arc::new(4, 0, 2),
                Arc::new(2, 1, 2),
                Arc::new(3, 1, 2),
            ],
        ),
    };
    Ok(Fixture { digraph: ArcColouredDigraph::new(n, arcs)?, names })
}

/// How arcs are coloured during generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColourStrategy {
    /// Every arc gets its own colour; all rainbow hypotheses hold trivially.
    Injective,
    /// Colours drawn uniformly from 1..=m, then repaired with fresh colours
    /// until the class hypotheses hold. The final palette may exceed m.
    RandomRepair { colours: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassProfile {
    Unicyclic { n: usize },
    Semicomplete { n: usize },
    QuasiTransitive { n: usize },
    Bipartite { x: usize, y: usize },
}

/// A deterministic recipe: the same profile always yields the same instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenProfile {
    pub class: ClassProfile,
    pub colours: ColourStrategy,
    pub seed: u64,
}

pub fn generate(profile: &GenProfile) -> Result<ArcColouredDigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(profile.seed);
    let d = match profile.class {
        ClassProfile::Unicyclic { n } => generate_unicyclic(n, profile.colours, &mut rng)?,
        ClassProfile::Semicomplete { n } => generate_semicomplete(n, profile.colours, &mut rng)?,
        ClassProfile::QuasiTransitive { n } => {
            generate_quasi_transitive(n, profile.colours, &mut rng)?
        }
        ClassProfile::Bipartite { x, y } => generate_bipartite(x, y, profile.colours, &mut rng)?,
    };
    certify(&d, profile.class);
    Ok(d)
}

/// Probability of adding the reverse arc of an oriented pair in semicomplete
/// generation.
const SYMMETRIC_PAIR_PROB: f64 = 0.25;

fn check_size(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidProfile {
            detail: format!("class needs at least {} vertices, got {}", min, n),
        });
    }
    if n > 64 {
        return Err(Error::InvalidProfile { detail: format!("at most 64 vertices, got {}", n) });
    }
    Ok(())
}

fn random_colour(strategy: ColourStrategy, next_fresh: &mut u32, rng: &mut ChaCha8Rng) -> u32 {
    match strategy {
        ColourStrategy::Injective => {
            let c = *next_fresh;
            *next_fresh += 1;
            c
        }
        ColourStrategy::RandomRepair { colours } => rng.gen_range(1..=colours.max(1)),
    }
}

fn generate_unicyclic(
    n: usize,
    strategy: ColourStrategy,
    rng: &mut ChaCha8Rng,
) -> Result<ArcColouredDigraph> {
    check_size(n, 2)?;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let len = rng.gen_range(2..=n);
    let mut arcs = Vec::new();
    // the unique cycle, rainbow by construction
    for i in 0..len {
        arcs.push(Arc::new(perm[i], perm[(i + 1) % len], (i + 1) as u32));
    }
    let mut next_fresh = len as u32 + 1;
    // attach the remaining vertices with arcs oriented uniformly relative to
    // the newcomer; such a vertex lies on no cycle
    for i in len..n {
        let w = perm[i];
        let outgoing = rng.gen_bool(0.5);
        let mut targets: Vec<usize> =
            perm[..i].iter().copied().filter(|_| rng.gen_bool(0.4)).collect();
        if targets.is_empty() {
            targets.push(perm[rng.gen_range(0..i)]);
        }
        for t in targets {
            let c = random_colour(strategy, &mut next_fresh, rng);
            arcs.push(if outgoing { Arc::new(w, t, c) } else { Arc::new(t, w, c) });
        }
    }
    ArcColouredDigraph::from_arcs_relabelled(n, arcs)
}

fn generate_semicomplete(
    n: usize,
    strategy: ColourStrategy,
    rng: &mut ChaCha8Rng,
) -> Result<ArcColouredDigraph> {
    check_size(n, 1)?;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                pairs.push((u, v));
            } else {
                pairs.push((v, u));
            }
            if rng.gen_bool(SYMMETRIC_PAIR_PROB) {
                let &(a, b) = pairs.last().unwrap();
                pairs.push((b, a));
            }
        }
    }
    let mut next_fresh = 1;
    let mut arcs: Vec<Arc> = pairs
        .iter()
        .map(|&(u, v)| Arc::new(u, v, random_colour(strategy, &mut next_fresh, rng)))
        .collect();
    repair_rainbow_families(n, &mut arcs, &[RepairFamily::CyclesRainbow(3)]);
    ArcColouredDigraph::from_arcs_relabelled(n, arcs)
}

fn generate_quasi_transitive(
    n: usize,
    strategy: ColourStrategy,
    rng: &mut ChaCha8Rng,
) -> Result<ArcColouredDigraph> {
    check_size(n, 1)?;
    let mut adj = vec![false; n * n];
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(0.3) {
                adj[u * n + v] = true;
            }
        }
    }
    // close under the quasi-transitivity rule: u -> v -> w forces u,w adjacent
    loop {
        let mut fixed = false;
        'scan: for u in 0..n {
            for v in 0..n {
                if u == v || !adj[u * n + v] {
                    continue;
                }
                for w in 0..n {
                    if w == u || w == v || !adj[v * n + w] {
                        continue;
                    }
                    if !adj[u * n + w] && !adj[w * n + u] {
                        if rng.gen_bool(0.5) {
                            adj[u * n + w] = true;
                        } else {
                            adj[w * n + u] = true;
                        }
                        fixed = true;
                        break 'scan;
                    }
                }
            }
        }
        if !fixed {
            break;
        }
    }
    let mut next_fresh = 1;
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if adj[u * n + v] {
                arcs.push(Arc::new(u, v, random_colour(strategy, &mut next_fresh, rng)));
            }
        }
    }
    repair_rainbow_families(
        n,
        &mut arcs,
        &[
            RepairFamily::CyclesRainbow(3),
            RepairFamily::PatternRainbow(PatternName::Qt4),
        ],
    );
    ArcColouredDigraph::from_arcs_relabelled(n, arcs)
}

fn generate_bipartite(
    x: usize,
    y: usize,
    strategy: ColourStrategy,
    rng: &mut ChaCha8Rng,
) -> Result<ArcColouredDigraph> {
    if x < 1 || y < 1 {
        return Err(Error::InvalidProfile { detail: "both parts must be nonempty".into() });
    }
    check_size(x + y, 2)?;
    let n = x + y;
    let mut next_fresh = 1;
    let mut arcs = Vec::new();
    for u in 0..x {
        for v in x..n {
            let c = random_colour(strategy, &mut next_fresh, rng);
            arcs.push(if rng.gen_bool(0.5) { Arc::new(u, v, c) } else { Arc::new(v, u, c) });
        }
    }
    let families: &[RepairFamily] = match x.min(y) {
        0 | 1 => &[],
        2 => &[RepairFamily::Cycles4MinColours],
        _ => &[
            RepairFamily::CyclesRainbow(4),
            RepairFamily::CyclesRainbow(6),
            RepairFamily::PatternRainbow(PatternName::Cb5),
            RepairFamily::Tb4Proper,
        ],
    };
    repair_rainbow_families(n, &mut arcs, families);
    ArcColouredDigraph::from_arcs_relabelled(n, arcs)
}

#[derive(Clone, Copy)]
enum RepairFamily {
    /// All cycles of exactly this length must be rainbow.
    CyclesRainbow(usize),
    /// Every 4-cycle must use at least three colours.
    Cycles4MinColours,
    /// Induced copies of the pattern must be rainbow.
    PatternRainbow(PatternName),
    /// Induced TB4 copies must be properly coloured.
    Tb4Proper,
}

/// Recolours arcs with fresh colours until every family constraint holds.
/// The arc structure never changes, so the constrained arc tuples are
/// enumerated once up front.
fn repair_rainbow_families(n: usize, arcs: &mut [Arc], families: &[RepairFamily]) {
    if families.is_empty() || arcs.is_empty() {
        return;
    }
    // structure-only copy for enumerating cycles and copies
    let skeleton = ArcColouredDigraph::from_arcs_relabelled(
        n,
        arcs.iter().map(|a| Arc::new(a.from.0, a.to.0, 1)).collect(),
    )
    .expect("arcs were already validated");
    let index: std::collections::BTreeMap<(usize, usize), usize> = arcs
        .iter()
        .enumerate()
        .map(|(i, a)| ((a.from.0, a.to.0), i))
        .collect();
    let arc_idx = |u: VertexId, v: VertexId| index[&(u.0, v.0)];

    // Each constraint is a list of arc indices plus the minimum number of
    // distinct colours it demands; TB4 propriety contributes its two
    // consecutive pairs.
    let mut constraints: Vec<(Vec<usize>, usize)> = Vec::new();
    for family in families {
        match family {
            RepairFamily::CyclesRainbow(k) => {
                for cyc in cycles_up_to(&skeleton, *k) {
                    if cyc.len() != *k {
                        continue;
                    }
                    let idxs: Vec<usize> = (0..cyc.len())
                        .map(|i| arc_idx(cyc[i], cyc[(i + 1) % cyc.len()]))
                        .collect();
                    let want = idxs.len();
                    constraints.push((idxs, want));
                }
            }
            RepairFamily::Cycles4MinColours => {
                for cyc in cycles_up_to(&skeleton, 4) {
                    if cyc.len() != 4 {
                        continue;
                    }
                    let idxs: Vec<usize> =
                        (0..4).map(|i| arc_idx(cyc[i], cyc[(i + 1) % 4])).collect();
                    constraints.push((idxs, 3));
                }
            }
            RepairFamily::PatternRainbow(name) => {
                let p = PatternGraph::by_name(*name);
                for copy in induced_copies(&skeleton, &p) {
                    let idxs: Vec<usize> = copy_arcs(&p, &copy)
                        .iter()
                        .map(|&(u, v)| arc_idx(u, v))
                        .collect();
                    let want = idxs.len();
                    constraints.push((idxs, want));
                }
            }
            RepairFamily::Tb4Proper => {
                let p = PatternGraph::tb4();
                for copy in induced_copies(&skeleton, &p) {
                    constraints.push((
                        vec![arc_idx(copy[0], copy[1]), arc_idx(copy[1], copy[2])],
                        2,
                    ));
                    constraints.push((
                        vec![arc_idx(copy[1], copy[2]), arc_idx(copy[2], copy[3])],
                        2,
                    ));
                }
            }
        }
    }

    let mut fresh = arcs.iter().map(|a| a.colour.0).max().unwrap_or(0) + 1;
    loop {
        let mut repaired = false;
        for (idxs, want) in &constraints {
            let colours: Vec<u32> = idxs.iter().map(|&i| arcs[i].colour.0).collect();
            let mut sorted = colours.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() >= *want {
                continue;
            }
            // recolour the first arc whose colour repeats inside this
            // constraint
            let dup = idxs
                .iter()
                .position(|&i| colours.iter().filter(|&&c| c == arcs[i].colour.0).count() > 1)
                .expect("a constraint below its colour target has a repeat");
            arcs[idxs[dup]].colour = crate::digraph::ColourId(fresh);
            fresh += 1;
            repaired = true;
        }
        if !repaired {
            break;
        }
    }
}

/// Generated instances must satisfy the hypotheses their class promises.
fn certify(d: &ArcColouredDigraph, class: ClassProfile) {
    match class {
        ClassProfile::Unicyclic { .. } => {
            let cycle = is_unicyclic(d).expect("generator must produce a unicyclic digraph");
            let colours = cycle_colours(d, &cycle);
            let mut distinct: Vec<u32> = colours.iter().map(|c| c.0).collect();
            distinct.sort_unstable();
            distinct.dedup();
            assert_eq!(distinct.len(), colours.len(), "generated cycle must be rainbow");
        }
        ClassProfile::Semicomplete { .. } => {
            assert!(is_semicomplete(d), "generator must produce a semicomplete digraph");
            assert!(check_small_cycles_rainbow(d, 3).holds, "3-cycles must be rainbow");
        }
        ClassProfile::QuasiTransitive { .. } => {
            assert!(is_quasi_transitive(d), "generator must produce a quasi-transitive digraph");
            assert!(check_small_cycles_rainbow(d, 3).holds, "3-cycles must be rainbow");
            assert!(
                check_induced_pattern_rainbow(d, PatternName::Qt4).holds,
                "induced QT4 copies must be rainbow"
            );
        }
        ClassProfile::Bipartite { x, y } => {
            assert!(
                is_bipartite_tournament(d).is_some(),
                "generator must produce a bipartite tournament"
            );
            match x.min(y) {
                0 | 1 => {}
                2 => assert!(
                    check_4cycles_min_colours(d, 3).holds,
                    "4-cycles must use at least 3 colours"
                ),
                _ => {
                    assert!(check_small_cycles_rainbow(d, 4).holds, "4-cycles must be rainbow");
                    assert!(check_small_cycles_rainbow(d, 6).holds, "6-cycles must be rainbow");
                    assert!(
                        check_induced_pattern_rainbow(d, PatternName::Cb5).holds,
                        "induced CB5 copies must be rainbow"
                    );
                    assert!(
                        check_induced_tb4_properly(d).holds,
                        "induced TB4 copies must be properly coloured"
                    );
                }
            }
        }
    }
}
