//! Text and JSON renderings of reports and results. JSON field order is
//! fixed by the struct definitions, so output is byte-stable for goldens.

use serde::Serialize;

use rpk_core::conditions::{ClassReport, ConditionWitness};
use rpk_core::rainbow::RainbowReachability;
use rpk_core::solver::{Outcome, RpViolation, SolveResult};
use rpk_core::VertexId;

use crate::document::InstanceDocument;

fn names_of(doc: &InstanceDocument, vs: impl IntoIterator<Item = VertexId>) -> Vec<String> {
    vs.into_iter().map(|v| doc.name_of(v).to_string()).collect()
}

#[derive(Serialize)]
struct ClassesJson {
    unicyclic: bool,
    semicomplete: bool,
    tournament: bool,
    quasi_transitive: bool,
    bipartite_tournament: bool,
}

#[derive(Serialize)]
struct BipartitionJson {
    x: Vec<String>,
    y: Vec<String>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum WitnessJson {
    Cycle { vertices: Vec<String>, colours: Vec<u32> },
    PatternCopy { pattern: String, image: Vec<String> },
}

#[derive(Serialize)]
struct ConditionJson {
    name: String,
    holds: bool,
    witness: Option<WitnessJson>,
}

#[derive(Serialize)]
struct ClassReportJson {
    classes: ClassesJson,
    unique_cycle: Option<Vec<String>>,
    bipartition: Option<BipartitionJson>,
    conditions: Vec<ConditionJson>,
}

fn witness_json(doc: &InstanceDocument, w: &ConditionWitness) -> WitnessJson {
    match w {
        ConditionWitness::Cycle { vertices, colours } => WitnessJson::Cycle {
            vertices: names_of(doc, vertices.iter().copied()),
            colours: colours.iter().map(|c| c.value()).collect(),
        },
        ConditionWitness::PatternCopy { pattern, image } => WitnessJson::PatternCopy {
            pattern: pattern.to_string(),
            image: names_of(doc, image.iter().copied()),
        },
    }
}

pub fn classify_json(doc: &InstanceDocument, report: &ClassReport) -> String {
    let json = ClassReportJson {
        classes: ClassesJson {
            unicyclic: report.is_unicyclic,
            semicomplete: report.is_semicomplete,
            tournament: report.is_tournament,
            quasi_transitive: report.is_quasi_transitive,
            bipartite_tournament: report.is_bipartite_tournament,
        },
        unique_cycle: report
            .unique_cycle
            .as_ref()
            .map(|c| names_of(doc, c.iter().copied())),
        bipartition: report.bipartition.map(|(x, y)| BipartitionJson {
            x: names_of(doc, x.iter()),
            y: names_of(doc, y.iter()),
        }),
        conditions: report
            .conditions
            .iter()
            .map(|c| ConditionJson {
                name: c.condition.to_string(),
                holds: c.holds,
                witness: c.witness.as_ref().map(|w| witness_json(doc, w)),
            })
            .collect(),
    };
    to_pretty(&json)
}

pub fn classify_text(doc: &InstanceDocument, report: &ClassReport) -> String {
    let mut out = String::new();
    out.push_str("classes:\n");
    for (name, val) in [
        ("unicyclic", report.is_unicyclic),
        ("semicomplete", report.is_semicomplete),
        ("tournament", report.is_tournament),
        ("quasi_transitive", report.is_quasi_transitive),
        ("bipartite_tournament", report.is_bipartite_tournament),
    ] {
        out.push_str(&format!("  {}: {}\n", name, val));
    }
    if let Some(cycle) = &report.unique_cycle {
        out.push_str(&format!(
            "unique_cycle: ({})\n",
            names_of(doc, cycle.iter().copied()).join(" ")
        ));
    }
    if let Some((x, y)) = report.bipartition {
        out.push_str(&format!(
            "bipartition: X={{{}}} Y={{{}}}\n",
            names_of(doc, x.iter()).join(","),
            names_of(doc, y.iter()).join(",")
        ));
    }
    out.push_str("conditions:\n");
    for c in &report.conditions {
        if c.holds {
            out.push_str(&format!("  {}: PASS\n", c.condition));
        } else {
            let w = match c.witness.as_ref().unwrap() {
                ConditionWitness::Cycle { vertices, colours } => format!(
                    "cycle ({}) colours ({})",
                    names_of(doc, vertices.iter().copied()).join(" "),
                    colours.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
                ),
                ConditionWitness::PatternCopy { pattern, image } => format!(
                    "{} copy ({})",
                    pattern,
                    names_of(doc, image.iter().copied()).join(" ")
                ),
            };
            out.push_str(&format!("  {}: FAIL  witness {}\n", c.condition, w));
        }
    }
    out
}

#[derive(Serialize)]
struct SolveJson {
    outcome: &'static str,
    kernel: Option<Vec<String>>,
    method: Option<&'static str>,
    branch: Option<String>,
    validated: bool,
    diagnostics: String,
}

fn outcome_tag(o: Outcome) -> &'static str {
    match o {
        Outcome::Found => "found",
        Outcome::ProvenAbsent => "no_rp_kernel",
        Outcome::Unknown => "unknown",
    }
}

pub fn solve_json(doc: &InstanceDocument, res: &SolveResult) -> String {
    let json = SolveJson {
        outcome: outcome_tag(res.outcome),
        kernel: res.kernel.map(|k| names_of(doc, k.iter())),
        method: res.method.map(|m| m.tag()),
        branch: res.leaf.clone(),
        validated: res.validated,
        diagnostics: res.diagnostics.clone(),
    };
    to_pretty(&json)
}

pub fn solve_text(doc: &InstanceDocument, res: &SolveResult) -> String {
    let mut out = format!("outcome: {}\n", outcome_tag(res.outcome));
    match res.kernel {
        Some(k) => out.push_str(&format!("kernel: {{{}}}\n", names_of(doc, k.iter()).join(","))),
        None => out.push_str("kernel: none\n"),
    }
    if let Some(m) = res.method {
        out.push_str(&format!("method: {}\n", m.tag()));
    }
    if let Some(leaf) = &res.leaf {
        out.push_str(&format!("branch: {}\n", leaf));
    }
    out.push_str(&format!("validated: {}\n", res.validated));
    out.push_str(&format!("diagnostics: {}\n", res.diagnostics));
    out
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum RpViolationJson {
    RainbowPathInside { from: String, to: String },
    Unabsorbed { vertex: String },
}

#[derive(Serialize)]
struct ValidateJson {
    valid: bool,
    witness: Option<RpViolationJson>,
}

pub fn validate_json(doc: &InstanceDocument, result: &Result<(), RpViolation>) -> String {
    let json = ValidateJson {
        valid: result.is_ok(),
        witness: result.as_ref().err().map(|v| match v {
            RpViolation::RainbowPathInside(u, w) => RpViolationJson::RainbowPathInside {
                from: doc.name_of(*u).to_string(),
                to: doc.name_of(*w).to_string(),
            },
            RpViolation::Unabsorbed(u) => {
                RpViolationJson::Unabsorbed { vertex: doc.name_of(*u).to_string() }
            }
        }),
    };
    to_pretty(&json)
}

pub fn validate_text(doc: &InstanceDocument, result: &Result<(), RpViolation>) -> String {
    match result {
        Ok(()) => "valid: the set is an RP-kernel\n".to_string(),
        Err(RpViolation::RainbowPathInside(u, w)) => format!(
            "invalid: rainbow path joins set members {} and {}\n",
            doc.name_of(*u),
            doc.name_of(*w)
        ),
        Err(RpViolation::Unabsorbed(v)) => {
            format!("invalid: {} unabsorbed (no rainbow path into the set)\n", doc.name_of(*v))
        }
    }
}

#[derive(Serialize)]
struct ReachJson {
    vertices: Vec<String>,
    matrix: Vec<Vec<bool>>,
}

pub fn reach_json(doc: &InstanceDocument, r: &RainbowReachability) -> String {
    let n = r.vertex_count();
    let json = ReachJson {
        vertices: doc.vertices.clone(),
        matrix: (0..n)
            .map(|u| (0..n).map(|v| r.reaches(VertexId(u), VertexId(v))).collect())
            .collect(),
    };
    to_pretty(&json)
}

pub fn reach_text(doc: &InstanceDocument, r: &RainbowReachability) -> String {
    let n = r.vertex_count();
    let mut out = String::new();
    for u in 0..n {
        let row: String = (0..n)
            .map(|v| if r.reaches(VertexId(u), VertexId(v)) { '1' } else { '0' })
            .collect();
        out.push_str(&format!("{} {}\n", doc.vertices[u], row));
    }
    out
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("render structs always serialize");
    s.push('\n');
    s
}
