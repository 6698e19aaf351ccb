//! `rpk`: classify arc-coloured digraphs, check colouring hypotheses, build
//! rainbow closures and reachability tables, construct and validate
//! RP-kernels, generate conditioned instances, and export DOT drawings.
//!
//! Exit codes: 0 found/valid, 1 proven-absent/invalid, 2 input error,
//! 3 unknown, 4 precondition failed.

mod document;
mod dot;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use document::{default_names, InstanceDocument};
use rpk_core::conditions::classify;
use rpk_core::digraph::{ArcColouredDigraph, VertexSet};
use rpk_core::error::Error;
use rpk_core::factory::{self, ClassProfile, ColourStrategy, FixtureName, GenProfile};
use rpk_core::rainbow::{rainbow_closure, rainbow_reachability};
use rpk_core::solver::{self, Outcome, SolveResult};

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;
const EXIT_PRECONDITION: u8 = 4;

#[derive(Parser)]
#[command(name = "rpk", version, about = "Kernels by rainbow paths in arc-coloured digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Unicyclic,
    Semicomplete,
    Qt,
    Bipartite,
    Brute,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Unicyclic,
    Semicomplete,
    Qt,
    Bipartite,
}

#[derive(Subcommand)]
enum Command {
    /// Report class membership and every colouring condition with witnesses
    Classify {
        #[arg(long)]
        json: bool,
        file: PathBuf,
    },
    /// Construct an RP-kernel (or prove none exists at desk scale)
    Solve {
        #[arg(long)]
        json: bool,
        /// Constructor to use; `auto` tries them in class order
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Re-check the returned kernel against a fresh reachability table
        #[arg(long)]
        validate: bool,
        /// Brute-force vertex bound (overrides RPK_BRUTE_BOUND)
        #[arg(long)]
        bound: Option<usize>,
        file: PathBuf,
    },
    /// Emit the rainbow closure as an instance document (added arcs carry
    /// colour 0)
    Closure { file: PathBuf },
    /// Print the rainbow reachability matrix
    Reach {
        #[arg(long)]
        json: bool,
        file: PathBuf,
    },
    /// Check whether a vertex set is an RP-kernel
    Validate {
        #[arg(long)]
        json: bool,
        /// Comma-separated vertex names
        #[arg(long)]
        set: String,
        file: PathBuf,
    },
    /// Write a fixture or a profile-driven random instance
    Generate {
        /// One of QT4, CB5, TB4, FIG4
        #[arg(long, conflicts_with_all = ["class", "n", "parts"])]
        fixture: Option<String>,
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        /// Vertex count (unicyclic, semicomplete, qt)
        #[arg(long)]
        n: Option<usize>,
        /// Part sizes A,B (bipartite)
        #[arg(long)]
        parts: Option<String>,
        /// `injective` or `random:M`
        #[arg(long, default_value = "injective")]
        colours: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when omitted
        file: Option<PathBuf>,
    },
    /// Export a DOT drawing with colour-indexed arc styling
    ExportDot { file: PathBuf },
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}

fn input_error(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {}", msg);
    EXIT_INPUT
}

fn load(file: &PathBuf) -> Result<(InstanceDocument, ArcColouredDigraph), u8> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| input_error(format_args!("{}: {}", file.display(), e)))?;
    let doc = InstanceDocument::parse(&text).map_err(input_error)?;
    let digraph = doc.to_digraph().map_err(input_error)?;
    Ok((doc, digraph))
}

fn brute_bound(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("RPK_BRUTE_BOUND").ok().and_then(|v| v.parse().ok())
    })
    .unwrap_or(solver::DEFAULT_BRUTE_BOUND)
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Classify { json, file } => {
            let (doc, d) = match load(&file) {
                Ok(v) => v,
                Err(code) => return code,
            };
            let report = classify(&d);
            if json {
                print!("{}", render::classify_json(&doc, &report));
            } else {
                print!("{}", render::classify_text(&doc, &report));
            }
            EXIT_OK
        }
        Command::Solve { json, method, validate, bound, file } => {
            let (doc, d) = match load(&file) {
                Ok(v) => v,
                Err(code) => return code,
            };
            let bound = brute_bound(bound);
            let result = match run_method(&d, method, bound) {
                Ok(res) => res,
                Err(Error::PreconditionFailed { hypothesis }) => {
                    eprintln!("precondition failed: {}", hypothesis);
                    return EXIT_PRECONDITION;
                }
                Err(Error::InstanceTooLarge { n, bound }) => {
                    eprintln!(
                        "unknown: {} vertices exceed the brute-force bound {}",
                        n, bound
                    );
                    return EXIT_UNKNOWN;
                }
                Err(e) => return input_error(e),
            };
            if validate {
                if let Some(k) = result.kernel {
                    match solver::is_rp_kernel(&d, k) {
                        Ok(Ok(())) => {}
                        Ok(Err(v)) => {
                            eprintln!("validation failed: {}", v);
                            return EXIT_NEGATIVE;
                        }
                        Err(e) => return input_error(e),
                    }
                }
            }
            if json {
                print!("{}", render::solve_json(&doc, &result));
            } else {
                print!("{}", render::solve_text(&doc, &result));
            }
            match result.outcome {
                Outcome::Found => EXIT_OK,
                Outcome::ProvenAbsent => EXIT_NEGATIVE,
                Outcome::Unknown => EXIT_UNKNOWN,
            }
        }
        Command::Closure { file } => {
            let (doc, d) = match load(&file) {
                Ok(v) => v,
                Err(code) => return code,
            };
            let closure = rainbow_closure(&d);
            // original arcs keep their colour; closure-added arcs carry the
            // colourless marker 0
            let arcs = closure
                .arcs()
                .into_iter()
                .map(|(u, v)| {
                    let colour = d.arc_colour(u, v).map(|c| c.value()).unwrap_or(0);
                    (doc.name_of(u).to_string(), doc.name_of(v).to_string(), colour)
                })
                .collect();
            let out = InstanceDocument { vertices: doc.vertices.clone(), arcs };
            print!("{}", out.serialize());
            EXIT_OK
        }
        Command::Reach { json, file } => {
            let (doc, d) = match load(&file) {
                Ok(v) => v,
                Err(code) => return code,
            };
            let r = rainbow_reachability(&d);
            if json {
                print!("{}", render::reach_json(&doc, &r));
            } else {
                print!("{}", render::reach_text(&doc, &r));
            }
            EXIT_OK
        }
        Command::Validate { json, set, file } => {
            let (doc, d) = match load(&file) {
                Ok(v) => v,
                Err(code) => return code,
            };
            let index = match doc.name_index() {
                Ok(i) => i,
                Err(e) => return input_error(e),
            };
            let mut s = VertexSet::EMPTY;
            for name in set.split(',').map(str::trim).filter(|n| !n.is_empty()) {
                match index.get(name) {
                    Some(&i) => s.insert(rpk_core::VertexId(i)),
                    None => return input_error(format_args!("unknown vertex `{}`", name)),
                }
            }
            let result = match solver::is_rp_kernel(&d, s) {
                Ok(r) => r,
                Err(e) => return input_error(e),
            };
            if json {
                print!("{}", render::validate_json(&doc, &result));
            } else {
                print!("{}", render::validate_text(&doc, &result));
            }
            if result.is_ok() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            }
        }
        Command::Generate { fixture, class, n, parts, colours, seed, file } => {
            let doc = match build_instance(fixture, class, n, parts, &colours, seed) {
                Ok(doc) => doc,
                Err(code) => return code,
            };
            let text = doc.serialize();
            match file {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        return input_error(format_args!("{}: {}", path.display(), e));
                    }
                }
                None => print!("{}", text),
            }
            EXIT_OK
        }
        Command::ExportDot { file } => {
            let (doc, d) = match load(&file) {
                Ok(v) => v,
                Err(code) => return code,
            };
            print!("{}", dot::export_dot(&doc, &d));
            EXIT_OK
        }
    }
}

fn run_method(
    d: &ArcColouredDigraph,
    method: MethodArg,
    bound: usize,
) -> Result<SolveResult, Error> {
    let kernel_bound = bound.max(rpk_core::kernel::DEFAULT_KERNEL_BOUND);
    match method {
        MethodArg::Auto => Ok(solver::solve_bounded(d, bound)),
        MethodArg::Unicyclic => solver::rp_kernel_unicyclic(d),
        MethodArg::Semicomplete => solver::rp_kernel_semicomplete(d),
        MethodArg::Qt => solver::rp_kernel_quasi_transitive_bounded(d, kernel_bound),
        MethodArg::Bipartite => solver::rp_kernel_bipartite_bounded(d, kernel_bound),
        MethodArg::Brute => {
            let kernels = solver::brute_force_rp_kernel_bounded(d, bound)?;
            let count = kernels.len();
            Ok(match kernels.into_iter().next() {
                Some(k) => SolveResult {
                    kernel: Some(k),
                    outcome: Outcome::Found,
                    method: Some(solver::Method::BruteForce),
                    validated: true,
                    leaf: Some("brute_force".into()),
                    diagnostics: format!("exhaustive enumeration found {} RP-kernel(s)", count),
                },
                None => SolveResult {
                    kernel: None,
                    outcome: Outcome::ProvenAbsent,
                    method: Some(solver::Method::BruteForce),
                    validated: false,
                    leaf: Some("brute_force".into()),
                    diagnostics: "exhaustive enumeration found no RP-kernel".into(),
                },
            })
        }
    }
}

fn build_instance(
    fixture: Option<String>,
    class: Option<ClassArg>,
    n: Option<usize>,
    parts: Option<String>,
    colours: &str,
    seed: u64,
) -> Result<InstanceDocument, u8> {
    if let Some(name) = fixture {
        let parsed: FixtureName = name.parse().map_err(|e: Error| input_error(e))?;
        let f = factory::fixture(parsed).map_err(input_error)?;
        let names: Vec<String> = f.names.iter().map(|s| s.to_string()).collect();
        return Ok(InstanceDocument::from_digraph(&f.digraph, &names));
    }
    let class = class.ok_or_else(|| input_error("either --fixture or --class is required"))?;
    let strategy = parse_colours(colours).map_err(input_error)?;
    let profile = match class {
        ClassArg::Bipartite => {
            let spec = parts.ok_or_else(|| input_error("--parts A,B is required for bipartite"))?;
            let (a, b) = parse_parts(&spec).map_err(input_error)?;
            ClassProfile::Bipartite { x: a, y: b }
        }
        other => {
            let n = n.ok_or_else(|| input_error("--n is required for this class"))?;
            match other {
                ClassArg::Unicyclic => ClassProfile::Unicyclic { n },
                ClassArg::Semicomplete => ClassProfile::Semicomplete { n },
                ClassArg::Qt => ClassProfile::QuasiTransitive { n },
                ClassArg::Bipartite => unreachable!("handled above"),
            }
        }
    };
    let d = factory::generate(&GenProfile { class: profile, colours: strategy, seed })
        .map_err(input_error)?;
    let names = default_names(d.vertex_count());
    Ok(InstanceDocument::from_digraph(&d, &names))
}

fn parse_colours(spec: &str) -> Result<ColourStrategy, String> {
    if spec == "injective" {
        return Ok(ColourStrategy::Injective);
    }
    if let Some(m) = spec.strip_prefix("random:") {
        let colours: u32 = m.parse().map_err(|_| format!("bad colour count `{}`", m))?;
        if colours == 0 {
            return Err("colour count must be positive".into());
        }
        return Ok(ColourStrategy::RandomRepair { colours });
    }
    Err(format!("unknown colour strategy `{}` (use `injective` or `random:M`)", spec))
}

fn parse_parts(spec: &str) -> Result<(usize, usize), String> {
    let mut it = spec.split(',');
    let a = it.next().and_then(|s| s.trim().parse().ok());
    let b = it.next().and_then(|s| s.trim().parse().ok());
    match (a, b, it.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(format!("bad --parts `{}`, expected A,B", spec)),
    }
}
