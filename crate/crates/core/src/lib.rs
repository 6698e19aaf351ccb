//! Kernels by rainbow paths (RP-kernels) in arc-coloured digraphs.
//!
//! An RP-kernel of an arc-coloured digraph is a vertex set with no rainbow
//! path between any two of its members such that every outside vertex
//! reaches the set by a rainbow path. Deciding existence is NP-hard in
//! general; this crate implements constructive existence results for four
//! digraph classes whose short cycles and small induced subdigraphs are
//! suitably coloured:
//!
//! * unicyclic digraphs whose unique cycle is rainbow,
//! * semicomplete digraphs with rainbow 3-cycles,
//! * quasi-transitive digraphs with rainbow 3-cycles and rainbow induced
//!   QT4 copies,
//! * bipartite tournaments, split by the smaller part's size (1-coloured,
//!   singleton side, two-vertex side with 4-cycles on three colours, and
//!   the general case with rainbow 4-/6-cycles, rainbow CB5 copies and
//!   properly coloured TB4 copies).
//!
//! Everything is exact and deterministic. An exhaustive brute-force oracle
//! ([`solver::brute_force_rp_kernel`]) backs the constructors at desk scale,
//! and every constructor re-validates its output before returning it.

pub mod conditions;
pub mod digraph;
pub mod error;
pub mod factory;
pub mod kernel;
pub mod pattern;
pub mod rainbow;
pub mod solver;

pub use digraph::{Arc, ArcColouredDigraph, ColourId, Digraph, VertexId, VertexSet};
pub use error::{Error, Result};
pub use rainbow::{RainbowReachability, WitnessPath};
pub use solver::{Method, Outcome, SolveResult};
