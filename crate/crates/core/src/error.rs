use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Dense bitset views cap the vertex count at 64.
    #[error("instance has {n} vertices, the dense representation supports at most 64")]
    TooManyVertices { n: usize },

    #[error("arc ({v},{v}) is a loop; loops are not allowed")]
    LoopArc { v: usize },

    #[error("duplicate arc ({from},{to}); at most one arc per ordered pair")]
    DuplicateArc { from: usize, to: usize },

    #[error("arc endpoint {v} out of range for {n} vertices")]
    InvalidVertex { v: usize, n: usize },

    #[error("arc colours must be positive integers")]
    InvalidColour,

    /// Colours of a freshly constructed digraph must be exactly 1..=m.
    #[error("colour {missing} is unused; colours must form a contiguous range 1..=m")]
    ColourGap { missing: u32 },

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("rainbow path queries require two distinct endpoints")]
    SameEndpoints,

    #[error("digraph has a cycle; operation requires an acyclic digraph")]
    NotAcyclic,

    #[error("instance has {n} vertices, exceeding the brute-force bound {bound}")]
    InstanceTooLarge { n: usize, bound: usize },

    /// A constructor hypothesis does not hold for the given instance.
    #[error("precondition failed: {hypothesis}")]
    PreconditionFailed { hypothesis: String },

    /// A set guaranteed by a theorem failed validation. This signals an
    /// implementation bug or a hypothesis checker gap and is never silent.
    #[error("theorem violation: {detail}")]
    TheoremViolation { detail: String },

    #[error("unknown fixture `{name}`")]
    UnknownFixture { name: String },

    #[error("invalid generation profile: {detail}")]
    InvalidProfile { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
