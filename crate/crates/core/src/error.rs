//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown series `{0}`; expected one of A, B, C, D, E, F, G")]
    UnknownSeries(String),

    #[error("rank {rank} out of range for series {series} ({expected})")]
    RankOutOfRange {
        series: char,
        rank: usize,
        expected: &'static str,
    },

    #[error("cannot parse `{0}` as a Dynkin spec (expected <letter><rank>, e.g. G2)")]
    BadDynkinSpec(String),

    #[error("invariant form scale must be nonzero")]
    ZeroScale,

    #[error("`{0}` is not a root of the system")]
    NotARoot(String),

    #[error("Weyl orbit exceeds cap of {cap} elements")]
    OrbitCapExceeded { cap: usize },

    #[error("crossed node set must be a nonempty subset of 1..={rank}")]
    BadCrossing { rank: usize },

    #[error("weight {0} is not integral for the algebra")]
    NonIntegralWeight(String),

    #[error("weight {0} is not dominant for the parabolic")]
    NotPDominant(String),

    #[error("weight {0} is not dominant for the full algebra")]
    NotGDominant(String),

    #[error("weight {0} is not dominant for the Levi factor")]
    NotLeviDominant(String),

    #[error("component index {index} out of range: f* has {count} irreducible components")]
    BadComponentIndex { index: usize, count: usize },

    #[error("isotypic component {0} has multiplicity {1} > 1 in f* ⊗ V; this violates multiplicity-freeness and indicates a bug or bad input")]
    MultiplicityOverflow(String, u32),

    #[error("formula order {order} exceeds cap {cap}")]
    OrderCapExceeded { order: u32, cap: u32 },

    #[error("internal assertion failed: {0}")]
    InternalAssertion(String),
}
