use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `exp` of a series (or of a Grassmann element) needs a vanishing
    /// constant/scalar term; anything else would require a transcendental
    /// constant, which exact arithmetic cannot represent.
    #[error("series exponential requires a zero constant term")]
    NonzeroConstantTerm,

    /// Compositional inversion needs a series of the form `c1*z + ...`
    /// with `c1 != 0`.
    #[error("series reversion requires a nonzero linear coefficient")]
    MissingLinearCoefficient,

    #[error("enumeration over {edges} hyperedges exceeds the cap of {cap} (2^|E| subsets)")]
    EdgeCapExceeded { edges: usize, cap: usize },

    #[error("{vertices} vertices exceed the Grassmann engine cap of {cap} (state space is 4^n)")]
    VertexCapExceeded { vertices: usize, cap: usize },

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid weight spec `{0}`: expected `uniform:K`, `ones` or `map:2=1,3=1/2,...`")]
    InvalidWeightSpec(String),

    #[error("(k-1) must divide the requested index: n={n}, p={p}, k={k}")]
    DivisibilityViolation { n: usize, p: usize, k: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
