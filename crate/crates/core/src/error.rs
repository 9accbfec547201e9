//! Error type shared by every module in this crate.

use thiserror::Error;

/// Everything that can go wrong while building or checking an algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("parity value {value} is not 0 or 1")]
    BadParity { value: u64 },

    #[error("structure constant table has {got} entries, expected {expected}")]
    BadTableSize { expected: usize, got: usize },

    #[error("product e{i}·e{j} has a component on e{k} of the wrong parity")]
    GradingViolation { i: usize, j: usize, k: usize },

    #[error("map entry ({row},{col}) is nonzero but connects basis vectors of different parity")]
    MapNotEven { row: usize, col: usize },

    #[error("map matrix is not square: row {row} has {got} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("element is not homogeneous: it mixes even and odd components")]
    NotHomogeneous,

    #[error("identity `{id}` takes {expected} arguments, got {got}")]
    BadArity {
        id: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("unknown identity selector `{0}`")]
    UnknownIdentity(String),

    #[error("unknown catalog key `{0}`")]
    UnknownCatalogKey(String),

    #[error("catalog entry `{key}` failed its construction self-check: {detail}")]
    CatalogGateFailed { key: String, detail: String },

    #[error(
        "twisting requires the input algebra to carry the identity map, but its map is nontrivial"
    )]
    TwistOverNontrivialMap,

    #[error("map is not an algebra morphism: it fails on the product e{i}·e{j}")]
    NotMorphism { i: usize, j: usize },

    #[error("invalid rational literal `{0}`: expected `p` or `p/q` in lowest terms")]
    BadRational(String),

    #[error("denominator is zero in rational literal `{0}`")]
    ZeroDenominator(String),

    #[error("generator spec is invalid: {0}")]
    BadGenSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
