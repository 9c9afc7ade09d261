use thiserror::Error;

/// Errors shared by every layer of the engine.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    /// Two elements built over different presentations were combined.
    #[error("elements belong to distinct presentations (alphabet mismatch)")]
    AlphabetMismatch,

    /// A tensor operation received operands of incompatible rank.
    #[error("tensor rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    /// Tensor ranks above 3 are never needed (coassociativity is the deepest
    /// axiom checked) and are rejected.
    #[error("tensor rank {0} exceeds the supported maximum of 3")]
    RankUnsupported(usize),

    /// The braiding is only defined on parity-homogeneous elements.
    #[error("braiding requires parity-homogeneous input")]
    NonHomogeneous,

    /// A computation needs a larger truncation degree than was requested.
    #[error("truncation degree {degree} too small, need at least {required}")]
    TruncationExceeded { degree: u32, required: u32 },

    /// A structure-map application hit a generator with no stored image.
    #[error("no structure-map image for generator `{0}`")]
    MissingImage(String),

    /// A braided-only operation received plain-flavored maps or vice versa.
    #[error("structure maps have the wrong flavor: expected {expected}")]
    WrongFlavor { expected: &'static str },

    /// The smash-product machinery only supports the CZ2 host.
    #[error("unsupported smash-product host: {0}")]
    UnsupportedHost(String),

    /// A constructor's internal well-definedness check failed.  This
    /// indicates an engine bug, not a user error.
    #[error("construction failed well-definedness check: {0}")]
    ConstructionFailure(String),

    /// A preset factory received an out-of-range argument.
    #[error("invalid preset argument: {0}")]
    InvalidArgument(String),
}
