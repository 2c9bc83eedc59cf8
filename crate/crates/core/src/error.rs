use thiserror::Error;

/// Everything that can go wrong across the crate.
///
/// Variants carry enough structure for callers to react programmatically;
/// display strings are for humans. Semantic verification failures (an axiom
/// not holding, a classification finding no match) are *values*, not errors,
/// except where an operation's precondition is violated outright.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed rational literal {0:?}: expected canonical form like \"-3/2\" or \"5/1\"")]
    ParseRational(String),

    #[error("vector has {got} coordinates, ambient space has {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("gram matrix is not symmetric at ({row},{col})")]
    AsymmetricForm { row: usize, col: usize },

    #[error("input vectors are linearly dependent; radical computation requires a basis")]
    DependentBasis,

    #[error("ambient form is degenerate; no nondegenerate extension exists")]
    DegenerateAmbient,

    #[error("root set does not contain the zero vector")]
    MissingZeroRoot,

    #[error("duplicate root {0}")]
    DuplicateRoot(String),

    #[error("root set does not span a space of the stated dimension (span rank {span_rank}, ambient {ambient})")]
    SpanFailure { span_rank: usize, ambient: usize },

    #[error("reflection is undefined along the null root {0}")]
    NullReflection(String),

    #[error("{0} is not a root of the system")]
    NotInSystem(String),

    #[error("{0} is not a nonzero real root of the system")]
    NotRealRoot(String),

    #[error("{0} is not a nonzero nonsingular root of the system")]
    NotNonsingularRoot(String),

    #[error("root string through {beta} along {alpha} left the scan window (|i| > 16); the system is too broken to report a string")]
    ScanBound { beta: String, alpha: String },

    #[error("orbit enumeration exceeded {0} elements; input is not a finite root supersystem")]
    OrbitBound(usize),

    #[error(
        "coordinate {0} is not an integer; lattice verification requires integer root coordinates"
    )]
    NonIntegralCoordinate(String),

    #[error("component decomposition does not span the real subspace")]
    ComponentSpanFailure,

    #[error(
        "candidate orbit is not reflection-closed: {missing} = reflection of {element} is absent"
    )]
    NotOrbitClosed { element: String, missing: String },

    #[error("operation requires an irreducible system without nonsingular roots; {0}")]
    NotOrdinaryIrreducible(String),

    #[error("no catalog type matches; component profile: {profile}")]
    Unrecognized { profile: String },

    #[error("isomorphism witness matrix is singular")]
    SingularWitness,

    #[error("isomorphism scalar must be nonzero")]
    ZeroScalar,

    #[error("search dimension {dim} exceeds the limit {limit}")]
    DimLimit { dim: usize, limit: usize },

    #[error("tower parameters must be strictly increasing: {0}")]
    NonMonotone(String),

    #[error("unknown type label {0:?}")]
    BadLabel(String),

    #[error("bad parameter for {family}: {reason}")]
    BadParameter { family: String, reason: String },

    #[error("malformed document: {0}")]
    MalformedDocument(String),
}
