use thiserror::Error;

/// Errors raised by the poset, complex and Bier-sphere operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("poset is not bounded: {0}")]
    NotBounded(String),
    #[error("cover relation contains a cycle")]
    CyclicCovers,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("poset is not graded")]
    NotGraded,
    #[error("poset is not a lattice: no meet for {0} and {1}")]
    NotALattice(String, String),
    #[error("ideal is not proper: {0}")]
    ImproperIdeal(String),
    #[error("element {0} has no vertex in the order complex")]
    BoundaryElement(String),

    #[error("vertex {0} is not in the universe")]
    VertexOutOfUniverse(String),
    #[error("complex is void (has no faces at all)")]
    VoidComplex,
    #[error("sequence length mismatch: {0}")]
    LengthMismatch(String),
    #[error("complex is not proper: {0}")]
    ImproperComplex(String),
    #[error("complexes live on different ground sets ({0} vs {1})")]
    GroundSetMismatch(usize, usize),
    #[error("face {0} is not present")]
    FaceNotPresent(String),
    #[error("label {0} already in the universe")]
    LabelCollision(String),
    #[error("link of {0} is not the boundary of a simplex")]
    LinkNotSimplexBoundary(String),
    #[error("flip target {0} is already a face")]
    BAlreadyPresent(String),
    #[error("complex is not pure")]
    NotPure,
    #[error("facet order is not a permutation of the facets: {0}")]
    NotAPermutation(String),
    #[error("search budget exceeded: {0}")]
    TooLarge(String),
    #[error("not a K-sequence: {0}")]
    NotAKSequence(String),

    #[error("({0}) is not an interval of the Bier poset: {1}")]
    NotAnInterval(String, String),
    #[error("index {0} too large (at most {1})")]
    IndexTooLarge(usize, usize),
    #[error("index {0} out of range {1}")]
    IndexOutOfRange(usize, String),
    #[error("face {0} cannot be added: {1}")]
    NotAddable(String, String),
    #[error("invalid middle-level choice: {0}")]
    InvalidChoice(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
