use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid incidence data: {0}")]
    InvalidIncidence(String),
    #[error("closure system is not a graded polytopal face lattice: {0}")]
    NotALattice(String),
    #[error("malformed lattice: {0}")]
    MalformedLattice(String),
    #[error("face {0} not found in the lattice")]
    FaceNotFound(String),
    #[error("digraph contains a directed cycle")]
    CyclicInput,
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("digraph is not an acyclic unique sink orientation")]
    NotAcyclicUso,
    #[error("vertex {0} is not simple")]
    NotSimpleVertex(String),
    #[error("vertex {0} is not the unique sink")]
    NotUniqueSink(String),
    #[error("no admissible neighbour split: {0}")]
    BadSplit(String),
    #[error("truncation requires a 4-dimensional polytope, got dimension {0}")]
    NotDimensionFour(i32),
    #[error("family parameters out of range: {0}")]
    BoundsViolation(String),
    #[error("orientation of the crosspolytope is cyclic")]
    CyclicOrientation,
    #[error("invalid pair sequence: {0}")]
    InvalidPairSequence(String),
    #[error("enumeration limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("point {point} violates inequality {facet}")]
    InfeasiblePoint { point: usize, facet: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("line is not generic: {0}")]
    NotGeneric(String),
    #[error("base point is not interior")]
    NotInterior,
    #[error("facets {0} and {1} do not share a ridge")]
    NotAdjacentFacets(usize, usize),
    #[error("could not reach a generic configuration after {0} retries")]
    DegenerateAfterRetries(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
