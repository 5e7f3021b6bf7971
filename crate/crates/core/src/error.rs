use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("group is not transitive")]
    NotTransitive,
    #[error("wrong degree: expected {expected}, found {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("partition or domain is not invariant under the group")]
    NotInvariant,
    #[error("no element of order {p}: {p} does not divide the group order")]
    NoSuchElement { p: u64 },
    #[error("group is not solvable")]
    NotSolvable,
    #[error("group is trivial")]
    TrivialGroup,
    #[error("enumeration budget of {budget} elements exceeded")]
    BoundExceeded { budget: u64 },
    #[error("invalid circulant offsets: {0}")]
    InvalidOffsets(String),
    #[error("bad modulus {0}: need a prime congruent to 1 mod 4")]
    BadModulus(u64),
    #[error("unknown corpus family `{0}`")]
    UnknownFamily(String),
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("generators are not automorphisms of the structure")]
    NotAutomorphisms,
    #[error("arc orbit contains both directions of an edge")]
    OrbitContainsBothDirections,
    #[error("digraph has no arcs")]
    EmptyDigraph,
    #[error("alternet {0} is degenerate")]
    DegenerateAlternet(usize),
    #[error("neighbourhood classes are not of uniform size >= 2")]
    ClassesNotUniform,
    #[error("quotient graph is not a cycle of length >= 3")]
    QuotientNotCycle,
    #[error("an edge joins two vertices of the same orbit")]
    IntraOrbitEdge,
    #[error("degree {0} is not a prime power")]
    DegreeNotPrimePower(usize),
    #[error("normal subgroup has more than two orbits")]
    TooManyOrbits,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("element order {order} is not coprime to kernel order {kernel_order}")]
    NotCoprime { order: u64, kernel_order: u128 },
    #[error("induced image is not a non-identity semiregular permutation")]
    ImageNotSemiregular,
    #[error("quotient action is not faithful")]
    NotFaithful,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors that mean "the input does not satisfy the operation's
    /// hypotheses", as opposed to parse failures or broken invariants.
    pub fn is_precondition(&self) -> bool {
        !matches!(
            self,
            Error::InvariantViolation(_)
                | Error::Parse(_)
                | Error::Io(_)
                | Error::Json(_)
                | Error::InvalidPermutation(_)
                | Error::InvalidGraph(_)
        )
    }

    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }
}
