use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial degree {degree} exceeds the factorization bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("minimal polynomial {0} is not irreducible over Q")]
    ReducibleMinimalPolynomial(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("expression is not homogeneous: `{first}` and `{second}` have different degrees")]
    NotHomogeneous { first: String, second: String },
    #[error("coordinates or operands live in different number fields")]
    FieldMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("substitution images do not share a common (bi)degree")]
    InhomogeneousImage,
    #[error("the point does not lie on the conic")]
    PointNotOnConic,
    #[error("the conic is not smooth")]
    ConicNotSmooth,
    #[error("no rational point of height <= {0} on the conic")]
    NoRationalPoint(u64),
    #[error("the curve and the conic share a component")]
    CommonComponent,
    #[error("the conic is not a simple contact conic of the curve")]
    NotSimpleContact,
    #[error("all {0} deterministic shears gave degenerate elimination data")]
    ShearExhausted(usize),
    #[error("{0} nodes given; the criterion needs at most 7")]
    TooManyNodes(usize),
    #[error("expected {expected} nodes, got {got}")]
    WrongNodeCount { expected: usize, got: usize },
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("the line is not tangent to the conic or not transversal to the curve")]
    NotTangentLine,
    #[error("grouping search exceeded the budget of {0} candidates")]
    SearchBudgetExceeded(usize),
    #[error("the quadratic part at the distinguished node has rank < 3")]
    NodeDegenerate,
    #[error("the surface contains a line through the distinguished node")]
    LineThroughNode,
    #[error("the hyperplane passes through the distinguished node")]
    HyperplaneThroughNode,
    #[error("the quadric is singular at, or misses, the distinguished node")]
    QuadricSingularAtNode,
    #[error("the point is not a node")]
    NotANode,
    #[error("point #{0} is not rational; a rational point is required")]
    NonRationalPoint(usize),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
