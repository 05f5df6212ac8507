use thiserror::Error;

/// Errors raised by the algebra routines.
///
/// Precondition failures are values, never panics: callers such as the CLI
/// map every variant to a diagnostic and an exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a ring needs at least one variable")]
    EmptyRing,
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("monomial has {found} exponents but the ring has {expected} variables")]
    Arity { expected: usize, found: usize },
    #[error("variable index {index} out of range for a ring with {len} variables")]
    VariableIndex { index: usize, len: usize },
    #[error("exponent overflow")]
    Overflow,
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,
    #[error("the unit ideal is not allowed here")]
    UnitIdeal,
    #[error("colon by the zero ideal")]
    ColonByZero,
    #[error("saturation did not stabilize within {0} steps")]
    SaturationCap(usize),
    #[error("a monomial prime needs at least one variable")]
    EmptyPrime,
    #[error("support has {0} variables; at most {max} are supported here", max = crate::ring::MAX_VARIABLES)]
    TooManyVariables(usize),
    #[error("prime {0} is not associated to the ideal")]
    NotAssociated(String),
    #[error("the ideals do not have disjoint supports")]
    OverlappingSupports,
    #[error("prime {0} is not contained in the variable block of the given ideal")]
    PrimeOutsideBlock(String),
    #[error("no index l in 0..k has both parts associated")]
    EmptyIndexSet,
    #[error("window {window} must satisfy 2 <= window <= k_max = {k_max}")]
    Window { window: usize, k_max: usize },
    #[error("not a complete intersection")]
    NotCompleteIntersection,
    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,
    #[error("ideal is not vertex splittable")]
    NotVertexSplittable,
    #[error("graph has no edges")]
    EdgelessGraph,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("loop at vertex `{0}`")]
    GraphLoop(String),
    #[error("divisor enumeration needs {needed} candidates, budget is {budget}")]
    OracleBudget { needed: u128, budget: u128 },
    #[error("prime {0} is not realized by any divisor witness")]
    NotRealized(String),
    #[error("need at least {0} ideals")]
    TooFewIdeals(usize),
    #[error("ideal #{index} violates v(I^k) = alpha*k - 1 at k = {k} (got {value})")]
    HypothesisFailure { index: usize, k: usize, value: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
