use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type.
///
/// `exit_code` maps each variant onto the CLI exit-code contract:
/// 2 usage/input, 3 I/O, 4 internal consistency, 5 infeasible.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("zero triple: all three homogeneous coordinates are zero")]
    ZeroTriple,

    #[error("identical lines: {0}")]
    IdenticalLines(String),

    #[error("singular matrix: determinant is zero")]
    SingularMatrix,

    #[error("duplicate line in arrangement: {0}")]
    DuplicateLines(String),

    #[error("arrangement must contain at least one line")]
    EmptyArrangement,

    #[error("operation requires at least {needed} lines, arrangement has {got}")]
    TooFewLines { needed: usize, got: usize },

    #[error("pair identity violated: sum k(k-1) t_k = {got}, expected n(n-1) = {expected}")]
    IdentityViolation { got: u64, expected: u64 },

    #[error("invalid family spec: {0}")]
    InvalidFamilySpec(String),

    #[error("could not draw {needed} distinct lines with coefficients up to +/-{max_range}")]
    ExhaustedRetries { needed: u64, max_range: i64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("certificate infeasible at k = {k}: slack {slack}")]
    Infeasible { k: u64, slack: Rational },

    #[error("applicability violated: {0}")]
    ApplicabilityViolation(String),

    #[error("empty feasible region: no vertex with c1 > 0 satisfies the constraints")]
    EmptyFeasibleRegion,

    #[error("objective is unbounded over the feasible region")]
    UnboundedObjective,

    #[error("lower bound '{name}' exceeds measured region count: bound {bound}, f = {f}")]
    BoundViolation {
        name: String,
        bound: Rational,
        f: u64,
    },

    #[error("guard violation: {0}")]
    GuardViolation(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// CLI exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } => 3,
            Error::IdentityViolation { .. }
            | Error::BoundViolation { .. }
            | Error::Consistency(_) => 4,
            Error::Infeasible { .. } | Error::EmptyFeasibleRegion | Error::UnboundedObjective => 5,
            _ => 2,
        }
    }
}
