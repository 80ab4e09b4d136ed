use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group closure exceeds the size bound {bound}")]
    ClosureTooLarge { bound: usize },

    #[error("enumeration infeasible: group of order {order} exceeds bound {bound}")]
    EnumerationInfeasible { order: usize, bound: usize },

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("{what} is not multiplicative at ({a}, {b})")]
    NotMultiplicative { what: String, a: String, b: String },

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("antisymmetry fails for structure constant c^{k}_{{{i},{j}}}")]
    Antisymmetry { i: String, j: String, k: String },

    #[error("Jacobi identity fails on ({i}, {j}, {k})")]
    Jacobi { i: String, j: String, k: String },

    #[error("{what} does not preserve the bracket of ({i}, {j})")]
    NotBracketPreserving { what: String, i: String, j: String },

    #[error("{what} is not a derivation on ({i}, {j})")]
    NotDerivation { what: String, i: String, j: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("equivariance fails at g = {g}, x = {x}")]
    Equivariance { g: String, x: String },

    #[error("not a Hopf subalgebra: {0}")]
    NotSubalgebra(String),

    #[error("not normal: {0}")]
    NotNormal(String),

    #[error("normality oracle disagrees with generator conditions: {0}")]
    NormalityOracleDisagreement(String),

    #[error("invalid action ({invariant}): {witness}")]
    InvalidAction { invariant: String, witness: String },

    #[error("compatibility fails at y = {y}, x = {x}")]
    Compatibility { y: String, x: String },

    #[error("certification failed ({what}): {witness}")]
    Certification { what: String, witness: String },

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("not a split extension: {0}")]
    NotSplitExtension(String),

    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("semantic error at line {line}: {message}")]
    Semantic { line: usize, message: String },

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("unknown task `{0}`")]
    UnknownTask(String),

    #[error("bad task arguments: {0}")]
    TaskArguments(String),
}

impl Error {
    /// Errors caused by malformed input rather than by a mathematical property failing.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::Semantic { .. }
                | Error::UnknownObject(_)
                | Error::UnknownTask(_)
                | Error::TaskArguments(_)
                | Error::InvalidPermutation(_)
                | Error::DimensionMismatch(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
