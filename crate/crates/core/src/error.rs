use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument `{name}` must be nonnegative, got {value}")]
    NegativeArgument { name: &'static str, value: i64 },

    #[error("argument `{name}` = {value} is below the minimum {min}")]
    OutOfRange {
        name: &'static str,
        value: usize,
        min: usize,
    },

    #[error("`{name}` requires j >= k, got j = {j}, k = {k}")]
    IndexOrder { name: &'static str, j: usize, k: usize },

    #[error("Gamma offset must be 1/2 or 3/2, got {0}")]
    UnsupportedGammaOffset(String),

    #[error("2F1({a}, {b}; {c}; {z}) does not terminate: no upper parameter is a nonpositive integer")]
    NonTerminating {
        a: String,
        b: String,
        c: String,
        z: String,
    },

    #[error("2F1 lower parameter {c} hits zero at (c)_{k} before the series terminates")]
    ZeroDenominator { c: String, k: usize },

    #[error("Pfaff transformation needs a nonpositive integer first parameter, got {0}")]
    NonIntegerUpperParameter(String),

    #[error("Pfaff transformation is undefined at z = 1")]
    UnitArgument,

    #[error("evaluation point must be nonzero")]
    ZeroPoint,

    #[error("quadrature with {given} nodes is not exact for degree {degree} (need {required})")]
    InsufficientNodes {
        degree: usize,
        given: usize,
        required: usize,
    },

    #[error("chain member `{member}` failed: {source}")]
    ChainMember {
        member: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}
