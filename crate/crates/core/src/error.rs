use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),
    #[error("generator {value} exceeds the accepted maximum {max}")]
    GeneratorTooLarge { value: i64, max: i64 },
    #[error("gcd of the generators is {0}, not 1 (infinitely many gaps)")]
    GcdNotOne(i64),
    #[error("{0} is not an element of the semigroup")]
    NotAMember(i64),
    #[error("invalid gluing data: {0}")]
    InvalidGluingData(String),
    #[error("factorizations have different dimensions ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },
    #[error("the semigroup is N; Delta set and catenary degree are undefined")]
    TrivialSemigroup,
    #[error("Delta-set scan reached max {scanned}, below the Betti-certified max {certified}")]
    ScanBoundTooSmall { scanned: i64, certified: i64 },
    #[error("operation requires embedding dimension 3, got {0}")]
    UnsupportedDimension(usize),
    #[error("semigroup does not have a single Betti element")]
    NotSingleBetti,
    #[error("semigroup does not have exactly two Betti elements")]
    NotTwoBetti,
    #[error("semigroup does not have three Betti elements")]
    NotThreeBetti,
    #[error("no valid two-Betti parametrization found")]
    NoValidParametrization,
    #[error("invalid arithmetic-sequence data: {0}")]
    InvalidArithmeticData(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
