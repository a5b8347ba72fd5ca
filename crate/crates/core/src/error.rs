use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("nothing to eliminate: variable {0} does not occur in both polynomials")]
    NothingToEliminate(usize),
    #[error("leading coefficient in variable {0} is not a nonzero constant")]
    NonConstantLeading(usize),
    #[error("singularity data inconsistent: {0}")]
    SingularityDataInconsistent(String),
    #[error("hyperelliptic by genus: genus {0} < 3")]
    HyperellipticByGenus(usize),
    #[error("genus {0} < 3: such curves are hyperelliptic and excluded")]
    GenusTooSmall(usize),
    #[error("non-ordinary singularities suspected: {0}")]
    NonOrdinarySingularities(String),
    #[error("sampling insufficient: normal-form route gives {algebraic} quadrics, sampling gives {sampled}")]
    SamplingInsufficient { algebraic: usize, sampled: usize },
    #[error("not closed under bracket")]
    NotClosedUnderBracket,
    #[error("not semisimple")]
    NotSemisimple,
    #[error("not a sum of two simple ideals (centroid dimension {0})")]
    NotSumOfTwoSimpleIdeals(usize),
    #[error("factorization budget exceeded on {0}")]
    FactorizationBudget(String),
    #[error("search budget exceeded: {0}")]
    SearchBudget(String),
    #[error("not a representation of expected shape: {0}")]
    NotExpectedShape(String),
    #[error("equal-parameter case, use structure_map_equal")]
    EqualParameterCase,
    #[error("inconsistent block data")]
    InconsistentBlockData,
    #[error("classification impossible: dim = {0}")]
    ClassificationImpossible(usize),
    #[error("rational point required")]
    RationalPointRequired,
    #[error("map degenerate")]
    MapDegenerate,
    #[error("primitive element not found")]
    PrimitiveElementNotFound,
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Io(_) => 2,
            Error::FactorizationBudget(_) | Error::SearchBudget(_) => 4,
            _ => 3,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
