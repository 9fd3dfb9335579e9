use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),
    #[error("letter {letter} is outside 1..={rank}")]
    InvalidWord { letter: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("word is not reduced")]
    NotReduced,
    #[error("word is not fully commutative")]
    NotFullyCommutative,
    #[error("word is not homogeneous")]
    NotHomogeneous,
    #[error("height {height} exceeds the exhaustive-search limit {limit}")]
    TooLarge { height: usize, limit: usize },
    #[error("invalid Dyck path: {0}")]
    InvalidPath(String),
    #[error("invalid segment T_{i}^{m}")]
    InvalidSegment { i: usize, m: usize },
    #[error("invalid canonical form: {0}")]
    InvalidCanonicalForm(String),
    #[error("peak apex ({position}, {height}) has odd coordinate sum")]
    CoordinateParity { position: usize, height: usize },
    #[error("block T_{i}^{m} does not lie on an extended ascent")]
    BlockNotOnAscent { i: usize, m: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid quiver orientation: {0}")]
    InvalidOrientation(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidRank(_) => "InvalidRank",
            Error::InvalidWord { .. } => "InvalidWord",
            Error::RankMismatch { .. } => "RankMismatch",
            Error::NotReduced => "NotReduced",
            Error::NotFullyCommutative => "NotFullyCommutative",
            Error::NotHomogeneous => "NotHomogeneous",
            Error::TooLarge { .. } => "TooLarge",
            Error::InvalidPath(_) => "InvalidPath",
            Error::InvalidSegment { .. } => "InvalidSegment",
            Error::InvalidCanonicalForm(_) => "InvalidCanonicalForm",
            Error::CoordinateParity { .. } => "CoordinateParity",
            Error::BlockNotOnAscent { .. } => "BlockNotOnAscent",
            Error::IndexOutOfRange(_) => "IndexOutOfRange",
            Error::Parse(_) => "ParseError",
            Error::InvalidOrientation(_) => "InvalidOrientation",
        }
    }
}
