use alloc::string::String;
use core::fmt;

/// Every failure the kernels can report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotDivisible,
    NotInvertible { a: i64, m: u64 },
    ZeroPolynomial,
    DivisionByZero,
    Parse(String),
    WidthMismatch { left: usize, right: usize },
    NotClosed,
    EmptyLink,
    InvalidSlice { index: usize },
    Inadmissible { a: u32, b: u32, c: u32 },
    InvalidBraid(String),
    TruncationViolation { j: usize },
    SingularSystem,
    InconsistentSystem,
    AllZero,
    WrongArity { endpoints: usize },
    MultiComponent,
    TooFewStrands { strands: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotDivisible => write!(f, "polynomial division leaves a remainder"),
            Error::NotInvertible { a, m } => write!(f, "{a} is not a unit modulo {m}"),
            Error::ZeroPolynomial => write!(f, "operation undefined on the zero polynomial"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::WidthMismatch { left, right } => {
                write!(f, "width mismatch: {left} strands against {right}")
            }
            Error::NotClosed => write!(f, "word does not start and end with zero strands"),
            Error::EmptyLink => write!(f, "the empty diagram has no reduced bracket"),
            Error::InvalidSlice { index } => write!(f, "slice {index} is out of range"),
            Error::Inadmissible { a, b, c } => write!(f, "({a}, {b}, {c}) is not admissible"),
            Error::InvalidBraid(msg) => write!(f, "invalid braid word: {msg}"),
            Error::TruncationViolation { j } => {
                write!(f, "generator at j = {j} does not vanish")
            }
            Error::SingularSystem => write!(f, "pairing matrix is singular"),
            Error::InconsistentSystem => write!(f, "overdetermined pairing system is inconsistent"),
            Error::AllZero => write!(f, "every generator is zero"),
            Error::WrongArity { endpoints } => {
                write!(f, "expected a 4-endpoint tangle, got {endpoints} endpoints")
            }
            Error::MultiComponent => write!(f, "partial closure has more than one component"),
            Error::TooFewStrands { strands } => {
                write!(f, "search needs at least 3 strands, got {strands}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
