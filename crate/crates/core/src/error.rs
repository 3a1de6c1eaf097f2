use thiserror::Error;

/// Coarse error classes, used by the CLI to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Precondition,
    Inconsistency,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed braid: {0}")]
    MalformedBraid(String),
    #[error("generator {letter} out of range for {strands} strands")]
    GeneratorOutOfRange { letter: i32, strands: usize },
    #[error("empty selection")]
    EmptySelection,
    #[error("unknown component {0}")]
    UnknownComponent(usize),
    #[error("odd mixed crossing count between components {0} and {1}")]
    OddMixedCount(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("malformed PD: {0}")]
    MalformedPd(String),
    #[error("arc {arc} used {count} times (expected 2)")]
    ArcDegree { arc: u32, count: usize },
    #[error("orientation inconsistent: {0}")]
    OrientationInconsistent(String),
    #[error("upper bound 2nu <= {upper2} is below lower bound 2nu >= {lower2} on a non-homogeneous diagram")]
    FormulaInconsistency { lower2: i64, upper2: i64 },
    #[error("bennequin chain violated: {0}")]
    ChainViolation(String),
    #[error("braid is not pure")]
    NotPure,
    #[error("braid is not alternating")]
    NotAlternating,
    #[error("diagram is not positive")]
    NotPositiveDiagram,
    #[error("link is not positive: {0}")]
    NotPositive(String),
    #[error("odd numerator {0} in unlinking formula")]
    Parity(i64),
    #[error("missing input: {0}")]
    MissingInput(String),
    #[error("schema error on line {line}: {msg}")]
    Schema { line: usize, msg: String },
    #[error("duplicate catalog entry {0}")]
    DuplicateName(String),
    #[error("unknown example {0}")]
    UnknownExample(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            MalformedBraid(_)
            | GeneratorOutOfRange { .. }
            | MalformedPd(_)
            | ArcDegree { .. }
            | OrientationInconsistent(_)
            | Schema { .. }
            | DuplicateName(_)
            | Io(_) => ErrorKind::Parse,
            FormulaInconsistency { .. } | ChainViolation(_) => ErrorKind::Inconsistency,
            _ => ErrorKind::Precondition,
        }
    }

    /// Short machine-readable tag, e.g. `malformed-braid`.
    pub fn tag(&self) -> &'static str {
        use Error::*;
        match self {
            MalformedBraid(_) => "malformed-braid",
            GeneratorOutOfRange { .. } => "generator-out-of-range",
            EmptySelection => "empty-selection",
            UnknownComponent(_) => "unknown-component",
            OddMixedCount(..) => "odd-mixed-count",
            InvalidPartition(_) => "invalid-partition",
            MalformedPd(_) => "malformed-pd",
            ArcDegree { .. } => "arc-degree",
            OrientationInconsistent(_) => "orientation-inconsistent",
            FormulaInconsistency { .. } => "formula-inconsistency",
            ChainViolation(_) => "chain-violation",
            NotPure => "not-pure",
            NotAlternating => "not-alternating",
            NotPositiveDiagram => "not-positive-diagram",
            NotPositive(_) => "not-positive",
            Parity(_) => "parity",
            MissingInput(_) => "missing-input",
            Schema { .. } => "schema",
            DuplicateName(_) => "duplicate-name",
            UnknownExample(_) => "unknown-example",
            BadParameter(_) => "bad-parameter",
            Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
