use core::fmt;

/// Errors raised by the exact-arithmetic and symmetry routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands belong to different number fields.
    FieldMismatch,
    DivisionByZero,
    /// A zero divisor turned up; the declared minimal polynomial factors.
    ReduciblePolynomial,
    /// The minimal polynomial is malformed (empty, constant or non-monic).
    InvalidPolynomial(&'static str),
    /// The root interval does not isolate exactly one simple real root.
    NotIsolating,
    NotSquarefree,
    /// The minimal polynomial of a degree >= 2 field has a rational root.
    RationalRoot,
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// The frequency coefficients satisfy a nontrivial rational relation.
    DependentFrequencies,
    NotAnEigenvector,
    NotUnimodular,
    NoIntegerSolution,
    ModelTooLarge {
        size: usize,
        cap: usize,
    },
    NotClosed,
    NotQuadratic,
    NotRealQuadratic,
    DimensionUnsupported(usize),
    RelationViolated,
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch => f.write_str("operands live in different number fields"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::ReduciblePolynomial => {
                f.write_str("minimal polynomial is reducible (zero divisor found)")
            }
            Error::InvalidPolynomial(why) => write!(f, "invalid minimal polynomial: {why}"),
            Error::NotIsolating => {
                f.write_str("root interval does not isolate exactly one real root")
            }
            Error::NotSquarefree => f.write_str("minimal polynomial is not squarefree"),
            Error::RationalRoot => f.write_str("minimal polynomial has a rational root"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::DependentFrequencies => {
                f.write_str("frequencies are not rationally independent")
            }
            Error::NotAnEigenvector => {
                f.write_str("frequency vector is not an eigenvector of the matrix")
            }
            Error::NotUnimodular => f.write_str("matrix is not unimodular"),
            Error::NoIntegerSolution => f.write_str("no integer matrix realizes the multiplier"),
            Error::ModelTooLarge { size, cap } => {
                write!(
                    f,
                    "torsion model has at least {size} elements, cap is {cap}"
                )
            }
            Error::NotClosed => f.write_str("torsion model is not closed under composition"),
            Error::NotQuadratic => f.write_str("field is not quadratic"),
            Error::NotRealQuadratic => f.write_str("field is not real quadratic"),
            Error::DimensionUnsupported(n) => write!(f, "dimension {n} is not supported here"),
            Error::RelationViolated => {
                f.write_str("last matrix column violates the characteristic relation")
            }
            Error::InvalidArgument(why) => write!(f, "invalid argument: {why}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
