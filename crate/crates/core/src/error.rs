use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u32),
    #[error("polynomial {0:?} is not monic of the requested degree")]
    BadPolynomial(Vec<u32>),
    #[error("polynomial {0:?} is reducible")]
    ReduciblePolynomial(Vec<u32>),
    #[error("field of size {p}^{degree} exceeds the supported size 2^20")]
    FieldTooLarge { p: u32, degree: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element index {0} is outside the field")]
    ElementOutOfRange(u32),

    #[error("cover relations contain a cycle through element {}", .0 + 1)]
    CycleDetected(usize),
    #[error("index {index} out of range for ground set of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("posets on more than 64 elements are not supported (got {0})")]
    PosetTooLarge(usize),

    #[error("generators have mixed lengths")]
    MixedLengths,
    #[error("ambient space has length zero")]
    EmptyAmbient,
    #[error("vector length {found} does not match expected length {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("code has {p}^{log_p_size} words, above the enumeration cap of {cap}")]
    CodeTooLarge { p: u32, log_p_size: u32, cap: u64 },
    #[error("the code has a single codeword; its minimum distance is undefined")]
    TrivialCode,
    #[error("generator rows are dependent over the base field")]
    DependentRows,
    #[error("Reed-Solomon order {k} out of range 0..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("the smaller code is not contained in the larger one")]
    NotNested,
    #[error("the two codes are equal, so their difference is empty")]
    EqualCodes,
    #[error("codes live in different ambient spaces")]
    AmbientMismatch,
    #[error("code linearity does not match: {0}")]
    LinearityMismatch(&'static str),

    #[error("trace-alternating quotient left the base field (arithmetic bug)")]
    QuotientNotInBaseField,
    #[error("form {form} cannot be used with this ambient space: {reason}")]
    FormAmbientMismatch {
        form: &'static str,
        reason: &'static str,
    },
    #[error("code is not self-orthogonal under the trace-symplectic form")]
    NotSelfOrthogonal,

    #[error("K must exceed 1 for this check")]
    KNotAboveOne,
    #[error("stabilizer code is not P-pure")]
    NotPure,
    #[error("no poset found after {tried} candidates")]
    SearchExhausted { tried: usize },

    #[error("Hilbert space dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
