//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // arith
    #[error("division by zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials is undefined")]
    GcdBothZero,
    #[error("resultant requires nonzero inputs")]
    ResultantZeroInput,
    #[error("cannot factor the zero polynomial")]
    FactorZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("Hensel seed factors are not coprime modulo {0}")]
    SeedsNotCoprime(u64),
    #[error("Hensel seed product does not match the input modulo {0}")]
    SeedProductMismatch(u64),
    #[error("leading coefficient not invertible modulo {0}")]
    LeadingCoeffNotInvertible(u64),

    // numfield / factor
    #[error("not a field: modulus factors over the rationals")]
    ReducibleModulus,
    #[error("modulus must be monic")]
    NonMonicModulus,
    #[error("inverse of zero in a number field")]
    ZeroInverse,
    #[error("not an automorphism: image is not a root of the modulus")]
    NotAnAutomorphism,
    #[error("automorphism order {got} does not match field degree {want}")]
    AutomorphismOrderMismatch { got: usize, want: usize },
    #[error("norm of a field element left the base field (reduction bug)")]
    NormNotRational,

    // cycalg
    #[error("degree must be an odd prime, got {0}")]
    DegreeNotOddPrime(usize),
    #[error("beta must be nonzero")]
    ZeroBeta,
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("element is not invertible (reduced norm is zero)")]
    NotInvertible,
    #[error("elements are not conjugate: the intertwining system has no nonzero solution")]
    NotConjugate,
    #[error("norm precondition fails: N(t) must equal 1/beta")]
    NormPrecondition,
    #[error("zero-divisor witness degenerate: a factor vanished")]
    WitnessDegenerate,
    #[error("reduced norm or trace left the base field (reduction bug)")]
    ReducedNormNotRational,

    // amitsur
    #[error("division not certified: no witness prime accepted")]
    DivisionNotCertified,
    #[error("F[j] is not a field: s^p - beta factors over the rationals")]
    FjNotAField,
    #[error("internal invariant violated: {0}")]
    Internal(String),

    // parsing
    #[error("parse error: {0}")]
    Parse(String),
    #[error("config error: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
