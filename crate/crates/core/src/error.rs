//! Error type shared by every evaluation routine in the crate.

use thiserror::Error;

/// Everything a series evaluation or a catalog constructor can reject.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    /// A series hit its term budget before the tail bound was met.
    #[error("series did not converge within {max_terms} terms")]
    NonConvergent { max_terms: usize },

    /// The evaluation point is closer to a pole locus than the guard allows.
    #[error("point within {dist:.3e} of a pole (guard {guard:.3e})")]
    PoleProximity { dist: f64, guard: f64 },

    /// The point is not in the upper half-plane domain X.
    #[error("Im tau must be strictly positive")]
    UpperHalfPlane,

    /// Gram matrix of a lattice is not positive definite.
    #[error("gram matrix is not positive definite")]
    InvalidLattice,

    /// A minus/shifted theta variant was requested for a lattice with no odd vectors.
    #[error("theta variant undefined: every lattice vector has even norm")]
    InvalidVariant,

    /// An index lies outside its admissible range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// Family B prefactor indices must satisfy a == b mod 2.
    #[error("parity violation: family B requires a - b even (got a={a}, b={b})")]
    ParityViolation { a: String, b: String },

    /// The (p, q) pair of an index-set decomposition is not coprime.
    #[error("gcd({q}, {p}) != 1")]
    NotCoprime { q: i64, p: i64 },

    /// Family parameters violate a gcd or range constraint.
    #[error("constraint violation: {0}")]
    ConstraintViolation(String),

    /// Sector labels outside the family's admissible set.
    #[error("invalid sector: {0}")]
    InvalidSector(String),

    /// The Hamiltonian reduction kills this module; there is no character.
    #[error("module reduced to zero (k0 = 0 vanishing criterion)")]
    ReducedToZero,

    /// The function is real-analytic and has no q-expansion.
    #[error("not q-expandable: {0}")]
    NotExpandable(String),

    /// Rejection sampling could not find a guarded point.
    #[error("rejection sampling exhausted after {0} attempts")]
    ExhaustedRejection(usize),

    /// Truncation policy fields outside their documented ranges.
    #[error("invalid truncation policy: {0}")]
    InvalidTruncation(String),

    /// Unknown function name or malformed parameter in a dispatch table.
    #[error("bad request: {0}")]
    BadRequest(String),
}

/// Crate-wide result alias.
pub type EvalResult<T> = Result<T, EvalError>;
