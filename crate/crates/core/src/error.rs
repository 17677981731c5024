use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix dimension must be positive")]
    EmptyMatrix,
    #[error("matrix is not square: {rows} rows but a row or buffer of length {len}")]
    NotSquare { rows: usize, len: usize },
    #[error("matrix is singular (det = 0)")]
    Singular,
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not a dilation{}", if *.unit_circle_root { " (an eigenvalue has modulus exactly 1)" } else { "" })]
    NotDilation { unit_circle_root: bool },
    #[error("digit enumeration found {found} residues, expected |det A| = {expected}")]
    ResidueSystem { found: usize, expected: BigInt },
    #[error("orbit did not terminate or cycle within {0} steps")]
    StepBudget(u64),
    #[error("matrix is not normal (AᵀA ≠ AAᵀ)")]
    NotNormal,
    #[error("vector {0:?} is not a digit")]
    DigitNotInSet(Vec<BigInt>),
    #[error("orbit entered a cycle not present in the pseudodigit table (representative {0:?})")]
    UnknownCycle(Vec<BigInt>),
    #[error("no power A^β with β ≤ {beta_max} passes the threshold")]
    PowerNotFound { beta_max: u32, trace: Vec<PowerTraceEntry> },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("basis change does not map the lattice into itself (M⁻¹AM is not integral)")]
    NonIntegralTransport,
    #[error("point is not in the lattice")]
    NotInLattice,
}

/// One row of the diagnostic trace reported when no power qualifies.
#[derive(Debug, Clone)]
pub struct PowerTraceEntry {
    pub power: u32,
    pub sigma_min_lb: f64,
    pub sigma_min_ub: f64,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
