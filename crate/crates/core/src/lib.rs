//! Positional number systems on `Zⁿ` whose base is an integer dilation
//! matrix.
//!
//! The crate builds the canonical digit set `D = A([-1/2, 1/2)ⁿ) ∩ Zⁿ`,
//! runs the matrix Euclidean algorithm `x = A·y + r`, finds every nonzero
//! cycle of that algorithm (the pseudodigits), and decides sufficient
//! conditions under which every integer vector has a finite expansion.
//!
//! All number-theoretic decisions use exact integer/rational arithmetic.
//! Matrices are generic over the scalar ([`Matrix<T>`]); the aliases below
//! name the instantiations used throughout.

pub mod criteria;
pub mod digits;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod norms;
pub mod points;
pub mod representation;
pub mod scalar;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use criteria::{
    check_conditions, cross_validate, find_power, ConditionReport, Consistency, PowerResult,
    Threshold, Verdict,
};
pub use digits::{digit_set, BoxConvention, DigitSet, ResidueLabel};
pub use error::{Error, Result};
pub use lattice::{transport, LatticeContext};
pub use linalg::{
    det, inverse, mu_exceeds, sigma_bounds, smith_normal_form, spectral_certificate,
    verify_dilation, Interval, Matrix, SmithForm, SpectralCert,
};
pub use norms::{bounds_report, norm_prime_normal, BoundsReport, NormEvaluator};
pub use representation::{
    atlas, classify, evaluate, orbit, pseudodigits, represent, yields_radix, Atlas, Kind,
    OrbitOutcome, OrbitTrace, PseudodigitTable, Representation,
};
pub use scalar::{Exact, Field, GaussianRational, Scalar};

/// Exact integer vector.
pub type IntVector = Vec<BigInt>;
/// Exact rational vector.
pub type RatVector = Vec<BigRational>;

/// Exact integer matrix.
pub type IntMatrix = Matrix<BigInt>;
/// Exact rational matrix.
pub type RatMatrix = Matrix<BigRational>;
/// Gaussian-rational matrix (complex lattice bases).
pub type GaussMatrix = Matrix<GaussianRational>;
/// Double-precision matrix for diagnostics.
pub type Matrix64 = Matrix<f64>;
/// Single-precision matrix for diagnostics.
pub type Matrix32 = Matrix<f32>;

/// Lattice whose basis has rational entries.
pub type RealLattice = LatticeContext<BigRational>;
/// Lattice in `Cⁿ` whose basis has Gaussian-rational entries.
pub type ComplexLattice = LatticeContext<GaussianRational>;
