//! Exact integer and rational matrix arithmetic plus the certified
//! spectral facts consumed by the rest of the crate.

mod matrix;
pub mod poly;
mod smith;
pub mod spectral;
pub mod sqrt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;

pub use matrix::Matrix;
pub use smith::{smith_normal_form, SmithForm};
pub use spectral::{
    dilation_check, mu_exceeds, require_dilation, sigma_bounds, spectral_certificate,
    verify_dilation, DilationCheck, SpectralCert,
};
pub use sqrt::Interval;

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

/// Exact determinant.
pub fn det(a: &IntMatrix) -> BigInt {
    a.det()
}

/// Exact rational inverse; errors on a singular matrix.
pub fn inverse(a: &IntMatrix) -> Result<RatMatrix> {
    a.rational_inverse()
}
