//! Certified spectral facts: expandingness and singular-value bounds.
//!
//! Every decision here is made in exact rational arithmetic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::poly::RatPoly;
use crate::linalg::sqrt::{sqrt_upper, Interval};
use crate::linalg::{IntMatrix, Matrix, RatMatrix};
use crate::scalar::Field;

/// Outcome of the exact dilation test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DilationCheck {
    /// Every eigenvalue has modulus strictly greater than one.
    pub is_dilation: bool,
    /// Some eigenvalue has modulus exactly one.
    pub unit_circle_root: bool,
}

/// Decides whether every eigenvalue of `a` satisfies `|λ| > 1`.
///
/// The roots of the reversed characteristic polynomial are the reciprocals
/// `1/λ`, so the question becomes whether they all lie in the open unit
/// disc, which the Schur–Cohn recursion answers exactly.
pub fn dilation_check(a: &IntMatrix) -> DilationCheck {
    let p = RatPoly::from_integers(&a.charpoly());
    let reversed = p.reversed();
    if p.coeff(0).is_zero() {
        // Singular: eigenvalue zero, reversed polynomial drops degree.
        return DilationCheck { is_dilation: false, unit_circle_root: false };
    }
    if reversed.all_roots_inside_unit_disc() {
        DilationCheck { is_dilation: true, unit_circle_root: false }
    } else {
        DilationCheck { is_dilation: false, unit_circle_root: p.has_root_on_unit_circle() }
    }
}

pub fn verify_dilation(a: &IntMatrix) -> bool {
    dilation_check(a).is_dilation
}

/// Like [`dilation_check`] but returns a typed error for non-dilations.
pub fn require_dilation(a: &IntMatrix) -> Result<()> {
    if a.det().is_zero() {
        return Err(Error::Singular);
    }
    let check = dilation_check(a);
    if check.is_dilation {
        Ok(())
    } else {
        Err(Error::NotDilation { unit_circle_root: check.unit_circle_root })
    }
}

/// Positive definiteness of a symmetric matrix by Sylvester's criterion.
///
/// Leading principal minors are positive exactly when Gaussian elimination
/// without pivoting produces only positive pivots (the k-th pivot is the
/// ratio of consecutive minors).
pub fn is_positive_definite<T: Field + PartialOrd>(m: &Matrix<T>) -> bool {
    let n = m.dim();
    let mut a: Vec<T> = m.entries().to_vec();
    for k in 0..n {
        let pivot = a[k * n + k].clone();
        if pivot <= T::zero() {
            return false;
        }
        for i in k + 1..n {
            let f = a[i * n + k].clone() / pivot.clone();
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                a[i * n + j] = a[i * n + j].clone() - f.clone() * a[k * n + j].clone();
            }
        }
    }
    true
}

/// `AᵀA` as a rational matrix.
pub fn gram(a: &IntMatrix) -> RatMatrix {
    a.transpose().mul(a).to_rational()
}

/// Exact decision of `μ² > t²`, where `μ` is the smallest singular value.
pub fn mu_exceeds(a: &IntMatrix, t_sq: &BigRational) -> bool {
    let g = gram(a);
    let shifted = g.sub(&Matrix::scalar(a.dim(), t_sq.clone()));
    is_positive_definite(&shifted)
}

/// Certified `(σ_min lower bound, σ_max upper bound)` from Frobenius norms.
pub fn sigma_bounds(a: &IntMatrix) -> Result<(BigRational, BigRational)> {
    let inv = a.rational_inverse()?;
    let max_ub = sqrt_upper(&BigRational::from_integer(a.frobenius_sq()));
    let min_lb = BigRational::one() / sqrt_upper(&inv.frobenius_sq());
    Ok((min_lb, max_ub))
}

/// Upper bound on `σ_min` from the shortest row or column of `a`.
pub fn sigma_min_upper(a: &IntMatrix) -> BigRational {
    let n = a.dim();
    let shortest = (0..n)
        .flat_map(|j| {
            let col: BigInt = a.column(j).iter().map(|x| x * x).sum();
            let row: BigInt = a.row(j).iter().map(|x| x * x).sum();
            [col, row]
        })
        .min()
        .expect("positive dimension");
    sqrt_upper(&BigRational::from_integer(shortest))
}

/// Enclosure of the smallest eigenvalue of a symmetric positive
/// semidefinite rational matrix, by bisection on exact definiteness tests.
pub fn lambda_min_enclosure(sym: &RatMatrix, bits: u32) -> Interval {
    let n = sym.dim();
    let mut lo = BigRational::zero();
    // λ_min ≤ trace/n
    let mut hi = sym.trace() / BigRational::from_integer(BigInt::from(n)) + BigRational::one();
    let width = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let shifted_pd = |t: &BigRational| is_positive_definite(&sym.sub(&Matrix::scalar(n, t.clone())));
    if !shifted_pd(&lo) {
        return Interval { lo: lo.clone(), hi: lo };
    }
    while &hi - &lo > width {
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        if shifted_pd(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Interval { lo, hi }
}

/// Enclosure of the largest eigenvalue of a symmetric rational matrix.
pub fn lambda_max_enclosure(sym: &RatMatrix, bits: u32) -> Interval {
    let n = sym.dim();
    let negated = sym.scale(&-BigRational::one());
    // λ_max(S) = −λ_min(−S); shift −S by the Frobenius bound to stay PSD.
    let shift = sym.frobenius_sq() + BigRational::one();
    let shifted = negated.add(&Matrix::scalar(n, shift.clone()));
    let inner = lambda_min_enclosure(&shifted, bits);
    Interval { lo: &shift - inner.hi, hi: shift - inner.lo }
}

/// Certified spectral summary of an integer matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralCert {
    pub q_abs_det: BigInt,
    pub is_dilation: bool,
    pub unit_circle_root: bool,
    pub sigma_min_lb: BigRational,
    pub sigma_min_ub: BigRational,
    pub sigma_max_ub: BigRational,
    /// `t² ↦ (μ² > t²)` for the thresholds `t² = 4` and `t² = 4n`.
    pub mu_gt_threshold_results: BTreeMap<BigRational, bool>,
}

pub fn spectral_certificate(a: &IntMatrix) -> Result<SpectralCert> {
    let det = a.det();
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let check = dilation_check(a);
    let (sigma_min_lb, sigma_max_ub) = sigma_bounds(a)?;
    let n = BigInt::from(a.dim());
    let thresholds = [BigRational::from_integer(BigInt::from(4)), BigRational::from_integer(4 * n)];
    let mu_gt_threshold_results = thresholds
        .into_iter()
        .map(|t| {
            let r = mu_exceeds(a, &t);
            (t, r)
        })
        .collect();
    Ok(SpectralCert {
        q_abs_det: det.abs(),
        is_dilation: check.is_dilation,
        unit_circle_root: check.unit_circle_root,
        sigma_min_lb,
        sigma_min_ub: sigma_min_upper(a),
        sigma_max_ub,
        mu_gt_threshold_results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn dilation_examples() {
        assert!(verify_dilation(&m(&[&[2]])));
        assert!(verify_dilation(&m(&[&[-2]])));
        assert!(verify_dilation(&m(&[&[1, 1], &[-1, 1]])));
        let lw = m(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, -1, 2], &[-1, 0, -1, 1]]);
        assert!(verify_dilation(&lw));
        let id = dilation_check(&IntMatrix::identity(2));
        assert!(!id.is_dilation && id.unit_circle_root);
        let off = dilation_check(&m(&[&[2, -2], &[-1, 2]]));
        assert!(!off.is_dilation && !off.unit_circle_root);
        // rotation by 90° has eigenvalues ±i
        let rot = dilation_check(&m(&[&[0, -1], &[1, 0]]));
        assert!(!rot.is_dilation && rot.unit_circle_root);
    }

    #[test]
    fn require_dilation_errors() {
        assert!(matches!(require_dilation(&m(&[&[1, 2], &[2, 4]])), Err(Error::Singular)));
        assert!(matches!(
            require_dilation(&IntMatrix::identity(3)),
            Err(Error::NotDilation { unit_circle_root: true })
        ));
    }

    #[test]
    fn mu_threshold_examples() {
        assert!(mu_exceeds(&IntMatrix::scalar(2, BigInt::from(3)), &rat(4, 1)));
        assert!(!mu_exceeds(&m(&[&[1, 1], &[-1, 1]]), &rat(4, 1)));
        assert!(!mu_exceeds(&IntMatrix::scalar(2, BigInt::from(2)), &rat(4, 1)));
        assert!(mu_exceeds(&IntMatrix::scalar(2, BigInt::from(2)), &rat(399, 100)));
    }

    #[test]
    fn sigma_bound_examples() {
        let (lb, ub) = sigma_bounds(&m(&[&[2]])).unwrap();
        assert_eq!((lb, ub), (rat(2, 1), rat(2, 1)));
        let (lb, ub) = sigma_bounds(&m(&[&[0, 2], &[-2, 0]])).unwrap();
        assert!(lb <= rat(2, 1) && rat(2, 1) <= ub);
        // lb is the reciprocal of an upper bound on √(1/2), so lb ≤ √2
        assert!(&lb * &lb <= rat(2, 1) && &lb * &lb > rat(199, 100));
        let (lb, ub) = sigma_bounds(&m(&[&[3, 0], &[0, 5]])).unwrap();
        assert!(lb <= rat(3, 1) && ub >= rat(5, 1));
    }

    #[test]
    fn eigen_enclosures() {
        let s = m(&[&[2, 1], &[1, 2]]).to_rational();
        let lo = lambda_min_enclosure(&s, 30);
        assert!(lo.contains(&rat(1, 1)) || (lo.lo <= rat(1, 1) && rat(1, 1) <= lo.hi));
        let hi = lambda_max_enclosure(&s, 30);
        assert!(hi.lo <= rat(3, 1) && rat(3, 1) <= hi.hi);
    }

    #[test]
    fn certificate_fields() {
        let c = spectral_certificate(&m(&[&[1, 1], &[-1, 1]])).unwrap();
        assert_eq!(c.q_abs_det, BigInt::from(2));
        assert!(c.is_dilation);
        assert!(c.sigma_min_lb <= c.sigma_min_ub);
        assert_eq!(c.mu_gt_threshold_results.get(&rat(4, 1)), Some(&false));
        assert_eq!(c.mu_gt_threshold_results.get(&rat(8, 1)), Some(&false));
    }
}
