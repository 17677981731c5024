//! Number systems on a general lattice `Γ = M·Zⁿ`, reduced to `Zⁿ` by
//! working in coefficient coordinates.
//!
//! A map `A` of the ambient space preserving `Γ` acts on coefficient
//! vectors `z` (with `x = M z`) as `B = M⁻¹AM`, since `A(Mz) = M(Bz)`.
//! Everything about digits, cycles and representations of `Γ` is the image
//! under `M` of the same objects for `B` on `Zⁿ`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::digits::{BoxConvention, DigitSet};
use crate::error::{Error, Result};
use crate::linalg::{mu_exceeds, IntMatrix, Matrix};
use crate::representation::{PseudodigitTable, Representation};
use crate::scalar::{norm_sq, Exact, Field};
use crate::IntVector;

/// `Γ = M·Zⁿ` together with a `Γ`-preserving linear map.
#[derive(Clone, Debug)]
pub struct LatticeContext<T> {
    basis: Matrix<T>,
    basis_inv: Matrix<T>,
    ambient: Matrix<T>,
    transported: IntMatrix,
}

/// Builds the coefficient-space matrix `B = M⁻¹·A·M`.
pub fn transport<T: Field + Exact>(basis: &Matrix<T>, ambient: &Matrix<T>) -> Result<LatticeContext<T>> {
    if basis.dim() != ambient.dim() {
        return Err(Error::DimensionMismatch { expected: basis.dim(), found: ambient.dim() });
    }
    let basis_inv = basis.inverse()?;
    let conj = basis_inv.mul(ambient).mul(basis);
    let transported = conj.to_integer_matrix().ok_or(Error::NonIntegralTransport)?;
    Ok(LatticeContext { basis: basis.clone(), basis_inv, ambient: ambient.clone(), transported })
}

impl<T: Field + Exact> LatticeContext<T> {
    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn ambient(&self) -> &Matrix<T> {
        &self.ambient
    }

    /// `B`, the map on coefficient vectors.
    pub fn transported(&self) -> &IntMatrix {
        &self.transported
    }

    /// Coefficients `z` with `x = M z`; fails when `x ∉ Γ`.
    pub fn to_coefficients(&self, x: &[T]) -> Result<IntVector> {
        if x.len() != self.basis.dim() {
            return Err(Error::DimensionMismatch { expected: self.basis.dim(), found: x.len() });
        }
        self.basis_inv
            .mul_vec(x)
            .iter()
            .map(Exact::to_integer)
            .collect::<Option<_>>()
            .ok_or(Error::NotInLattice)
    }

    /// `M z`
    pub fn to_ambient(&self, z: &[BigInt]) -> Vec<T> {
        let zt: Vec<T> = z.iter().map(T::from_integer).collect();
        self.basis.mul_vec(&zt)
    }

    /// `‖x‖_{l²(Γ)}²`, the squared length of the coefficient vector.
    pub fn l2_gamma_sq(&self, x: &[T]) -> Result<BigInt> {
        Ok(norm_sq(&self.to_coefficients(x)?))
    }

    /// Digit set of `B` on `Zⁿ`.
    pub fn digit_set(&self, convention: BoxConvention) -> Result<DigitSet> {
        DigitSet::new(&self.transported, convention)
    }

    /// `Γ`-digits: `M·d` for each digit `d` of `B`. They form
    /// `A(F_Γ) ∩ Γ` with `F_Γ = M·[−1/2, 1/2)ⁿ`.
    pub fn gamma_digits(&self, ds: &DigitSet) -> Vec<Vec<T>> {
        ds.digits().iter().map(|d| self.to_ambient(d)).collect()
    }

    /// `Γ`-pseudodigits: `M·s` for each `s ∈ S`.
    pub fn gamma_pseudodigits(&self, table: &PseudodigitTable) -> Vec<Vec<T>> {
        table.s().iter().map(|s| self.to_ambient(s)).collect()
    }

    /// Exact test of `μ′² > t²`; `μ′` equals the smallest singular value of
    /// `B` because the coefficient map is an isometry for `‖·‖_{l²(Γ)}`.
    pub fn mu_prime_exceeds(&self, t_sq: &BigRational) -> bool {
        mu_exceeds(&self.transported, t_sq)
    }

    /// Membership in `F_Γ = M·F` (or `M·U`), for real points.
    pub fn in_fundamental_domain(&self, x: &[T], convention: BoxConvention) -> bool {
        let coords: Option<Vec<BigRational>> =
            self.basis_inv.mul_vec(x).iter().map(Exact::to_rational).collect();
        coords.is_some_and(|c| convention.contains(&c))
    }

    /// Evaluates a coefficient-space representation directly in ambient
    /// coordinates, `Σ Aʲ(M dⱼ)` (plus `A^N (M s)`).
    pub fn evaluate_ambient(&self, rep: &Representation) -> Vec<T> {
        let step = |acc: Vec<T>, d: &IntVector| -> Vec<T> {
            let md = self.to_ambient(d);
            self.ambient.mul_vec(&acc).into_iter().zip(md).map(|(u, v)| u + v).collect()
        };
        match rep {
            Representation::Radix { digits } => {
                let (top, rest) = digits.split_last().expect("radix representation has a digit");
                rest.iter().rev().fold(self.to_ambient(top), step)
            }
            Representation::Pseudo { digits, pseudodigit } => {
                digits.iter().rev().fold(self.to_ambient(pseudodigit), step)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int_vector, rat, GaussianRational};
    use num_complex::Complex;

    fn q(rows: &[&[i64]]) -> Matrix<BigRational> {
        IntMatrix::from_i64_rows(rows).unwrap().to_rational()
    }

    #[test]
    fn identity_basis_is_trivial() {
        let a = q(&[&[1, 1], &[-1, 1]]);
        let ctx = transport(&Matrix::identity(2), &a).unwrap();
        assert_eq!(ctx.transported(), &IntMatrix::from_i64_rows(&[&[1, 1], &[-1, 1]]).unwrap());
    }

    #[test]
    fn scalar_basis_commutes() {
        let a = q(&[&[1, 1], &[-1, 1]]);
        let ctx = transport(&Matrix::scalar(2, rat(2, 1)), &a).unwrap();
        assert_eq!(ctx.transported(), &IntMatrix::from_i64_rows(&[&[1, 1], &[-1, 1]]).unwrap());
    }

    #[test]
    fn sheared_basis_conjugates_back() {
        let m = q(&[&[1, 1], &[0, 1]]);
        let a = m.mul(&Matrix::scalar(2, rat(3, 1))).mul(&m.inverse().unwrap());
        let ctx = transport(&m, &a).unwrap();
        assert_eq!(ctx.transported(), &IntMatrix::scalar(2, BigInt::from(3)));
        assert!(ctx.mu_prime_exceeds(&rat(4, 1)));
    }

    #[test]
    fn non_preserving_map_rejected() {
        let m = q(&[&[2, 0], &[0, 1]]);
        let a = q(&[&[0, 1], &[1, 0]]);
        // M⁻¹AM = [[0, 1/2], [2, 0]]
        assert!(matches!(transport(&m, &a), Err(Error::NonIntegralTransport)));
    }

    #[test]
    fn coefficients_and_membership() {
        let m = Matrix::from_rows(vec![vec![rat(1, 2), rat(0, 1)], vec![rat(0, 1), rat(3, 1)]]).unwrap();
        let ctx = transport(&m, &m.scale(&rat(2, 1)).mul(&m.inverse().unwrap()).mul(&m)).unwrap();
        assert_eq!(ctx.to_coefficients(&[rat(1, 1), rat(6, 1)]).unwrap(), int_vector(&[2, 2]));
        assert!(matches!(ctx.to_coefficients(&[rat(1, 4), rat(0, 1)]), Err(Error::NotInLattice)));
        assert!(ctx.in_fundamental_domain(&[rat(-1, 4), rat(3, 2) - rat(1, 1)], BoxConvention::F));
        assert!(!ctx.in_fundamental_domain(&[rat(1, 4), rat(0, 1)], BoxConvention::F));
    }

    #[test]
    fn gaussian_lattice() {
        // Γ = Z[i]·(1 + i) ⊕ ..., here M = (1 + i)·I and A = [[1, 1], [−1, 1]].
        let one_i = GaussianRational::new(rat(1, 1), rat(1, 1));
        let m = Matrix::scalar(2, one_i);
        let a = IntMatrix::from_i64_rows(&[&[1, 1], &[-1, 1]]).unwrap().map(|x| {
            Complex::new(BigRational::from_integer(x.clone()), rat(0, 1))
        });
        let ctx = transport(&m, &a).unwrap();
        assert_eq!(ctx.transported(), &IntMatrix::from_i64_rows(&[&[1, 1], &[-1, 1]]).unwrap());
        let x = ctx.to_ambient(&int_vector(&[1, -2]));
        assert_eq!(ctx.to_coefficients(&x).unwrap(), int_vector(&[1, -2]));
    }
}
