//! Canonical digit sets `D = A(F) ∩ Zⁿ` and the division step
//! `x = A·y + r`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{require_dilation, smith_normal_form, IntMatrix, RatMatrix, SmithForm};
use crate::points::BoxPoints;
use crate::IntVector;

/// Which half-open unit box the digits are drawn from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum BoxConvention {
    /// `F = [-1/2, 1/2)ⁿ`
    #[default]
    F,
    /// `U = (-1/2, 1/2]ⁿ`
    U,
}

impl BoxConvention {
    /// Membership of a single rational coordinate.
    pub fn contains_coord(self, c: &BigRational) -> bool {
        let half = BigRational::new(1.into(), 2.into());
        match self {
            BoxConvention::F => -&half <= *c && *c < half,
            BoxConvention::U => -&half < *c && *c <= half,
        }
    }

    pub fn contains(self, v: &[BigRational]) -> bool {
        v.iter().all(|c| self.contains_coord(c))
    }
}

/// Canonical name of a coset of `Zⁿ / A(Zⁿ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueLabel(pub Vec<BigInt>);

/// `(U·x) mod diag`, componentwise with representatives in `[0, sᵢ)`.
pub fn residue_label(snf: &SmithForm, x: &[BigInt]) -> ResidueLabel {
    let ux = snf.u.mul_vec(x);
    ResidueLabel(ux.iter().zip(&snf.diag).map(|(v, s)| v.mod_floor(s)).collect())
}

/// The digit set of a matrix, with everything needed to run the division
/// step quickly.
#[derive(Clone, Debug)]
pub struct DigitSet {
    a: IntMatrix,
    det: BigInt,
    adjugate: IntMatrix,
    inverse: RatMatrix,
    snf: SmithForm,
    digits: Vec<IntVector>,
    label_index: HashMap<ResidueLabel, usize>,
    convention: BoxConvention,
    canonical: bool,
}

/// Canonical digit set of a dilation matrix under the `F` convention.
pub fn digit_set(a: &IntMatrix) -> Result<DigitSet> {
    DigitSet::new(a, BoxConvention::F)
}

fn index_residues(snf: &SmithForm, digits: &[IntVector], det: &BigInt) -> Result<HashMap<ResidueLabel, usize>> {
    let q = det.abs();
    let mut label_index = HashMap::with_capacity(digits.len());
    for (i, d) in digits.iter().enumerate() {
        label_index.insert(residue_label(snf, d), i);
    }
    if BigInt::from(digits.len()) != q || label_index.len() != digits.len() {
        return Err(Error::ResidueSystem { found: label_index.len(), expected: q });
    }
    Ok(label_index)
}

impl DigitSet {
    /// Requires `a` to be a dilation matrix.
    pub fn new(a: &IntMatrix, convention: BoxConvention) -> Result<Self> {
        require_dilation(a)?;
        Self::new_unchecked(a, convention)
    }

    /// Builds the digit set of any nonsingular matrix, skipping the
    /// dilation check (exploratory use).
    pub fn new_unchecked(a: &IntMatrix, convention: BoxConvention) -> Result<Self> {
        let det = a.det();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let adjugate = a.adjugate()?;
        let inverse = a.rational_inverse()?;
        let snf = smith_normal_form(a)?;

        // A·[-1/2, 1/2]ⁿ has coordinate i ranging over ±(Σⱼ |aᵢⱼ|)/2.
        let ranges = a
            .rows()
            .map(|row| {
                let half_width: BigInt = row.iter().map(|x| x.abs()).sum();
                let h = BigRational::new(half_width, 2.into());
                (crate::scalar::ceil(&-h.clone()), crate::scalar::floor(&h))
            })
            .collect();
        let mut digits: Vec<IntVector> = BoxPoints::new(ranges)
            .filter(|d| {
                let pre: Vec<BigRational> = adjugate
                    .mul_vec(d)
                    .into_iter()
                    .map(|v| BigRational::new(v, det.clone()))
                    .collect();
                convention.contains(&pre)
            })
            .collect();
        digits.sort();

        let label_index = index_residues(&snf, &digits, &det)?;
        Ok(DigitSet { a: a.clone(), det, adjugate, inverse, snf, digits, label_index, convention, canonical: true })
    }

    /// Any complete residue system of `Zⁿ / A(Zⁿ)` as digits, for digit
    /// sets that are not of the form `A(box) ∩ Zⁿ`.
    pub fn from_digits(a: &IntMatrix, mut digits: Vec<IntVector>) -> Result<Self> {
        require_dilation(a)?;
        if let Some(d) = digits.iter().find(|d| d.len() != a.dim()) {
            return Err(Error::DimensionMismatch { expected: a.dim(), found: d.len() });
        }
        let det = a.det();
        let adjugate = a.adjugate()?;
        let inverse = a.rational_inverse()?;
        let snf = smith_normal_form(a)?;
        digits.sort();
        digits.dedup();
        let label_index = index_residues(&snf, &digits, &det)?;
        Ok(DigitSet {
            a: a.clone(),
            det,
            adjugate,
            inverse,
            snf,
            digits,
            label_index,
            convention: BoxConvention::F,
            canonical: false,
        })
    }

    /// `false` for digit sets given by [`from_digits`](Self::from_digits).
    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// `q = |det A|`.
    pub fn q(&self) -> usize {
        self.digits.len()
    }

    pub fn det(&self) -> &BigInt {
        &self.det
    }

    /// `adj A = det(A)·A⁻¹`
    pub fn adjugate(&self) -> &IntMatrix {
        &self.adjugate
    }

    pub fn inverse(&self) -> &RatMatrix {
        &self.inverse
    }

    pub fn smith(&self) -> &SmithForm {
        &self.snf
    }

    /// Digits in lexicographic order.
    pub fn digits(&self) -> &[IntVector] {
        &self.digits
    }

    pub fn convention(&self) -> BoxConvention {
        self.convention
    }

    pub fn label(&self, x: &[BigInt]) -> ResidueLabel {
        residue_label(&self.snf, x)
    }

    pub fn contains(&self, d: &[BigInt]) -> bool {
        self.label_index.get(&self.label(d)).is_some_and(|&i| self.digits[i] == d)
    }

    /// The unique digit congruent to `x`.
    pub fn digit_for(&self, x: &[BigInt]) -> &IntVector {
        let i = self.label_index[&self.label(x)];
        &self.digits[i]
    }

    /// One Euclidean step: returns `(y, r)` with `x = A·y + r`, `r ∈ D`.
    pub fn divide(&self, x: &[BigInt]) -> Result<(IntVector, IntVector)> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.len() });
        }
        let r = self.digit_for(x).clone();
        let diff: IntVector = x.iter().zip(&r).map(|(a, b)| a - b).collect();
        let y = self.exact_preimage(&diff).ok_or_else(|| {
            Error::Inconsistent(format!("A⁻¹(x − r) not integral for x = {x:?}"))
        })?;
        Ok((y, r))
    }

    /// Same result as [`divide`](Self::divide), found by trying every digit
    /// and testing integrality of `A⁻¹(x − r)`. Used as an oracle.
    pub fn divide_by_scan(&self, x: &[BigInt]) -> Option<(IntVector, IntVector)> {
        let mut found = None;
        for r in &self.digits {
            let diff: IntVector = x.iter().zip(r).map(|(a, b)| a - b).collect();
            if let Some(y) = self.exact_preimage(&diff) {
                if found.is_some() {
                    return None;
                }
                found = Some((y, r.clone()));
            }
        }
        found
    }

    /// `A⁻¹v` when it is integral.
    pub fn exact_preimage(&self, v: &[BigInt]) -> Option<IntVector> {
        self.adjugate
            .mul_vec(v)
            .into_iter()
            .map(|c| {
                let (q, r) = c.div_rem(&self.det);
                r.is_zero().then_some(q)
            })
            .collect()
    }

    /// `A·v + d`
    pub fn step_up(&self, v: &[BigInt], d: &[BigInt]) -> IntVector {
        self.a.mul_vec(v).into_iter().zip(d).map(|(a, b)| a + b).collect()
    }
}
