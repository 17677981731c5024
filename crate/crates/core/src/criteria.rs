//! Sufficient conditions for every integer vector to have a finite radix
//! expansion, and the smallest power of `A` that meets them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::digits::BoxConvention;
use crate::error::{Error, PowerTraceEntry, Result};
use crate::linalg::{dilation_check, mu_exceeds, spectral_certificate, IntMatrix, SpectralCert};
use crate::representation::{pseudodigits_for, yields_radix};
use crate::scalar::{rat_from_int, to_f64};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    GuaranteedRadix,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConditionReport {
    pub is_dilation: bool,
    /// `μ > 2√n`
    pub mu_gt_2sqrtn: bool,
    /// `μ > 2`
    pub mu_gt_2: bool,
    /// `C = {0, ±e₁, …, ±eₙ} ⊂ A·(−1/2, 1/2]ⁿ`. Reported only: it does not
    /// enter the verdict (see [`check_conditions`]).
    pub jeong_c_in_au: bool,
    /// `C ⊂ A·[−1/2, 1/2)ⁿ`
    pub jeong_c_in_af: bool,
    pub verdict: Verdict,
    pub certificate: SpectralCert,
}

/// `0, e₁, −e₁, …, eₙ, −eₙ`
fn unit_cross(n: usize) -> Vec<Vec<BigInt>> {
    let mut out = vec![vec![BigInt::zero(); n]];
    for i in 0..n {
        for s in [1, -1] {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::from(s);
            out.push(e);
        }
    }
    out
}

/// `C ⊂ A·box`, tested as `A⁻¹c ∈ box` with exact rationals.
pub fn cross_in_image(a: &IntMatrix, convention: BoxConvention) -> Result<bool> {
    let inv = a.rational_inverse()?;
    Ok(unit_cross(a.dim()).iter().all(|c| {
        let cr: Vec<BigRational> = c.iter().map(rat_from_int).collect();
        convention.contains(&inv.mul_vec(&cr))
    }))
}

pub fn check_conditions(a: &IntMatrix) -> Result<ConditionReport> {
    let certificate = spectral_certificate(a)?;
    let n = BigInt::from(a.dim());
    let four = BigRational::from_integer(BigInt::from(4));
    let mu_gt_2 = certificate.mu_gt_threshold_results[&four];
    let mu_gt_2sqrtn = certificate.mu_gt_threshold_results[&BigRational::from_integer(4 * n)];
    let jeong_c_in_au = cross_in_image(a, BoxConvention::U)?;
    let jeong_c_in_af = cross_in_image(a, BoxConvention::F)?;
    let is_dilation = certificate.is_dilation;
    // `C ⊂ AU` alone does not force a radix representation, even for
    // dilations: [[6, −4], [−4, 5]] satisfies it and has the fixed point
    // (1, 1) = A(1, 1) + (−1, 0). Only `μ > 2` decides the verdict.
    let verdict = if is_dilation && mu_gt_2 {
        Verdict::GuaranteedRadix
    } else {
        Verdict::Inconclusive
    };
    Ok(ConditionReport { is_dilation, mu_gt_2sqrtn, mu_gt_2, jeong_c_in_au, jeong_c_in_af, verdict, certificate })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Threshold {
    /// `μ > 2`
    MuGt2,
    /// `μ > 2√n`
    MuGt2SqrtN,
}

impl Threshold {
    /// `t²` for a matrix of dimension `n`.
    pub fn t_sq(self, n: usize) -> BigRational {
        match self {
            Threshold::MuGt2 => BigRational::from_integer(BigInt::from(4)),
            Threshold::MuGt2SqrtN => BigRational::from_integer(BigInt::from(4 * n)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PowerResult {
    pub beta: u32,
    pub threshold: Threshold,
    pub power: IntMatrix,
    pub certificate: SpectralCert,
}

pub const DEFAULT_BETA_MAX: u32 = 64;

/// Smallest `β ≤ beta_max` with `μ(A^β)² > t²`.
pub fn find_power(a: &IntMatrix, threshold: Threshold, beta_max: u32) -> Result<PowerResult> {
    crate::linalg::require_dilation(a)?;
    let t_sq = threshold.t_sq(a.dim());
    let mut power = IntMatrix::identity(a.dim());
    let mut trace = Vec::new();
    for beta in 1..=beta_max.max(1) {
        power = power.mul(a);
        if mu_exceeds(&power, &t_sq) {
            let certificate = spectral_certificate(&power)?;
            return Ok(PowerResult { beta, threshold, power, certificate });
        }
        let cert = spectral_certificate(&power)?;
        trace.push(PowerTraceEntry {
            power: beta,
            sigma_min_lb: to_f64(&cert.sigma_min_lb),
            sigma_min_ub: to_f64(&cert.sigma_min_ub),
        });
    }
    Err(Error::PowerNotFound { beta_max, trace })
}

/// Both sides of the implication "guaranteed radix ⟹ no pseudodigits".
#[derive(Clone, Debug, PartialEq)]
pub struct Consistency {
    pub verdict: Verdict,
    pub yields_radix: bool,
    pub pseudodigit_count: usize,
}

/// Checks that a guaranteed-radix verdict is borne out by the pseudodigit
/// search. An inconclusive verdict is consistent with either outcome.
pub fn cross_validate(a: &IntMatrix) -> Result<Consistency> {
    let report = check_conditions(a)?;
    if !dilation_check(a).is_dilation {
        return Err(Error::NotDilation { unit_circle_root: report.certificate.unit_circle_root });
    }
    let (_, _, table) = pseudodigits_for(a)?;
    let radix = yields_radix(&table);
    if report.verdict == Verdict::GuaranteedRadix && !radix {
        return Err(Error::Inconsistent(format!(
            "sufficient condition holds but {} pseudodigit(s) found, first {:?}",
            table.s().len(),
            table.s()[0]
        )));
    }
    Ok(Consistency { verdict: report.verdict, yields_radix: radix, pseudodigit_count: table.s().len() })
}

/// `(β, μ(A^β)² > t²)` for `β = 1..=k`.
pub fn threshold_trace(a: &IntMatrix, threshold: Threshold, k: u32) -> Vec<(u32, bool)> {
    let t_sq = threshold.t_sq(a.dim());
    let mut power = IntMatrix::identity(a.dim());
    (1..=k)
        .map(|b| {
            power = power.mul(a);
            (b, mu_exceeds(&power, &t_sq))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn condition_examples() {
        let r = check_conditions(&IntMatrix::scalar(2, BigInt::from(3))).unwrap();
        assert!(r.mu_gt_2 && r.verdict == Verdict::GuaranteedRadix);

        let r = check_conditions(&IntMatrix::scalar(2, BigInt::from(2))).unwrap();
        assert!(!r.mu_gt_2 && !r.mu_gt_2sqrtn);
        assert_eq!(r.verdict, Verdict::Inconclusive);

        let r = check_conditions(&m(&[&[-2]])).unwrap();
        assert!(!r.mu_gt_2);
        assert_eq!(r.verdict, Verdict::Inconclusive);

        let r = check_conditions(&m(&[&[1, 1], &[-1, 1]])).unwrap();
        assert!(!r.jeong_c_in_au && !r.jeong_c_in_af);
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn cross_condition_is_not_sufficient() {
        let a = m(&[&[6, -4], &[-4, 5]]);
        let r = check_conditions(&a).unwrap();
        assert!(r.is_dilation && r.jeong_c_in_au && r.jeong_c_in_af && !r.mu_gt_2);
        assert_eq!(r.verdict, Verdict::Inconclusive);
        let c = cross_validate(&a).unwrap();
        assert!(!c.yields_radix);
        let (ds, _, table) = pseudodigits_for(&a).unwrap();
        assert!(table.cycle_of(&[BigInt::from(1), BigInt::from(1)]).is_some());
        assert_eq!(ds.divide(&[BigInt::from(1), BigInt::from(1)]).unwrap().0, vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn power_examples() {
        assert_eq!(find_power(&m(&[&[2]]), Threshold::MuGt2, 64).unwrap().beta, 2);
        let td = find_power(&m(&[&[1, 1], &[-1, 1]]), Threshold::MuGt2, 64).unwrap();
        assert_eq!(td.beta, 3);
        assert_eq!(td.power, m(&[&[-2, 2], &[-2, -2]]));
        assert_eq!(find_power(&IntMatrix::scalar(2, BigInt::from(3)), Threshold::MuGt2, 64).unwrap().beta, 1);
        assert!(matches!(
            find_power(&m(&[&[1, 1], &[-1, 1]]), Threshold::MuGt2, 2),
            Err(Error::PowerNotFound { beta_max: 2, .. })
        ));
        assert_eq!(
            threshold_trace(&m(&[&[1, 1], &[-1, 1]]), Threshold::MuGt2, 3),
            vec![(1, false), (2, false), (3, true)]
        );
    }

    #[test]
    fn cross_validation_examples() {
        let c = cross_validate(&m(&[&[-2]])).unwrap();
        assert_eq!((c.verdict, c.yields_radix), (Verdict::Inconclusive, true));
        let c = cross_validate(&m(&[&[3]])).unwrap();
        assert_eq!((c.verdict, c.yields_radix), (Verdict::GuaranteedRadix, true));
        let c = cross_validate(&IntMatrix::scalar(2, BigInt::from(2))).unwrap();
        assert_eq!((c.verdict, c.yields_radix), (Verdict::Inconclusive, false));
    }
}
