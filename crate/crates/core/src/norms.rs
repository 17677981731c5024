//! The expanding norm `‖x‖′ = (Σⱼ ‖A⁻ʲx‖₂²)^{1/2}` and the certified
//! constants that bound the attracting ball of the Euclidean algorithm.
//!
//! Operator norms are never computed; every one is replaced by a rational
//! Frobenius upper bound, and the geometric tail of each series is bounded
//! blockwise by `θ = ‖A⁻ᴶ‖_F < 1/2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::spectral::{gram, lambda_max_enclosure, lambda_min_enclosure, sigma_bounds};
use crate::linalg::sqrt::{bits_for_tolerance, sqrt_interval, sqrt_lower, sqrt_upper, Interval};
use crate::linalg::{require_dilation, IntMatrix, Matrix, RatMatrix};
use crate::points::{ball_points, BoxPoints};
use crate::scalar::{norm_sq, rat_from_int, to_f64};
use crate::{IntVector, RatVector};

/// Largest block length tried before giving up on convergence.
const MAX_BLOCK: usize = 1 << 14;

/// Precomputed data for evaluating `‖·‖′` with certified error.
#[derive(Clone, Debug)]
pub struct NormEvaluator {
    a: IntMatrix,
    a_inv: RatMatrix,
    block_len: usize,
    theta_sq: BigRational,
    theta: BigRational,
    /// `‖A⁻ʲ‖_F²` for `j < block_len`.
    partial_frobs: Vec<BigRational>,
}

impl NormEvaluator {
    /// Requires a dilation matrix (otherwise the series need not converge).
    pub fn new(a: &IntMatrix) -> Result<Self> {
        require_dilation(a)?;
        let a_inv = a.rational_inverse()?;
        let quarter = BigRational::new(1.into(), 4.into());
        let n = a.dim();

        let mut powers = vec![RatMatrix::identity(n)];
        let mut block_len = 1;
        loop {
            while powers.len() <= block_len {
                let next = powers.last().unwrap().mul(&a_inv);
                powers.push(next);
            }
            let theta_sq = powers[block_len].frobenius_sq();
            if theta_sq < quarter {
                let partial_frobs = powers[..block_len].iter().map(|p| p.frobenius_sq()).collect();
                let theta = sqrt_upper(&theta_sq);
                return Ok(NormEvaluator { a: a.clone(), a_inv, block_len, theta_sq, theta, partial_frobs });
            }
            block_len *= 2;
            if block_len > MAX_BLOCK {
                return Err(Error::Inconsistent(format!(
                    "‖A⁻ʲ‖_F did not drop below 1/2 for j ≤ {MAX_BLOCK}"
                )));
            }
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn inverse(&self) -> &RatMatrix {
        &self.a_inv
    }

    /// Truncation depth `J`.
    pub fn block_len(&self) -> usize {
        self.block_len
    }

    /// Rational upper bound on `‖A⁻ᴶ‖_op` (below one half up to rounding).
    pub fn theta(&self) -> &BigRational {
        &self.theta
    }

    /// `‖A⁻ᴶ‖_F²`, exact.
    pub fn theta_sq(&self) -> &BigRational {
        &self.theta_sq
    }

    pub fn partial_frobs(&self) -> &[BigRational] {
        &self.partial_frobs
    }

    /// Upper bound on `C = Σⱼ ‖A⁻ʲ‖_op²`.
    pub fn c_upper(&self) -> BigRational {
        let partial: BigRational = self.partial_frobs.iter().sum();
        partial / (BigRational::one() - &self.theta_sq)
    }

    /// Certified enclosure of `‖x‖′` of width at most `tol`.
    pub fn norm_prime(&self, x: &[BigRational], tol: &BigRational) -> Interval {
        assert!(tol.is_positive(), "tolerance must be positive");
        if x.iter().all(Zero::is_zero) {
            return Interval::point(BigRational::zero());
        }
        let bits = bits_for_tolerance(tol) + 2;
        let tail_factor = &self.theta_sq / (BigRational::one() - &self.theta_sq);
        let mut v: RatVector = x.to_vec();
        let mut total = BigRational::zero();
        loop {
            let mut block = BigRational::zero();
            for _ in 0..self.block_len {
                block += norm_sq(&v);
                v = self.a_inv.mul_vec(&v);
            }
            total += &block;
            // Next block is at most θ² times this one, and so on.
            let tail = block * &tail_factor;
            let lo = sqrt_interval(&total, bits).lo;
            let hi = sqrt_interval(&(&total + &tail), bits).hi;
            if &hi - &lo <= *tol {
                return Interval { lo, hi };
            }
        }
    }

    pub fn norm_prime_int(&self, x: &[BigInt], tol: &BigRational) -> Interval {
        let xr: RatVector = x.iter().map(rat_from_int).collect();
        self.norm_prime(&xr, tol)
    }
}

/// `‖x‖′²` for a normal matrix, exact.
///
/// For normal `A`, `(A⁻ʲ)ᵀA⁻ʲ = (AᵀA)⁻ʲ`, so the series sums to the
/// quadratic form of `P(P − I)⁻¹` with `P = AᵀA`. Diagonalising `P` gives
/// `Σ_λ |λ|²/(|λ|² − 1)·‖x_λ‖₂²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalNorm {
    pub squared: BigRational,
}

impl NormalNorm {
    pub fn interval(&self, bits: u32) -> Interval {
        sqrt_interval(&self.squared, bits)
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.squared).sqrt()
    }
}

pub fn norm_prime_normal(a: &IntMatrix, x: &[BigRational]) -> Result<NormalNorm> {
    if !a.is_normal() {
        return Err(Error::NotNormal);
    }
    if x.len() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: x.len() });
    }
    require_dilation(a)?;
    let p = gram(a);
    let shifted = p.sub(&Matrix::identity(a.dim()));
    let form = p.mul(&shifted.inverse()?);
    let fx = form.mul_vec(x);
    let squared = x.iter().zip(&fx).map(|(u, v)| u * v).sum();
    Ok(NormalNorm { squared })
}

/// `m² = min |λ|²` and `M² = max |λ|²` for a normal matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalModuli {
    pub min_sq: Interval,
    pub max_sq: Interval,
    /// Every eigenvalue of `AᵀA` is rational (the enclosures are points).
    pub exact: bool,
}

impl NormalModuli {
    /// Enclosure of `m = min |λ|`.
    pub fn m(&self) -> Interval {
        Interval { lo: sqrt_interval(&self.min_sq.lo, 64).lo, hi: sqrt_interval(&self.min_sq.hi, 64).hi }
    }

    /// Enclosure of `M = max |λ|`.
    pub fn big_m(&self) -> Interval {
        Interval { lo: sqrt_interval(&self.max_sq.lo, 64).lo, hi: sqrt_interval(&self.max_sq.hi, 64).hi }
    }
}

fn normal_moduli(a: &IntMatrix) -> NormalModuli {
    let p = gram(a);
    let n = a.dim();
    let charpoly = a.transpose().mul(a).charpoly();
    let roots = crate::linalg::poly::RatPoly::from_integers(&charpoly).integer_roots();
    if roots.len() == n {
        let lo = rat_from_int(&roots[0]);
        let hi = rat_from_int(&roots[n - 1]);
        return NormalModuli { min_sq: Interval::point(lo), max_sq: Interval::point(hi), exact: true };
    }
    NormalModuli {
        min_sq: lambda_min_enclosure(&p, 48),
        max_sq: lambda_max_enclosure(&p, 48),
        exact: false,
    }
}

/// Certified constants for the attracting ball `‖x‖′ ≤ R = Mρ/(m − 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundsReport {
    pub dim: usize,
    pub c_upper: BigRational,
    pub sigma_min_lb: BigRational,
    pub sigma_max_ub: BigRational,
    pub m_lower: BigRational,
    pub m_upper: BigRational,
    pub rho_upper: BigRational,
    pub r_upper: BigRational,
    /// Radius of the l² ball enumerated by the pseudodigit search; the
    /// ‖·‖′ ball of radius `R` sits inside it because `‖x‖₂ ≤ ‖x‖′`.
    pub candidate_radius_l2: BigRational,
    pub normal_exact: Option<NormalModuli>,
    /// `μν√n / (2(μ − 1)^{3/2}(μ + 1)^{1/2})` evaluated as an upper bound,
    /// available when the certified `μ` exceeds one.
    pub closed_form_r: Option<BigRational>,
    pub block_len: usize,
    pub theta_sq: BigRational,
}

pub fn bounds_report(a: &IntMatrix) -> Result<BoundsReport> {
    let ev = NormEvaluator::new(a)?;
    bounds_from_evaluator(&ev)
}

pub fn bounds_from_evaluator(ev: &NormEvaluator) -> Result<BoundsReport> {
    let a = ev.matrix();
    let n = a.dim();
    let one = BigRational::one();
    let c_upper = ev.c_upper();
    let (sigma_min_lb, sigma_max_ub) = sigma_bounds(a)?;

    // ‖Ax‖′² = ‖x‖′² + ‖Ax‖₂² ≥ ‖x‖′² (1 + σ_min² / C)
    let m_lower = sqrt_lower(&(&one + &sigma_min_lb * &sigma_min_lb / &c_upper));
    // ‖Ax‖′² ≤ ‖x‖′² + ν²‖x‖₂² ≤ (1 + ν²)‖x‖′²
    let m_upper = sqrt_upper(&(&one + &sigma_max_ub * &sigma_max_ub));
    // ‖f‖′ ≤ √C ‖f‖₂ ≤ √C · √n / 2 on the closed unit box
    let rho_upper = sqrt_upper(&(&c_upper * rat_from_int(&BigInt::from(n)) / BigRational::from_integer(4.into())));
    if m_lower <= one {
        return Err(Error::Inconsistent("certified m lower bound is not above one".into()));
    }
    let r_upper = &m_upper * &rho_upper / (&m_lower - &one);

    let normal_exact = a.is_normal().then(|| normal_moduli(a));
    let closed_form_r = (sigma_min_lb > one).then(|| {
        let mu = &sigma_min_lb;
        let nu = &sigma_max_ub;
        let mu_m1 = mu - &one;
        let value_sq = mu * mu * nu * nu * rat_from_int(&BigInt::from(n))
            / (BigRational::from_integer(4.into()) * &mu_m1 * &mu_m1 * &mu_m1 * (mu + &one));
        sqrt_upper(&value_sq)
    });

    Ok(BoundsReport {
        dim: n,
        candidate_radius_l2: r_upper.clone(),
        c_upper,
        sigma_min_lb,
        sigma_max_ub,
        m_lower,
        m_upper,
        rho_upper,
        r_upper,
        normal_exact,
        closed_form_r,
        block_len: ev.block_len(),
        theta_sq: ev.theta_sq().clone(),
    })
}

impl BoundsReport {
    /// Integer points with `‖x‖₂ ≤ R_upper`, or `None` when the enclosing
    /// cube holds more than `limit` points.
    pub fn candidate_points(&self, limit: u128) -> Option<Vec<IntVector>> {
        let r = crate::scalar::floor(&self.candidate_radius_l2);
        let cube = BoxPoints::count(&vec![(-r.clone(), r); self.dim]);
        if cube > limit {
            return None;
        }
        let r_sq = &self.candidate_radius_l2 * &self.candidate_radius_l2;
        Some(ball_points(self.dim, &r_sq, None).collect())
    }

    pub fn contains_l2(&self, x: &[BigInt]) -> bool {
        rat_from_int(&norm_sq(x)) <= &self.candidate_radius_l2 * &self.candidate_radius_l2
    }

    /// Step budget for one orbit started at `x`: ten times the number of
    /// steps needed to enter the ball plus a bound on the integer points
    /// inside it. Saturates at `u64::MAX`.
    pub fn default_max_steps(&self, x: &[BigInt]) -> u64 {
        let c = to_f64(&self.c_upper);
        let m = to_f64(&self.m_lower);
        let xnorm = to_f64(&rat_from_int(&norm_sq(x))).sqrt();
        let start = (c.sqrt() * xnorm).max(1.0);
        let entry = (start.ln() / m.ln()).ceil().max(0.0) + 1.0;
        let side = 2.0 * to_f64(&self.candidate_radius_l2).floor() + 1.0;
        let points = side.powi(self.dim as i32);
        let budget = 10.0 * (entry + points);
        if budget.is_finite() && budget < u64::MAX as f64 {
            budget as u64
        } else {
            u64::MAX
        }
    }
}
