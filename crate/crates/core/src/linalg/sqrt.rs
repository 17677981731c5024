use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// Default number of fractional bits carried by square-root enclosures.
pub const SQRT_BITS: u32 = 64;

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_f64(&self, x: f64, slack: f64) -> bool {
        let lo = crate::scalar::to_f64(&self.lo);
        let hi = crate::scalar::to_f64(&self.hi);
        lo - slack <= x && x <= hi + slack
    }

    pub fn midpoint_f64(&self) -> f64 {
        (crate::scalar::to_f64(&self.lo) + crate::scalar::to_f64(&self.hi)) / 2.0
    }
}

/// Exact square root of a nonnegative rational when it is a perfect square.
pub fn exact_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| BigRational::new(n, d))
}

/// Rational enclosure of `√x` of width at most `2^-bits` (relative to the
/// denominator grid); exact when `x` is a perfect square.
///
/// Panics on negative input.
pub fn sqrt_interval(x: &BigRational, bits: u32) -> Interval {
    assert!(!x.is_negative(), "square root of a negative rational");
    if let Some(r) = exact_sqrt(x) {
        return Interval::point(r);
    }
    // √(p/q) = √(p·q·K²) / (q·K) with K = 2^bits.
    let scale = BigInt::one() << bits;
    let q = x.denom();
    let radicand = x.numer() * q * &scale * &scale;
    let root = radicand.sqrt();
    let denom = q * &scale;
    let lo = BigRational::new(root.clone(), denom.clone());
    let hi = if &root * &root == radicand {
        lo.clone()
    } else {
        BigRational::new(root + 1, denom)
    };
    Interval { lo, hi }
}

pub fn sqrt_upper(x: &BigRational) -> BigRational {
    sqrt_interval(x, SQRT_BITS).hi
}

pub fn sqrt_lower(x: &BigRational) -> BigRational {
    sqrt_interval(x, SQRT_BITS).lo
}

/// Number of fractional bits needed so that a grid step is below `tol`.
pub fn bits_for_tolerance(tol: &BigRational) -> u32 {
    assert!(tol.is_positive(), "tolerance must be positive");
    if tol >= &BigRational::one() {
        return 8;
    }
    let ratio = (tol.denom() / tol.numer()).bits() as u32;
    ratio + 8
}
