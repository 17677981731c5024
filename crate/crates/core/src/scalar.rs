//! Scalar abstractions shared by the exact linear algebra.
//!
//! Every matrix routine is written against [`Scalar`] (a commutative ring
//! with exact equality) or [`Field`] (a ring with exact division). The
//! exact instantiations are `BigInt`, `BigRational` and Gaussian rationals;
//! `f64`/`f32` instantiations exist for diagnostics only.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive, Zero};

/// Ring element usable as a matrix entry.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync {}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> + Send + Sync {}

/// Marker for scalars whose `/` is exact field division.
pub trait Field: Scalar {}

impl Field for BigRational {}
impl Field for Complex<BigRational> {}
impl Field for f64 {}
impl Field for f32 {}

/// Scalars that embed the integers exactly and can say whether a value is
/// an integer.
pub trait Exact: Scalar {
    fn from_integer(n: &BigInt) -> Self;
    fn to_integer(&self) -> Option<BigInt>;
    /// The value as a real rational, when it is one.
    fn to_rational(&self) -> Option<BigRational>;
}

impl Exact for BigInt {
    fn from_integer(n: &BigInt) -> Self {
        n.clone()
    }
    fn to_integer(&self) -> Option<BigInt> {
        Some(self.clone())
    }
    fn to_rational(&self) -> Option<BigRational> {
        Some(BigRational::from_integer(self.clone()))
    }
}

impl Exact for BigRational {
    fn from_integer(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }
    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

impl Exact for Complex<BigRational> {
    fn from_integer(n: &BigInt) -> Self {
        Complex::new(BigRational::from_integer(n.clone()), BigRational::zero())
    }
    fn to_integer(&self) -> Option<BigInt> {
        if self.im.is_zero() && self.re.is_integer() {
            Some(self.re.to_integer())
        } else {
            None
        }
    }
    fn to_rational(&self) -> Option<BigRational> {
        self.im.is_zero().then(|| self.re.clone())
    }
}

/// Gaussian rational, the exact entry type for complex lattice bases.
pub type GaussianRational = Complex<BigRational>;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_from_int(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

pub fn int_vector(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// `⌈x⌉` for an exact rational.
pub fn ceil(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

/// `⌊x⌋` for an exact rational.
pub fn floor(x: &BigRational) -> BigInt {
    x.floor().to_integer()
}

/// Lossy conversion used for decimal sidecars and diagnostics.
pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `"p/q"` or `"p"` when the denominator is one.
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-1.25"`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole_abs = whole.trim_start_matches(['-', '+']);
        let whole_val: BigInt = if whole_abs.is_empty() {
            BigInt::zero()
        } else {
            whole_abs.parse().ok()?
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac_val: BigInt = frac.parse().ok()?;
        let mut value = BigRational::new(whole_val * &scale + frac_val, scale);
        if negative {
            value = -value;
        }
        return Some(value);
    }
    s.parse::<BigInt>().ok().map(BigRational::from_integer)
}

/// Squared Euclidean length.
pub fn norm_sq<T: Scalar>(v: &[T]) -> T {
    v.iter()
        .fold(T::zero(), |acc, x| acc + x.clone() * x.clone())
}
