//! Enumeration of integer points in boxes and balls.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::scalar::floor;

/// Odometer over the integer points of `∏ [loᵢ, hiᵢ]`, first coordinate
/// slowest, so points come out in lexicographic order.
pub struct BoxPoints {
    ranges: Vec<(BigInt, BigInt)>,
    current: Option<Vec<BigInt>>,
}

impl BoxPoints {
    pub fn new(ranges: Vec<(BigInt, BigInt)>) -> Self {
        let empty = ranges.iter().any(|(lo, hi)| lo > hi);
        let current = if empty { None } else { Some(ranges.iter().map(|(lo, _)| lo.clone()).collect()) };
        BoxPoints { ranges, current }
    }

    /// Number of points, saturating at `u128::MAX`.
    pub fn count(ranges: &[(BigInt, BigInt)]) -> u128 {
        ranges.iter().fold(1u128, |acc, (lo, hi)| {
            if lo > hi {
                return 0;
            }
            let w: BigInt = hi - lo + 1;
            let w = u128::try_from(w).unwrap_or(u128::MAX);
            acc.saturating_mul(w)
        })
    }
}

impl Iterator for BoxPoints {
    type Item = Vec<BigInt>;

    fn next(&mut self) -> Option<Vec<BigInt>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.ranges[i].1 {
                cur[i] += BigInt::one();
                for (c, (lo, _)) in cur.iter_mut().zip(&self.ranges).skip(i + 1) {
                    *c = lo.clone();
                }
                break;
            }
        }
        Some(out)
    }
}

/// Integer points `x` with `‖x‖₂² ≤ radius_sq`, restricted to an optional
/// box, in lexicographic order.
pub fn ball_points(
    dim: usize,
    radius_sq: &BigRational,
    clip: Option<&[(BigInt, BigInt)]>,
) -> impl Iterator<Item = Vec<BigInt>> {
    let r = floor(&crate::linalg::sqrt::sqrt_interval(radius_sq, 8).hi);
    let ranges: Vec<(BigInt, BigInt)> = (0..dim)
        .map(|i| {
            let (mut lo, mut hi) = (-r.clone(), r.clone());
            if let Some(c) = clip {
                lo = lo.max(c[i].0.clone());
                hi = hi.min(c[i].1.clone());
            }
            (lo, hi)
        })
        .collect();
    let radius_sq = radius_sq.clone();
    BoxPoints::new(ranges).filter(move |x| {
        let s: BigInt = x.iter().map(|v| v * v).sum();
        BigRational::from_integer(s) <= radius_sq
    })
}
