//! Univariate polynomials over exact fields, with the root-location tests
//! used to certify that a matrix is expanding.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Field, Scalar};

/// Little-endian coefficient list, kept trimmed (no zero leading term).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type RatPoly = Poly<BigRational>;

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// `zᵈ p(1/z)` for `d = deg p`.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| {
                    let k = (0..i).fold(T::zero(), |acc, _| acc + T::one());
                    c.clone() * k
                })
                .collect(),
        )
    }

    fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::constant(T::one()), |acc, _| acc.mul(self))
    }
}

impl<T: Field> Poly<T> {
    /// Euclidean division: `self = q · d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d.leading().expect("division by the zero polynomial").clone();
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let f = r.last().unwrap().clone() / dl.clone();
            for (i, c) in d.coeffs.iter().enumerate() {
                r[shift + i] = r[shift + i].clone() - f.clone() * c.clone();
            }
            q[shift] = f;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(l) => a.scale(&(T::one() / l)),
            None => a,
        }
    }
}

impl RatPoly {
    pub fn from_integers(c: &[BigInt]) -> Self {
        Self::new(c.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    fn sign_at_pos_infinity(&self) -> i32 {
        match self.leading() {
            None => 0,
            Some(l) if l.is_positive() => 1,
            Some(_) => -1,
        }
    }

    fn sign_at_neg_infinity(&self) -> i32 {
        let s = self.sign_at_pos_infinity();
        if self.degree().unwrap_or(0) % 2 == 1 {
            -s
        } else {
            s
        }
    }

    /// Number of distinct real roots, by a Sturm sequence.
    pub fn count_real_roots(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&-BigRational::one()));
        }
        let changes = |signs: Vec<i32>| {
            let nz: Vec<i32> = signs.into_iter().filter(|&s| s != 0).collect();
            nz.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let at_neg = changes(seq.iter().map(|p| p.sign_at_neg_infinity()).collect());
        let at_pos = changes(seq.iter().map(|p| p.sign_at_pos_infinity()).collect());
        at_neg - at_pos
    }

    /// Schur–Cohn test: true iff every complex root lies strictly inside the
    /// unit disc. Exact for real coefficients. Fails (returns false) when
    /// any root lies on or outside the unit circle.
    pub fn all_roots_inside_unit_disc(&self) -> bool {
        let mut p = self.clone();
        loop {
            let Some(deg) = p.degree() else {
                return false;
            };
            if deg == 0 {
                return true;
            }
            let lead = p.coeffs[deg].clone();
            let constant = p.coeffs[0].clone();
            if constant.abs() >= lead.abs() {
                return false;
            }
            // (lead · p(z) − constant · p*(z)) / z has the same number of
            // roots inside the disc, minus one.
            let reduced = p.scale(&lead).sub(&p.reversed_full(deg).scale(&constant));
            debug_assert!(reduced.coeff(0).is_zero());
            p = Poly::new(reduced.coeffs[1..].to_vec());
        }
    }

    /// `zᵈ p(1/z)` against a fixed degree `d` (keeps leading zeros of the
    /// reversal meaningful).
    fn reversed_full(&self, d: usize) -> Self {
        Self::new((0..=d).map(|i| self.coeff(d - i)).collect())
    }

    /// True iff some root has modulus exactly one.
    ///
    /// `z = −1` is checked directly; every other point of the unit circle is
    /// `(1 + it)/(1 − it)` for a real `t`, so the remaining roots correspond
    /// to common real roots of the real and imaginary parts of
    /// `(1 − it)ᵈ p((1 + it)/(1 − it))`.
    pub fn has_root_on_unit_circle(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if self.eval(&-BigRational::one()).is_zero() {
            return true;
        }
        let one = BigRational::one();
        let zero = BigRational::zero();
        let plus = Poly::new(vec![
            Complex::new(one.clone(), zero.clone()),
            Complex::new(zero.clone(), one.clone()),
        ]);
        let minus = Poly::new(vec![
            Complex::new(one.clone(), zero.clone()),
            Complex::new(zero.clone(), -one.clone()),
        ]);
        let mut transformed: Poly<Complex<BigRational>> = Poly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let term = plus
                .pow(k)
                .mul(&minus.pow(d - k))
                .scale(&Complex::new(c.clone(), zero.clone()));
            transformed = transformed.add(&term);
        }
        let re = Poly::new(transformed.coeffs.iter().map(|z| z.re.clone()).collect());
        let im = Poly::new(transformed.coeffs.iter().map(|z| z.im.clone()).collect());
        let common = if im.is_zero() {
            re
        } else if re.is_zero() {
            im
        } else {
            re.gcd(&im)
        };
        common.count_real_roots() > 0
    }

    /// Integer roots of a polynomial with integer coefficients, with
    /// multiplicity, in increasing order.
    pub fn integer_roots(&self) -> Vec<BigInt> {
        let mut roots = Vec::new();
        let mut p = self.clone();
        // Strip roots at zero first.
        while p.degree().is_some_and(|d| d > 0) && p.coeff(0).is_zero() {
            roots.push(BigInt::zero());
            p = Poly::new(p.coeffs[1..].to_vec());
        }
        let Some(c0) = p.coeffs.first().cloned() else {
            return roots;
        };
        if !c0.is_integer() || p.degree() == Some(0) {
            roots.sort();
            return roots;
        }
        let c0 = c0.to_integer().abs();
        let mut divisors = Vec::new();
        let mut k = BigInt::one();
        while &k * &k <= c0 {
            if (&c0 % &k).is_zero() {
                divisors.push(k.clone());
                divisors.push(&c0 / &k);
            }
            k += 1;
        }
        divisors.sort();
        divisors.dedup();
        for dvs in divisors {
            for cand in [dvs.clone(), -dvs.clone()] {
                let x = BigRational::from_integer(cand.clone());
                loop {
                    if p.degree().unwrap_or(0) == 0 || !p.eval(&x).is_zero() {
                        break;
                    }
                    let lin = Poly::new(vec![-x.clone(), BigRational::one()]);
                    p = p.div_rem(&lin).0;
                    roots.push(cand.clone());
                }
            }
        }
        roots.sort();
        roots
    }
}
