use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Exact, Field, Scalar};

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    /// Builds an `n × n` matrix from row-major entries. Rejects `n = 0`.
    pub fn new(n: usize, data: Vec<T>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if data.len() != n * n {
            return Err(Error::NotSquare { rows: n, len: data.len() });
        }
        Ok(Matrix { n, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, len: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { n, data })
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, T::one())
    }

    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![T::zero(); n * n] }
    }

    pub fn scalar(n: usize, c: T) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diagonal(entries: Vec<T>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut m = Self::zeros(n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n)
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.n).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix dimensions differ");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = a.clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + t;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix dimensions differ");
        Matrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix dimensions differ");
        Matrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.n, "vector length differs from matrix dimension");
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
            })
            .collect()
    }

    /// `self^k` by repeated squaring; `k = 0` gives the identity.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Sum of squared entries, i.e. the squared Frobenius norm for real
    /// scalars.
    pub fn frobenius_sq(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, x| acc + x.clone() * x.clone())
    }

    /// `AᵀA = AAᵀ`.
    pub fn is_normal(&self) -> bool {
        let t = self.transpose();
        t.mul(self) == self.mul(&t)
    }

    /// Fraction-free (Bareiss) determinant. Every division is exact in an
    /// integral domain.
    pub fn det(&self) -> T {
        let n = self.n;
        let mut m = self.data.clone();
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n {
            if m[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                    return T::zero();
                };
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                sign_flip = !sign_flip;
            }
            let pivot = m[k * n + k].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = pivot.clone() * m[i * n + j].clone()
                        - m[i * n + k].clone() * m[k * n + j].clone();
                    m[i * n + j] = v / prev.clone();
                }
                m[i * n + k] = T::zero();
            }
            prev = pivot;
        }
        let d = m[n * n - 1].clone();
        if sign_flip {
            -d
        } else {
            d
        }
    }

    /// Determinant of the leading `k × k` block.
    pub fn leading_minor(&self, k: usize) -> T {
        let mut data = Vec::with_capacity(k * k);
        for i in 0..k {
            data.extend_from_slice(&self.row(i)[..k]);
        }
        Matrix { n: k, data }.det()
    }

    /// Coefficients `c₀..cₙ` (little-endian, `cₙ = 1`) of `det(zI − A)`,
    /// computed division-free by Berkowitz's algorithm.
    pub fn charpoly(&self) -> Vec<T> {
        let n = self.n;
        // Berkowitz: build the coefficient vector of the characteristic
        // polynomial of the leading r×r block for r = 1..n.
        let mut coeffs: Vec<T> = vec![T::one(), -self[(0, 0)].clone()];
        for r in 1..n {
            // Block decomposition of the leading (r+1)×(r+1) submatrix:
            // [[A_r, c], [rᵀ, a]] where A_r is r×r.
            let a = self[(r, r)].clone();
            let col: Vec<T> = (0..r).map(|i| self[(i, r)].clone()).collect();
            let rowv: Vec<T> = (0..r).map(|j| self[(r, j)].clone()).collect();
            // Toeplitz column: 1, -a, -r·c, -r·A c, -r·A² c, ...
            let mut t = Vec::with_capacity(r + 2);
            t.push(T::one());
            t.push(-a);
            let mut v = col;
            for _ in 0..r {
                let dot = rowv.iter().zip(&v).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
                t.push(-dot);
                v = (0..r)
                    .map(|i| {
                        (0..r).fold(T::zero(), |acc, j| acc + self[(i, j)].clone() * v[j].clone())
                    })
                    .collect();
            }
            // Multiply the (r+2)×(r+1) lower-triangular Toeplitz matrix by
            // the previous coefficient vector.
            let mut next = vec![T::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, c) in coeffs.iter().enumerate() {
                    if i >= j {
                        *slot = slot.clone() + t[i - j].clone() * c.clone();
                    }
                }
            }
            coeffs = next;
        }
        // `coeffs` is big-endian (leading 1 first).
        coeffs.reverse();
        coeffs
    }
}

impl<T: Field> Matrix<T> {
    /// Gauss–Jordan inverse over a field.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut inv = Self::identity(n).data;
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !a[i * n + col].is_zero()) else {
                return Err(Error::Singular);
            };
            if p != col {
                for j in 0..n {
                    a.swap(col * n + j, p * n + j);
                    inv.swap(col * n + j, p * n + j);
                }
            }
            let pivot = a[col * n + col].clone();
            for j in 0..n {
                a[col * n + j] = a[col * n + j].clone() / pivot.clone();
                inv[col * n + j] = inv[col * n + j].clone() / pivot.clone();
            }
            for i in 0..n {
                if i == col || a[i * n + col].is_zero() {
                    continue;
                }
                let f = a[i * n + col].clone();
                for j in 0..n {
                    a[i * n + j] = a[i * n + j].clone() - f.clone() * a[col * n + j].clone();
                    inv[i * n + j] = inv[i * n + j].clone() - f.clone() * inv[col * n + j].clone();
                }
            }
        }
        Ok(Matrix { n, data: inv })
    }
}

impl<T: Exact> Matrix<T> {
    /// Entries as integers when every entry is integral.
    pub fn to_integer_matrix(&self) -> Option<Matrix<BigInt>> {
        let data = self.data.iter().map(Exact::to_integer).collect::<Option<Vec<_>>>()?;
        Some(Matrix { n: self.n, data })
    }

    pub fn from_integer_matrix(m: &Matrix<BigInt>) -> Self {
        m.map(T::from_integer)
    }
}

impl Matrix<BigInt> {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn to_rational(&self) -> Matrix<BigRational> {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    /// Exact rational inverse. Fails on a singular matrix.
    pub fn rational_inverse(&self) -> Result<Matrix<BigRational>> {
        self.to_rational().inverse()
    }

    /// Adjugate, so that `A · adj(A) = det(A) · I`.
    pub fn adjugate(&self) -> Result<Matrix<BigInt>> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let inv = self.rational_inverse()?;
        let scaled = inv.scale(&BigRational::from_integer(det));
        scaled.to_integer_matrix().ok_or(Error::Singular)
    }

    /// Floating-point copy for diagnostics and numeric oracles.
    pub fn to_f64(&self) -> Matrix<f64> {
        self.map(|x| x.to_f64().unwrap_or(f64::NAN))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.n + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.n + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.data.chunks(self.n).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.n)).finish()
    }
}
