//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// `U · A · V = diag(s₁, …, sₙ)` with `s₁ | s₂ | … | sₙ`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub diag: Vec<BigInt>,
}

impl SmithForm {
    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Product of the invariant factors, `|det A|`.
    pub fn index(&self) -> BigInt {
        self.diag.iter().product()
    }
}

/// Computes the Smith normal form of a nonsingular integer matrix.
pub fn smith_normal_form(a: &IntMatrix) -> Result<SmithForm> {
    let n = a.dim();
    if a.det().is_zero() {
        return Err(Error::Singular);
    }
    let mut m = a.clone();
    let mut u = IntMatrix::identity(n);
    let mut v = IntMatrix::identity(n);

    for k in 0..n {
        loop {
            // Move the smallest nonzero entry of the trailing block to (k, k).
            let (pi, pj) = smallest_nonzero(&m, k);
            swap_rows(&mut m, &mut u, k, pi);
            swap_cols(&mut m, &mut v, k, pj);

            let mut clean = true;
            for i in k + 1..n {
                let q = m[(i, k)].div_floor(&m[(k, k)]);
                if !q.is_zero() {
                    add_row_multiple(&mut m, &mut u, i, k, &(-&q));
                }
                if !m[(i, k)].is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..n {
                let q = m[(k, j)].div_floor(&m[(k, k)]);
                if !q.is_zero() {
                    add_col_multiple(&mut m, &mut v, j, k, &(-&q));
                }
                if !m[(k, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Row and column k are cleared; enforce divisibility of the rest.
            let pivot = m[(k, k)].clone();
            let offender = (k + 1..n)
                .flat_map(|i| (k + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !m[(i, j)].is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => add_row_multiple(&mut m, &mut u, k, i, &BigInt::one()),
                None => break,
            }
        }
        if m[(k, k)].is_negative() {
            for j in 0..n {
                m[(k, j)] = -&m[(k, j)];
                u[(k, j)] = -&u[(k, j)];
            }
        }
    }
    let diag = (0..n).map(|i| m[(i, i)].clone()).collect();
    Ok(SmithForm { u, v, diag })
}

fn smallest_nonzero(m: &IntMatrix, k: usize) -> (usize, usize) {
    let n = m.dim();
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in k..n {
        for j in k..n {
            let x = m[(i, j)].abs();
            if x.is_zero() {
                continue;
            }
            if best.as_ref().map_or(true, |(b, _, _)| &x < b) {
                best = Some((x, i, j));
            }
        }
    }
    let (_, i, j) = best.expect("nonsingular matrix has a nonzero trailing block");
    (i, j)
}

fn swap_rows(m: &mut IntMatrix, u: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.dim() {
        let t = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = t;
        let t = u[(a, j)].clone();
        u[(a, j)] = u[(b, j)].clone();
        u[(b, j)] = t;
    }
}

fn swap_cols(m: &mut IntMatrix, v: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.dim() {
        let t = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = t;
        let t = v[(i, a)].clone();
        v[(i, a)] = v[(i, b)].clone();
        v[(i, b)] = t;
    }
}

/// row[dst] += c · row[src]
fn add_row_multiple(m: &mut IntMatrix, u: &mut IntMatrix, dst: usize, src: usize, c: &BigInt) {
    for j in 0..m.dim() {
        let t = &m[(src, j)] * c;
        m[(dst, j)] += t;
        let t = &u[(src, j)] * c;
        u[(dst, j)] += t;
    }
}

/// col[dst] += c · col[src]
fn add_col_multiple(m: &mut IntMatrix, v: &mut IntMatrix, dst: usize, src: usize, c: &BigInt) {
    for i in 0..m.dim() {
        let t = &m[(i, src)] * c;
        m[(i, dst)] += t;
        let t = &v[(i, src)] * c;
        v[(i, dst)] += t;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::scalar::int;

    fn check(a: &IntMatrix) -> SmithForm {
        let snf = smith_normal_form(a).unwrap();
        let d = Matrix::diagonal(snf.diag.clone()).unwrap();
        assert_eq!(snf.u.mul(a).mul(&snf.v), d);
        assert_eq!(snf.u.det().abs(), BigInt::one());
        assert_eq!(snf.v.det().abs(), BigInt::one());
        assert_eq!(snf.index(), a.det().abs());
        for w in snf.diag.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        snf
    }

    #[test]
    fn small_cases() {
        assert_eq!(check(&IntMatrix::from_i64_rows(&[&[2]]).unwrap()).diag, vec![int(2)]);
        assert_eq!(check(&IntMatrix::from_i64_rows(&[&[-2]]).unwrap()).diag, vec![int(2)]);
        let td = IntMatrix::from_i64_rows(&[&[1, 1], &[-1, 1]]).unwrap();
        assert_eq!(check(&td).diag, vec![int(1), int(2)]);
        let d22 = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 2]]).unwrap();
        assert_eq!(check(&d22).diag, vec![int(2), int(2)]);
    }

    #[test]
    fn divisibility_chain_is_enforced() {
        // diag(2, 3) has invariant factors (1, 6).
        let a = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]).unwrap();
        assert_eq!(check(&a).diag, vec![int(1), int(6)]);
        let b = IntMatrix::from_i64_rows(&[&[4, 6, 2], &[2, -4, 8], &[6, 0, 10]]).unwrap();
        if !b.det().is_zero() {
            check(&b);
        }
        let c = IntMatrix::from_i64_rows(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, -1, 2], &[-1, 0, -1, 1]])
            .unwrap();
        assert_eq!(check(&c).diag, vec![int(1), int(1), int(1), int(2)]);
    }

    #[test]
    fn singular_rejected() {
        let a = IntMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert!(matches!(smith_normal_form(&a), Err(Error::Singular)));
    }
}
