#![allow(dead_code)]

use matradix::{verify_dilation, BigInt, IntMatrix, Matrix};
use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64_rows(rows).unwrap()
}

pub fn v(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn two() -> IntMatrix {
    m(&[&[2]])
}

pub fn neg_two() -> IntMatrix {
    m(&[&[-2]])
}

pub fn twin_dragon() -> IntMatrix {
    m(&[&[1, 1], &[-1, 1]])
}

pub fn lagarias_wang() -> IntMatrix {
    m(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, -1, 2], &[-1, 0, -1, 1]])
}

pub fn from_flat(n: usize, entries: &[i64]) -> IntMatrix {
    Matrix::from_rows(entries.chunks(n).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap()
}

/// Square integer matrices of size `1..=max_n` with entries in `[-r, r]`.
pub fn int_matrix(max_n: usize, r: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(move |n| proptest::collection::vec(-r..=r, n * n).prop_map(move |e| from_flat(n, &e)))
}

pub fn dilation(max_n: usize, r: i64) -> impl Strategy<Value = IntMatrix> {
    int_matrix(max_n, r).prop_filter("dilation", verify_dilation)
}

pub fn to_na(a: &IntMatrix) -> DMatrix<f64> {
    let f = a.to_f64();
    DMatrix::from_row_slice(a.dim(), a.dim(), f.entries())
}

/// Eigenvalue moduli from a floating-point Schur decomposition.
pub fn eigen_moduli(a: &IntMatrix) -> Vec<f64> {
    to_na(a).complex_eigenvalues().iter().map(|z| z.norm()).collect()
}

pub fn singular_values(a: &IntMatrix) -> (f64, f64) {
    let s = to_na(a).singular_values();
    (s.min(), s.max())
}

/// `count` seeded random dilations, `n ≤ max_n`, entries in `[-r, r]`.
pub fn random_dilations(seed: u64, count: usize, max_n: usize, r: i64) -> Vec<IntMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=max_n);
        let e: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-r..=r)).collect();
        let a = from_flat(n, &e);
        if verify_dilation(&a) {
            out.push(a);
        }
    }
    out
}

/// All integer points of `[-r, r]ⁿ`.
pub fn cube(n: usize, r: i64) -> Vec<Vec<BigInt>> {
    matradix::points::BoxPoints::new(vec![(BigInt::from(-r), BigInt::from(r)); n]).collect()
}
