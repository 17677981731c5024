mod common;

use common::*;
use matradix::linalg::spectral::{dilation_check, sigma_bounds};
use matradix::linalg::sqrt::{sqrt_interval, Interval};
use matradix::scalar::{rat, to_f64};
use matradix::{mu_exceeds, smith_normal_form, verify_dilation, BigInt, BigRational, IntMatrix};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

#[test]
fn golden_determinants_and_inverses() {
    assert_eq!(twin_dragon().det(), BigInt::from(2));
    assert_eq!(lagarias_wang().det(), BigInt::from(2));
    let inv = m(&[&[0, 2], &[-2, 0]]).rational_inverse().unwrap();
    assert_eq!(inv.entries(), &[rat(0, 1), rat(-1, 2), rat(1, 2), rat(0, 1)]);
    assert_eq!(lagarias_wang().charpoly(), v(&[2, 0, 1, 0, 1]));
}

#[test]
fn golden_dilations() {
    assert!(verify_dilation(&two()));
    assert!(verify_dilation(&neg_two()));
    assert!(verify_dilation(&twin_dragon()));
    assert!(verify_dilation(&lagarias_wang()));
    assert!(!verify_dilation(&m(&[&[2, -2], &[-1, 2]])));
    assert!(!verify_dilation(&m(&[&[1, 0], &[0, 1]])));
    assert!(dilation_check(&m(&[&[0, -1], &[1, 0]])).unit_circle_root);
    assert!(dilation_check(&m(&[&[-1]])).unit_circle_root);
}

fn pair(max_n: usize, r: i64) -> impl Strategy<Value = (IntMatrix, IntMatrix)> {
    (1..=max_n).prop_flat_map(move |n| {
        let e = || proptest::collection::vec(-r..=r, n * n);
        (e(), e()).prop_map(move |(x, y)| (from_flat(n, &x), from_flat(n, &y)))
    })
}

fn is_unimodular(u: &IntMatrix) -> bool {
    u.det().abs().is_one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn det_is_multiplicative((a, b) in pair(4, 5)) {
        prop_assert_eq!(a.mul(&b).det(), a.det() * b.det());
        prop_assert_eq!(a.transpose().det(), a.det());
    }

    #[test]
    fn det_matches_float_oracle(a in int_matrix(4, 6)) {
        let exact = to_f64(&BigRational::from_integer(a.det()));
        prop_assert!((to_na(&a).determinant() - exact).abs() < 1e-6 * (1.0 + exact.abs()));
    }

    #[test]
    fn inverse_is_exact(a in int_matrix(4, 6)) {
        match a.rational_inverse() {
            Ok(inv) => {
                prop_assert_eq!(a.to_rational().mul(&inv), matradix::RatMatrix::identity(a.dim()));
                let adj = a.adjugate().unwrap();
                prop_assert_eq!(a.mul(&adj), IntMatrix::scalar(a.dim(), a.det()));
            }
            Err(_) => prop_assert!(a.det().is_zero()),
        }
    }

    #[test]
    fn charpoly_has_det_and_trace(a in int_matrix(4, 6)) {
        let c = a.charpoly();
        let n = a.dim();
        prop_assert_eq!(c.len(), n + 1);
        prop_assert!(c[n].is_one());
        prop_assert_eq!(-&c[n - 1], a.trace());
        let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        prop_assert_eq!(&c[0] * sign, a.det());
    }

    #[test]
    fn smith_form_is_certified(a in int_matrix(4, 6)) {
        prop_assume!(!a.det().is_zero());
        let s = smith_normal_form(&a).unwrap();
        let d = IntMatrix::diagonal(s.diag.clone()).unwrap();
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), d);
        prop_assert!(is_unimodular(&s.u) && is_unimodular(&s.v));
        for w in s.diag.windows(2) {
            prop_assert!(w[0].is_positive());
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        let prod: BigInt = s.diag.iter().product();
        prop_assert_eq!(prod, a.det().abs());
    }

    #[test]
    fn sigma_bracket_contains_float_values(a in int_matrix(4, 6)) {
        prop_assume!(!a.det().is_zero());
        let (lo, hi) = sigma_bounds(&a).unwrap();
        let (smin, smax) = singular_values(&a);
        prop_assert!(to_f64(&lo) <= smin * (1.0 + 1e-9) + 1e-12);
        prop_assert!(to_f64(&hi) >= smax * (1.0 - 1e-9) - 1e-12);
    }

    #[test]
    fn mu_exceeds_agrees_with_svd(a in int_matrix(3, 6), t in 0i64..40) {
        let t_sq = rat(t, 4);
        let (smin, _) = singular_values(&a);
        let gap = smin * smin - to_f64(&t_sq);
        if gap.abs() > 1e-7 {
            prop_assert_eq!(mu_exceeds(&a, &t_sq), gap > 0.0);
        }
    }

    #[test]
    fn mu_exceeds_is_monotone(a in int_matrix(3, 6), t1 in 0i64..60, t2 in 0i64..60) {
        let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
        if mu_exceeds(&a, &rat(hi, 4)) {
            prop_assert!(mu_exceeds(&a, &rat(lo, 4)));
        }
    }

    #[test]
    fn sqrt_enclosures(p in 0i64..100_000, q in 1i64..1000) {
        let x = rat(p, q);
        let Interval { lo, hi } = sqrt_interval(&x, 40);
        prop_assert!(&lo * &lo <= x && x <= &hi * &hi);
        prop_assert!(hi - lo <= rat(1, 1 << 20));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dilation_test_matches_eigenvalue_oracle(a in int_matrix(4, 5)) {
        let moduli = eigen_moduli(&a);
        let min = moduli.iter().cloned().fold(f64::INFINITY, f64::min);
        let exact = verify_dilation(&a);
        if (min - 1.0).abs() > 1e-6 {
            prop_assert_eq!(exact, min > 1.0, "moduli {:?}", moduli);
        } else if exact {
            prop_assert!(min > 1.0 - 1e-6);
        }
    }
}
