//! Strategies and fixtures shared by the integration tests.
#![allow(dead_code)]

pub mod checks;

use std::path::PathBuf;

use num::{BigInt, Zero};
use proptest::prelude::*;

use k3_octic::kodaira::WeierstrassModel;
use k3_octic::{QPoly, Zeta8, Q};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn poly(coeffs: &[i64]) -> QPoly {
    QPoly::from_ints(coeffs)
}

pub fn example_model() -> WeierstrassModel {
    WeierstrassModel::k3(poly(&[0, 0, 0, 1, 0, -2, 0, 1]), QPoly::zero()).unwrap()
}

pub fn generic_model() -> WeierstrassModel {
    WeierstrassModel::k3(poly(&[0, -6, 0, 11, 0, -6, 0, 1]), QPoly::zero()).unwrap()
}

pub fn rational() -> impl Strategy<Value = Q> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Q::new(BigInt::from(n), BigInt::from(d)))
}

pub fn nonzero_rational() -> impl Strategy<Value = Q> {
    rational().prop_filter("nonzero", |q| !q.is_zero())
}

pub fn zeta8() -> impl Strategy<Value = Zeta8> {
    prop::array::uniform4(rational()).prop_map(|[a, b, c, d]| Zeta8::new(a, b, c, d))
}

pub fn qpoly(max_len: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(QPoly::new)
}

pub fn nonconstant_qpoly(max_degree: usize) -> impl Strategy<Value = QPoly> {
    (prop::collection::vec(rational(), 1..=max_degree), nonzero_rational()).prop_map(|(mut c, lead)| {
        c.push(lead);
        QPoly::new(c)
    })
}

/// Non-constant polynomial with small integer coefficients.
pub fn small_int_poly(max_degree: usize) -> impl Strategy<Value = QPoly> {
    (
        prop::collection::vec(-5i64..=5, 1..=max_degree),
        prop::sample::select(vec![-2i64, -1, 1, 2, 3]),
    )
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            poly(&c)
        })
}

/// A nonzero product of powers of random polynomials, with its factors.
pub fn factored_product() -> impl Strategy<Value = (QPoly, Vec<(QPoly, u32)>)> {
    (
        nonzero_rational(),
        prop::collection::vec((small_int_poly(3), 1u32..=3), 0..=4),
    )
        .prop_map(|(c, factors)| {
            let mut p = QPoly::constant(c);
            for (f, e) in &factors {
                p = &p * &f.pow(*e);
            }
            (p, factors)
        })
}

/// Minimal Weierstrass models assembled from linear factors: at every root
/// vA < 4 or vB < 6, and the bundle degree is as small as the degrees allow,
/// so infinity is minimal too.
pub fn minimal_model() -> impl Strategy<Value = WeierstrassModel> {
    let pairs: Vec<(u32, u32)> = (0..=4)
        .flat_map(|ea| (0..=6).map(move |eb| (ea, eb)))
        .filter(|&(ea, eb)| ea < 4 || eb < 6)
        .collect();
    let roots = prop::sample::subsequence((-6i64..=6).collect::<Vec<_>>(), 1..=5);
    (
        roots,
        prop::collection::vec(prop::sample::select(pairs), 5),
        0u8..6,
        nonzero_rational(),
        nonzero_rational(),
    )
        .prop_filter_map("discriminant vanishes", |(roots, exps, zero_flag, ca, cb)| {
            let a_zero = zero_flag == 0;
            let b_zero = zero_flag == 1;
            let mut a = QPoly::constant(ca);
            let mut b = QPoly::constant(cb);
            for (&c, &(ea, eb)) in roots.iter().zip(&exps) {
                if a_zero && eb >= 6 || b_zero && ea >= 4 {
                    return None;
                }
                let lin = poly(&[-c, 1]);
                a = &a * &lin.pow(ea);
                b = &b * &lin.pow(eb);
            }
            if a_zero {
                a = QPoly::zero();
            }
            if b_zero {
                b = QPoly::zero();
            }
            let da = a.degree().unwrap_or(0);
            let db = b.degree().unwrap_or(0);
            let n = da.div_ceil(4).max(db.div_ceil(6)) as u32;
            let model = WeierstrassModel::with_bundle_degree(a, b, n).ok()?;
            let disc = k3_octic::kodaira::discriminant(&model).ok()?;
            (!disc.is_zero()).then_some(model)
        })
}
