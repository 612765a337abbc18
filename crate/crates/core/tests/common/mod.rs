//! Strategies and property bodies shared by the property tests and the
//! acceptance runner.
#![allow(dead_code)]

pub mod grammar;

use cbc_ident::exactnum::BigRat;
use cbc_ident::powerseries::TruncSeries;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRng, TestRunner};

pub const CASES: u32 = 100;

pub fn runner() -> TestRunner {
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    let rng = TestRng::deterministic_rng(config.rng_algorithm);
    TestRunner::new_with_rng(config, rng)
}

pub fn rational() -> impl Strategy<Value = BigRat> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| BigRat::frac(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = BigRat> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

pub fn series_of(order: usize) -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec(rational(), order).prop_map(|c| TruncSeries::from_coeffs(c).unwrap())
}

/// Random series of order `2..=9`.
pub fn series() -> impl Strategy<Value = TruncSeries> {
    (2usize..=9).prop_flat_map(series_of)
}

/// Three series sharing one order.
pub fn series_triple() -> impl Strategy<Value = (TruncSeries, TruncSeries, TruncSeries)> {
    (2usize..=9).prop_flat_map(|n| (series_of(n), series_of(n), series_of(n)))
}

pub fn invertible_series() -> impl Strategy<Value = TruncSeries> {
    (nonzero_rational(), series()).prop_map(|(c0, s)| with_constant(&s, c0))
}

pub fn unit_constant_series() -> impl Strategy<Value = TruncSeries> {
    series().prop_map(|s| with_constant(&s, BigRat::one()))
}

fn with_constant(s: &TruncSeries, c0: BigRat) -> TruncSeries {
    let mut c = s.coeffs().to_vec();
    c[0] = c0;
    TruncSeries::from_coeffs(c).unwrap()
}

pub fn one(order: usize) -> TruncSeries {
    TruncSeries::constant(BigRat::one(), order)
}

pub fn ring_laws((a, b, c): (TruncSeries, TruncSeries, TruncSeries)) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.mul(&b), b.mul(&a));
    prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    prop_assert_eq!(a.add(&b), b.add(&a));
    prop_assert_eq!(a.mul(&one(a.order())), a.clone());
    Ok(())
}

/// Operands of different orders agree on their common prefix.
pub fn mixed_order_product((a, b): (TruncSeries, TruncSeries)) -> Result<(), TestCaseError> {
    let n = a.order().min(b.order());
    let ab = a.mul(&b);
    prop_assert_eq!(ab.order(), n);
    prop_assert_eq!(ab, a.truncate(n).mul(&b.truncate(n)));
    prop_assert_eq!(a.mul(&b), b.mul(&a));
    Ok(())
}

pub fn inverse_round_trip(s: TruncSeries) -> Result<(), TestCaseError> {
    let t = s.inv().unwrap();
    prop_assert_eq!(s.mul(&t), one(s.order()));
    Ok(())
}

pub fn sqrt_round_trip(s: TruncSeries) -> Result<(), TestCaseError> {
    let r = s.sqrt().unwrap();
    prop_assert_eq!(r.coeff(0).unwrap(), &BigRat::one());
    prop_assert_eq!(r.mul(&r), s);
    Ok(())
}

pub fn leibniz((a, b): (TruncSeries, TruncSeries)) -> Result<(), TestCaseError> {
    let lhs = a.mul(&b).derive().unwrap();
    let rhs = a
        .derive()
        .unwrap()
        .mul(&b)
        .add(&a.mul(&b.derive().unwrap()));
    prop_assert_eq!(lhs.first_difference(&rhs), None);
    prop_assert_eq!(lhs.order(), rhs.order());
    Ok(())
}

pub fn derive_integrate(s: TruncSeries) -> Result<(), TestCaseError> {
    prop_assert_eq!(s.integrate().derive().unwrap(), s.clone());
    let back = s.derive().unwrap().integrate();
    prop_assert_eq!(back.order(), s.order());
    let expected = s.sub(&TruncSeries::constant(
        s.coeff(0).unwrap().clone(),
        s.order(),
    ));
    prop_assert_eq!(back, expected);
    Ok(())
}

pub fn series_pair() -> impl Strategy<Value = (TruncSeries, TruncSeries)> {
    (series(), series())
}

pub fn same_order_pair() -> impl Strategy<Value = (TruncSeries, TruncSeries)> {
    (2usize..=9).prop_flat_map(|n| (series_of(n), series_of(n)))
}

/// Runs every power-series law for `CASES` cases; returns the failing
/// law's name and message on the first failure.
pub fn run_series_laws() -> Result<Vec<&'static str>, String> {
    let mut done = Vec::new();
    macro_rules! law {
        ($name:expr, $strategy:expr, $body:expr) => {{
            runner()
                .run(&$strategy, $body)
                .map_err(|e| format!("{}: {e}", $name))?;
            done.push($name);
        }};
    }
    law!("ring laws", series_triple(), ring_laws);
    law!("mixed-order product", series_pair(), mixed_order_product);
    law!(
        "inverse round-trip",
        invertible_series(),
        inverse_round_trip
    );
    law!("sqrt round-trip", unit_constant_series(), sqrt_round_trip);
    law!("Leibniz rule", series_pair(), leibniz);
    law!("derive/integrate round-trip", series(), derive_integrate);
    Ok(done)
}
