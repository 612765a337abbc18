//! Named series built from their own closed-form coefficient formulas,
//! plus a self-consistency suite relating them through series arithmetic.

use std::time::Instant;

use crate::exactnum::{
    central_binomial, double_factorial, factorial, odd_square_partial_sum, BigRat, QPi2,
};
use crate::identities::{Failure, Status, VerifyReport};
use crate::powerseries::{SeriesError, TruncSeries};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("series {name} needs order at least {min}, got {order}")]
    OrderTooSmall {
        name: &'static str,
        min: usize,
        order: usize,
    },
    #[error("unknown series name {0:?}")]
    UnknownSeries(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Names accepted by [`series_by_name`].
pub const SERIES_NAMES: [&str; 6] = [
    "arcsin",
    "arcsin_sq",
    "arcsin_cubed",
    "inv_sqrt",
    "lehmer",
    "arcsin_sq_over_sqrt",
];

fn check_order(name: &'static str, order: usize, min: usize) -> Result<(), CatalogError> {
    if order < min {
        Err(CatalogError::OrderTooSmall { name, min, order })
    } else {
        Ok(())
    }
}

fn central(k: usize) -> BigRat {
    central_binomial(k as u64).into()
}

fn odd_dfact_squared(l: usize) -> BigRat {
    let d = double_factorial(2 * l as i64 + 1).expect("odd double factorial");
    BigRat::from(&d * &d)
}

fn fact(n: usize) -> BigRat {
    factorial(n as u64).into()
}

/// `arcsin x = sum_l binom(2l,l) x^{2l+1} / (4^l (2l+1))`.
pub fn arcsin_series(order: usize) -> Result<TruncSeries, CatalogError> {
    check_order("arcsin", order, 2)?;
    Ok(TruncSeries::from_fn(order, |j| {
        if j % 2 == 0 {
            return BigRat::zero();
        }
        let l = j / 2;
        central(l) * BigRat::pow2(-2 * l as i64) * BigRat::frac(1, 2 * l as i64 + 1)
    }))
}

/// `(arcsin x)^2 = (1/2) sum_{l>=1} (2x)^{2l} / (l^2 binom(2l,l))`.
pub fn arcsin_squared_series(order: usize) -> Result<TruncSeries, CatalogError> {
    check_order("arcsin_sq", order, 3)?;
    Ok(TruncSeries::from_fn(order, |j| {
        if j == 0 || j % 2 == 1 {
            return BigRat::zero();
        }
        let l = j / 2;
        let denom = BigRat::from((l * l) as i64) * central(l);
        BigRat::pow2(2 * l as i64 - 1)
            .checked_div(&denom)
            .expect("nonzero")
    }))
}

/// `(arcsin x)^3 = 3! sum_l [(2l+1)!!]^2 S(l) x^{2l+3} / (2l+3)!` with
/// `S(l) = sum_{k=0}^{l} 1/(2k+1)^2`.
pub fn arcsin_cubed_series(order: usize) -> Result<TruncSeries, CatalogError> {
    check_order("arcsin_cubed", order, 4)?;
    Ok(TruncSeries::from_fn(order, |j| {
        if j < 3 || j % 2 == 0 {
            return BigRat::zero();
        }
        let l = (j - 3) / 2;
        let num = BigRat::from(6) * odd_dfact_squared(l) * odd_square_partial_sum(l as u64);
        num.checked_div(&fact(2 * l + 3)).expect("nonzero")
    }))
}

/// `1/sqrt(1-4x^2) = sum_k binom(2k,k) x^{2k}`.
pub fn inv_sqrt_series(order: usize) -> Result<TruncSeries, CatalogError> {
    check_order("inv_sqrt", order, 1)?;
    Ok(TruncSeries::from_fn(order, |j| {
        if j % 2 == 0 {
            central(j / 2)
        } else {
            BigRat::zero()
        }
    }))
}

/// `1/sqrt(1-x^2)`, obtained from [`inv_sqrt_series`] by `x -> x/2`.
///
/// This is the only place the two normalizations are related.
pub fn inv_sqrt_unit_series(order: usize) -> Result<TruncSeries, CatalogError> {
    Ok(inv_sqrt_series(order)?.scale_arg(&BigRat::frac(1, 2)))
}

/// `2x arcsin x / sqrt(1-x^2) = sum_{l>=1} (2x)^{2l} / (l binom(2l,l))`.
pub fn lehmer_series(order: usize) -> Result<TruncSeries, CatalogError> {
    check_order("lehmer", order, 3)?;
    Ok(TruncSeries::from_fn(order, |j| {
        if j == 0 || j % 2 == 1 {
            return BigRat::zero();
        }
        let l = j / 2;
        let denom = BigRat::from(l as i64) * central(l);
        BigRat::pow2(2 * l as i64)
            .checked_div(&denom)
            .expect("nonzero")
    }))
}

/// `(arcsin x)^2 / sqrt(1-x^2) = 2! sum_n [(2n+1)!!]^2 S(n) x^{2n+2} / (2n+2)!`.
pub fn arcsin_sq_over_sqrt_series(order: usize) -> Result<TruncSeries, CatalogError> {
    check_order("arcsin_sq_over_sqrt", order, 3)?;
    Ok(TruncSeries::from_fn(order, |j| {
        if j < 2 || j % 2 == 1 {
            return BigRat::zero();
        }
        let n = (j - 2) / 2;
        let num = BigRat::from(2) * odd_dfact_squared(n) * odd_square_partial_sum(n as u64);
        num.checked_div(&fact(2 * n + 2)).expect("nonzero")
    }))
}

pub fn series_by_name(name: &str, order: usize) -> Result<TruncSeries, CatalogError> {
    match name {
        "arcsin" => arcsin_series(order),
        "arcsin_sq" => arcsin_squared_series(order),
        "arcsin_cubed" => arcsin_cubed_series(order),
        "inv_sqrt" => inv_sqrt_series(order),
        "lehmer" => lehmer_series(order),
        "arcsin_sq_over_sqrt" => arcsin_sq_over_sqrt_series(order),
        other => Err(CatalogError::UnknownSeries(other.to_string())),
    }
}

/// `1/sqrt(1-x^2)` rebuilt by series arithmetic from `1 - x^2`.
fn inv_sqrt_unit_by_recurrence(order: usize) -> Result<TruncSeries, SeriesError> {
    let one_minus_x2 = TruncSeries::from_fn(order, |j| match j {
        0 => BigRat::one(),
        2 => -BigRat::one(),
        _ => BigRat::zero(),
    });
    one_minus_x2.sqrt()?.inv()
}

/// The two sides of one consistency check.
#[derive(Debug, Clone)]
pub struct ConsistencyCheck {
    pub label: &'static str,
    pub description: &'static str,
    pub lhs: TruncSeries,
    pub rhs: TruncSeries,
}

impl ConsistencyCheck {
    pub fn report(&self, order: usize, elapsed_ms: f64) -> VerifyReport {
        let first_failure = self
            .lhs
            .first_difference(&self.rhs)
            .map(|j| Failure::Mismatch {
                n: j as u64,
                lhs: QPi2::rational(self.lhs.coeffs()[j].clone()),
                rhs: QPi2::rational(self.rhs.coeffs()[j].clone()),
            });
        let compared = self.lhs.order().min(self.rhs.order());
        VerifyReport {
            identity: format!("consistency.{}", self.label),
            form: None,
            n_lo: 0,
            n_hi: compared.saturating_sub(1) as u64,
            status: if first_failure.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            values_checked: compared as u64,
            failure_count: u64::from(first_failure.is_some()),
            first_failure,
            elapsed_ms,
            note: Some(format!(
                "{} (mod x^{compared}, catalog order {order})",
                self.description
            )),
        }
    }
}

/// The six pairs (a)-(f), built from the given `arcsin` series so that
/// faults can be injected into it; every other named series comes from its
/// own formula.
pub fn consistency_pairs(
    arcsin: &TruncSeries,
    order: usize,
) -> Result<Vec<ConsistencyCheck>, CatalogError> {
    check_order("consistency", order, 8)?;
    let arcsin_sq = arcsin_squared_series(order)?;
    let arcsin_cubed = arcsin_cubed_series(order)?;
    let lehmer = lehmer_series(order)?;
    let sq_over_sqrt = arcsin_sq_over_sqrt_series(order)?;
    let inv_sqrt_unit = inv_sqrt_unit_by_recurrence(order)?;

    let two = BigRat::from(2);
    let x = TruncSeries::from_fn(order, |j| {
        if j == 1 {
            BigRat::one()
        } else {
            BigRat::zero()
        }
    });

    Ok(vec![
        ConsistencyCheck {
            label: "a",
            description: "arcsin * arcsin = arcsin^2",
            lhs: arcsin.mul(arcsin),
            rhs: arcsin_sq.clone(),
        },
        ConsistencyCheck {
            label: "b",
            description: "arcsin^2 * arcsin = arcsin^3",
            lhs: arcsin_sq.mul(arcsin),
            rhs: arcsin_cubed.clone(),
        },
        ConsistencyCheck {
            label: "c",
            description: "d/dx arcsin = 1/sqrt(1-x^2)",
            lhs: arcsin.derive()?,
            rhs: inv_sqrt_unit.clone(),
        },
        ConsistencyCheck {
            label: "d",
            description: "lehmer / x = 2 arcsin / sqrt(1-x^2)",
            lhs: lehmer.shift(-1)?,
            rhs: arcsin.scale(&two).mul(&inv_sqrt_unit),
        },
        ConsistencyCheck {
            label: "e",
            description: "d/dx arcsin^3 = 3 arcsin^2 / sqrt(1-x^2)",
            lhs: arcsin_cubed.derive()?,
            rhs: sq_over_sqrt.scale(&BigRat::from(3)),
        },
        ConsistencyCheck {
            label: "f",
            description: "x * d/dx arcsin^2 = lehmer",
            lhs: arcsin_sq.derive()?.mul(&x),
            rhs: lehmer,
        },
    ])
}

/// Runs checks (a)-(f) at `order`, one report per check.
pub fn catalog_consistency(order: usize) -> Result<Vec<VerifyReport>, CatalogError> {
    check_order("consistency", order, 8)?;
    let start = Instant::now();
    let arcsin = arcsin_series(order)?;
    let pairs = consistency_pairs(&arcsin, order)?;
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    Ok(pairs.iter().map(|p| p.report(order, elapsed)).collect())
}
