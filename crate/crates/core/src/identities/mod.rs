//! Hand-coded checkers for every built-in identity, in both the printed and
//! the corrected form where a display is refuted by exact evaluation.

mod formulas;
mod report;
mod sweep;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

pub use formulas::{
    closed_form_first_proof, closed_form_second_proof, eval_catalan_rewrite, eval_central_sum,
    eval_convolution, eval_ratio_identity, eval_raw_cauchy, monthly_shift_equivalence,
    substitution_from_raw, trigamma_bracket, Convolution,
};
pub use report::{Failure, Status, VerifyReport};
pub use sweep::{sweep, SweepOptions};

use crate::catalog::{arcsin_series, inv_sqrt_series};
use crate::exactnum::{prepopulate, BigRat, QPi2};
use crate::powerseries::TruncSeries;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdentityError {
    #[error("unknown identity id {0:?}")]
    UnknownId(String),
    #[error("identity {id} has no {form} form")]
    FormNotApplicable { id: String, form: String },
    #[error("unknown form {0:?} (expected printed or corrected)")]
    UnknownForm(String),
    #[error("empty range: {lo}..{hi}")]
    InvalidRange { lo: u64, hi: u64 },
    #[error("internal consistency: pi^2 part of the trigamma bracket does not cancel at n={n}: {residue}")]
    PiResidue { n: u64, residue: String },
    #[error("{0}")]
    Argument(String),
    /// A side could not be evaluated; recorded as a failure by sweeps.
    #[error("{0}")]
    Eval(String),
    #[error("series construction failed: {0}")]
    Series(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    Printed,
    Corrected,
}

impl Form {
    pub fn as_str(self) -> &'static str {
        match self {
            Form::Printed => "printed",
            Form::Corrected => "corrected",
        }
    }
}

impl FromStr for Form {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "printed" => Ok(Form::Printed),
            "corrected" => Ok(Form::Corrected),
            other => Err(IdentityError::UnknownForm(other.to_string())),
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    CentralSum,
    Ratio(u8),
    RawCauchy(u8),
    MonthlyFinal,
    Monthly,
    AlzerNagy,
    EquivalenceStep,
    CatalanRewrite(u8),
}

impl IdentityId {
    pub const ALL: [IdentityId; 16] = [
        IdentityId::CentralSum,
        IdentityId::Ratio(1),
        IdentityId::Ratio(2),
        IdentityId::Ratio(3),
        IdentityId::RawCauchy(1),
        IdentityId::RawCauchy(2),
        IdentityId::RawCauchy(3),
        IdentityId::MonthlyFinal,
        IdentityId::Monthly,
        IdentityId::AlzerNagy,
        IdentityId::EquivalenceStep,
        IdentityId::CatalanRewrite(1),
        IdentityId::CatalanRewrite(2),
        IdentityId::CatalanRewrite(3),
        IdentityId::CatalanRewrite(4),
        IdentityId::CatalanRewrite(5),
    ];

    pub fn name(self) -> String {
        match self {
            IdentityId::CentralSum => "thm2.1".into(),
            IdentityId::Ratio(v) => format!("thm3.1{}", (b'a' + v - 1) as char),
            IdentityId::RawCauchy(v) => format!("raw3.{v}"),
            IdentityId::MonthlyFinal => "monthly_final".into(),
            IdentityId::Monthly => "monthly".into(),
            IdentityId::AlzerNagy => "alzer_nagy".into(),
            IdentityId::EquivalenceStep => "equivalence_step".into(),
            IdentityId::CatalanRewrite(i) => format!("catalan_rw{i}"),
        }
    }

    /// Whether the id distinguishes printed and corrected forms.
    pub fn has_forms(self) -> bool {
        matches!(
            self,
            IdentityId::RawCauchy(_) | IdentityId::CatalanRewrite(_)
        )
    }

    /// Forms in which the identity can be evaluated.
    pub fn forms(self) -> &'static [Form] {
        match self {
            IdentityId::RawCauchy(_) | IdentityId::CatalanRewrite(3..=5) => {
                &[Form::Printed, Form::Corrected]
            }
            IdentityId::CatalanRewrite(_) => &[Form::Printed],
            _ => &[],
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            IdentityId::CentralSum => {
                "sum binom(2k,k) binom(2(n-k),n-k)/(2k+1) = 2^{4n}/((2n+1) binom(2n,n))"
            }
            IdentityId::Ratio(1) => "ratio sum over (2k+1)(n-k+1)^2 with trigamma bracket",
            IdentityId::Ratio(2) => "ratio sum over (n-k+1)^2 with trigamma bracket",
            IdentityId::Ratio(_) => "ratio sum over (2k+1)(n-k+1) with trigamma bracket",
            IdentityId::RawCauchy(1) => "arcsin^3 coefficient comparison",
            IdentityId::RawCauchy(2) => "arcsin^2/sqrt(1-x^2) coefficient comparison via arcsin^2",
            IdentityId::RawCauchy(_) => "arcsin^2/sqrt(1-x^2) coefficient comparison via lehmer",
            IdentityId::MonthlyFinal => "sum binom(2k,k) binom(2(n-k),n-k)/(k+1) = binom(2n+1,n)",
            IdentityId::Monthly => "sum binom(2k,k) binom(2(n-k+1),n-k+1)/(k+1) = 2 binom(2n+2,n)",
            IdentityId::AlzerNagy => "sum B_k C_{n-k} = B_{n+1}/2",
            IdentityId::EquivalenceStep => {
                "2 binom(2n+2,n) + binom(2n+2,n+1)/(n+2) = binom(2n+3,n+1)"
            }
            IdentityId::CatalanRewrite(_) => "Catalan-number rewrite",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for IdentityId {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| IdentityError::UnknownId(s.to_string()))
    }
}

/// An identity together with the form it is evaluated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentitySpec {
    pub id: IdentityId,
    /// `None` exactly for ids without a printed/corrected distinction.
    pub form: Option<Form>,
}

impl IdentitySpec {
    pub fn new(id: IdentityId, form: Option<Form>) -> Result<Self, IdentityError> {
        let form = match (id.has_forms(), form) {
            (false, _) => None,
            (true, None) => Some(Form::Printed),
            (true, Some(f)) if id.forms().contains(&f) => Some(f),
            (true, Some(f)) => {
                return Err(IdentityError::FormNotApplicable {
                    id: id.name(),
                    form: f.to_string(),
                })
            }
        };
        Ok(IdentitySpec { id, form })
    }

    pub fn description(&self) -> &'static str {
        self.id.description()
    }

    /// Both sides at `n`, in `Q + Q pi^2`.
    pub fn evaluate(&self, n: u64) -> Result<(QPi2, QPi2), IdentityError> {
        let form = self.form.unwrap_or(Form::Printed);
        let rat = |(l, r): (BigRat, BigRat)| (QPi2::rational(l), QPi2::rational(r));
        Ok(match self.id {
            IdentityId::CentralSum => rat(eval_central_sum(n)),
            IdentityId::Ratio(v) => {
                let (l, r) = eval_ratio_identity(v, n)?;
                (QPi2::rational(l), r)
            }
            IdentityId::RawCauchy(v) => rat(eval_raw_cauchy(v, form, n)?),
            IdentityId::MonthlyFinal => rat(eval_convolution(Convolution::MonthlyFinal, n)),
            IdentityId::Monthly => rat(eval_convolution(Convolution::Monthly, n)),
            IdentityId::AlzerNagy => rat(eval_convolution(Convolution::AlzerNagy, n)),
            IdentityId::EquivalenceStep => rat(eval_convolution(Convolution::EquivalenceStep, n)),
            IdentityId::CatalanRewrite(i) => rat(eval_catalan_rewrite(i, form, n)?),
        })
    }
}

impl fmt::Display for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.form {
            Some(form) => write!(f, "{}({form})", self.id),
            None => write!(f, "{}", self.id),
        }
    }
}

/// Sweeps `spec` over `n_lo..=n_hi`.
pub fn verify_range(
    spec: &IdentitySpec,
    n_lo: u64,
    n_hi: u64,
    opts: SweepOptions,
) -> Result<VerifyReport, IdentityError> {
    if n_lo > n_hi {
        return Err(IdentityError::InvalidRange { lo: n_lo, hi: n_hi });
    }
    prepopulate(n_hi + 2);
    let form = spec.form.map(Form::as_str);
    sweep(&spec.id.name(), form, n_lo, n_hi, opts, |n| {
        spec.evaluate(n)
    })
}

/// Which closed form the Cauchy-product coefficients are compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// `2^{4n} (n!)^2 / (2n+1)!`, via the derivative of `arcsin^2`.
    A,
    /// `2^{4n+1} / ((n+1) binom(2n+2,n+1))`, via the Lehmer series.
    B,
}

/// `arcsin(2x)/(2x) * 1/sqrt(1-4x^2)` as a Cauchy product of catalog series,
/// known mod `x^{2 n_max + 2}`.
pub fn cauchy_product_series(n_max: u64) -> Result<TruncSeries, IdentityError> {
    let order = 2 * n_max as usize + 2;
    let series_err = |e: crate::catalog::CatalogError| IdentityError::Series(e.to_string());
    // one extra term: dividing by x drops one
    let arcsin = arcsin_series(order + 1).map_err(series_err)?;
    let over_2x = arcsin
        .scale_arg(&BigRat::from(2))
        .shift(-1)
        .map_err(|e| IdentityError::Series(e.to_string()))?
        .scale(&BigRat::frac(1, 2));
    let inv_sqrt = inv_sqrt_series(order).map_err(series_err)?;
    Ok(over_2x.mul(&inv_sqrt))
}

/// Compares the coefficient of `x^{2n}` of the Cauchy product with the
/// closed form of `route` for every `n <= n_max`.
pub fn coefficient_route_check(route: Route, n_max: u64) -> Result<VerifyReport, IdentityError> {
    let start = Instant::now();
    let product = cauchy_product_series(n_max)?;
    let closed = match route {
        Route::A => closed_form_first_proof,
        Route::B => closed_form_second_proof,
    };
    let mut report = sweep(
        &format!("route.{route:?}"),
        None,
        0,
        n_max,
        SweepOptions::default(),
        |n| {
            let c = product
                .coeff(2 * n as usize)
                .map_err(|e| IdentityError::Series(e.to_string()))?;
            Ok((QPi2::rational(c.clone()), QPi2::rational(closed(n))))
        },
    )?;
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    report.note = Some(format!("Cauchy product known mod x^{}", product.order()));
    Ok(report)
}

/// Every identity/form pair the errata run covers.
pub fn errata_specs() -> Vec<IdentitySpec> {
    IdentityId::ALL
        .into_iter()
        .filter(|id| matches!(id, IdentityId::RawCauchy(_) | IdentityId::CatalanRewrite(_)))
        .flat_map(|id| {
            id.forms()
                .iter()
                .map(move |&f| IdentitySpec { id, form: Some(f) })
        })
        .collect()
}
