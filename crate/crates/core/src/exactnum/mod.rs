//! Exact number tower: rationals, the `Q + Q·pi^2` extension, and the
//! combinatorial quantities built on them.

mod combinat;
mod qpi2;
mod quadrature;
mod rational;

pub use combinat::{
    binomial, catalan, central_binomial, double_factorial, factorial, odd_square_partial_sum,
    prepopulate, trigamma_half_integer,
};
pub use qpi2::{qpi2_op, QPi2, QPi2Op};
pub use quadrature::{
    central_binomial_integral_estimate, QuadratureEstimate, DEFAULT_CUTOFF, DEFAULT_STEPS,
};
pub use rational::{rat_op, BigRat, RatOp};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero: {lhs} / {rhs}")]
    DivisionByZero { lhs: String, rhs: String },
    #[error("degree overflow: ({lhs}) * ({rhs}) needs a pi^4 term")]
    DegreeOverflow { lhs: String, rhs: String },
    #[error("divisor has a nonzero pi^2 part: ({lhs}) / ({rhs})")]
    NonRationalDivisor { lhs: String, rhs: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("malformed number: {0:?}")]
    Parse(String),
}
