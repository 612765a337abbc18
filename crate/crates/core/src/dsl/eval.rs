use std::fmt;

use num_bigint::BigInt;

use crate::exactnum::{
    binomial, catalan, double_factorial, factorial, trigamma_half_integer, ArithError, BigRat, QPi2,
};

use super::ast::{BinOp, Expr, Func};

/// Largest exponent magnitude `^` accepts.
pub const MAX_EXPONENT: i64 = 1 << 20;
/// Largest argument accepted by `fact`, `dfact`, `binom`, `catalan`.
pub const MAX_ARGUMENT: i64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalErrorKind {
    DivisionByZero,
    DegreeOverflow,
    NonRationalDivisor,
    NonIntegerExponent,
    NonIntegerSumBound,
    NonIntegerArgument,
    Domain(String),
    TooLarge,
    UnboundVariable(String),
}

/// An evaluation failure with the text of the offending subexpression.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct EvalError {
    pub kind: EvalErrorKind,
    pub subexpr: String,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match &self.kind {
            EvalErrorKind::DivisionByZero => "division by zero".to_string(),
            EvalErrorKind::DegreeOverflow => "pi^2 * pi^2 degree overflow".to_string(),
            EvalErrorKind::NonRationalDivisor => "divisor with nonzero pi^2 part".to_string(),
            EvalErrorKind::NonIntegerExponent => "non-integer exponent".to_string(),
            EvalErrorKind::NonIntegerSumBound => "non-integer sum bound".to_string(),
            EvalErrorKind::NonIntegerArgument => "non-integer function argument".to_string(),
            EvalErrorKind::Domain(msg) => format!("domain error ({msg})"),
            EvalErrorKind::TooLarge => "value too large to evaluate".to_string(),
            EvalErrorKind::UnboundVariable(v) => format!("unbound variable {v}"),
        };
        write!(f, "{what} in `{}`", self.subexpr)
    }
}

fn fail(kind: EvalErrorKind, e: &Expr) -> EvalError {
    EvalError {
        kind,
        subexpr: e.to_string(),
    }
}

fn arith(err: ArithError, e: &Expr) -> EvalError {
    let kind = match err {
        ArithError::DivisionByZero { .. } => EvalErrorKind::DivisionByZero,
        ArithError::DegreeOverflow { .. } => EvalErrorKind::DegreeOverflow,
        ArithError::NonRationalDivisor { .. } => EvalErrorKind::NonRationalDivisor,
        ArithError::Domain(m) | ArithError::Parse(m) => EvalErrorKind::Domain(m),
    };
    fail(kind, e)
}

/// Variable bindings; later entries shadow earlier ones.
#[derive(Debug, Clone, Default)]
pub struct Env {
    vars: Vec<(String, BigInt)>,
}

impl Env {
    /// The environment with only `n` bound.
    pub fn with_n(n: u64) -> Self {
        Env {
            vars: vec![("n".to_string(), BigInt::from(n))],
        }
    }

    pub fn bind(&mut self, name: &str, value: BigInt) {
        self.vars.push((name.to_string(), value));
    }

    fn lookup(&self, name: &str) -> Option<&BigInt> {
        self.vars
            .iter()
            .rev()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v)
    }
}

fn integer_of(v: &QPi2, kind: EvalErrorKind, e: &Expr) -> Result<BigInt, EvalError> {
    v.as_rational()
        .and_then(BigRat::to_integer)
        .ok_or_else(|| fail(kind, e))
}

fn small(v: &BigInt, limit: i64, e: &Expr) -> Result<i64, EvalError> {
    i64::try_from(v)
        .ok()
        .filter(|x| x.abs() <= limit)
        .ok_or_else(|| fail(EvalErrorKind::TooLarge, e))
}

fn nonneg(v: i64, what: &str, e: &Expr) -> Result<u64, EvalError> {
    u64::try_from(v).map_err(|_| fail(EvalErrorKind::Domain(format!("{what} of {v}")), e))
}

/// Exact value of `e` under `env`.
pub fn evaluate(e: &Expr, env: &mut Env) -> Result<QPi2, EvalError> {
    match e {
        Expr::Int(n) => Ok(QPi2::rational(BigRat::from_integer(n.clone()))),
        Expr::Var(name) => env
            .lookup(name)
            .map(|v| QPi2::rational(BigRat::from_integer(v.clone())))
            .ok_or_else(|| fail(EvalErrorKind::UnboundVariable(name.clone()), e)),
        Expr::Pi2 => Ok(QPi2::pi2()),
        Expr::Neg(inner) => Ok(-evaluate(inner, env)?),
        Expr::Binary(op, l, r) => {
            let a = evaluate(l, env)?;
            let b = evaluate(r, env)?;
            match op {
                BinOp::Add => Ok(a + b),
                BinOp::Sub => Ok(a - b),
                BinOp::Mul => a.checked_mul(&b).map_err(|err| arith(err, e)),
                BinOp::Div => a.checked_div(&b).map_err(|err| arith(err, e)),
                BinOp::Pow => {
                    let exp = integer_of(&b, EvalErrorKind::NonIntegerExponent, e)?;
                    let exp = small(&exp, MAX_EXPONENT, e)?;
                    a.pow_i64(exp).map_err(|err| arith(err, e))
                }
            }
        }
        Expr::Call(func, args) => {
            let mut ints = Vec::with_capacity(args.len());
            for a in args {
                let v = evaluate(a, env)?;
                let i = integer_of(&v, EvalErrorKind::NonIntegerArgument, e)?;
                ints.push(small(&i, MAX_ARGUMENT, e)?);
            }
            let value: QPi2 = match func {
                Func::Binom => {
                    let top = nonneg(ints[0], "binom top", e)?;
                    BigRat::from(binomial(top, ints[1])).into()
                }
                Func::Fact => BigRat::from(factorial(nonneg(ints[0], "fact", e)?)).into(),
                Func::Dfact => {
                    BigRat::from(double_factorial(ints[0]).map_err(|err| arith(err, e))?).into()
                }
                Func::Catalan => BigRat::from(catalan(nonneg(ints[0], "catalan", e)?)).into(),
                Func::TrigammaHalf => trigamma_half_integer(nonneg(ints[0], "trigamma_half", e)?),
            };
            Ok(value)
        }
        Expr::Sum { var, lo, hi, body } => {
            let lo_v = evaluate(lo, env)?;
            let hi_v = evaluate(hi, env)?;
            let lo_i = integer_of(&lo_v, EvalErrorKind::NonIntegerSumBound, e)?;
            let hi_i = integer_of(&hi_v, EvalErrorKind::NonIntegerSumBound, e)?;
            let mut acc = QPi2::zero();
            if lo_i > hi_i {
                return Ok(acc);
            }
            let (a, b) = (small(&lo_i, i64::MAX, e)?, small(&hi_i, i64::MAX, e)?);
            if b - a > MAX_ARGUMENT {
                return Err(fail(EvalErrorKind::TooLarge, e));
            }
            for k in a..=b {
                env.bind(var, BigInt::from(k));
                let term = evaluate(body, env);
                env.vars.pop();
                acc = acc + term?;
            }
            Ok(acc)
        }
    }
}
