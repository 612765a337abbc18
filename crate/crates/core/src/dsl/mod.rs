//! A small language for binomial-sum identities in one free variable `n`.
//!
//! Values live in `Q + Q pi^2`: integer literals, `pi2`, the arithmetic
//! operators, `binom`, `fact`, `dfact`, `catalan`, `trigamma_half(m)`
//! (meaning `psi'(m + 1/2)`) and `sum(k=lo..hi, body)`. An empty sum is 0.

mod ast;
mod corpus;
mod eval;
mod parser;

pub use ast::{render, BinOp, Expr, Func, IdentityAst};
pub use corpus::{builtin_corpus, CorpusEntry};
pub use eval::{evaluate, Env, EvalError, EvalErrorKind, MAX_ARGUMENT, MAX_EXPONENT};
pub use parser::{
    parse, parse_at, parse_expr, parse_identity_file, NamedIdentity, ParseError, ParseErrorKind,
};

use crate::exactnum::QPi2;
use crate::identities::{sweep, IdentityError, SweepOptions, VerifyReport};

/// Both sides of `ast` at `n`.
pub fn evaluate_identity(ast: &IdentityAst, n: u64) -> Result<(QPi2, QPi2), EvalError> {
    let mut env = Env::with_n(n);
    let lhs = evaluate(&ast.lhs, &mut env)?;
    let rhs = evaluate(&ast.rhs, &mut env)?;
    Ok((lhs, rhs))
}

/// Sweeps `ast` over `n_lo..=n_hi` with the same semantics as
/// [`crate::identities::verify_range`]; evaluation errors become failures
/// at the offending `n`.
pub fn verify_ast(
    name: &str,
    ast: &IdentityAst,
    n_lo: u64,
    n_hi: u64,
    opts: SweepOptions,
) -> Result<VerifyReport, IdentityError> {
    sweep(name, None, n_lo, n_hi, opts, |n| {
        evaluate_identity(ast, n).map_err(|e| IdentityError::Eval(e.to_string()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{Failure, Status};

    const CENTRAL_SUM: &str =
        "sum(k=0..n, binom(2*k,k)/(2*k+1) * binom(2*(n-k), n-k)) == 16^n / ((2*n+1) * binom(2*n,n))";

    #[test]
    fn render_round_trip() {
        let ast = parse(CENTRAL_SUM).unwrap();
        let text = render(&ast);
        assert_eq!(parse(&text).unwrap(), ast);
        assert_eq!(render(&parse("1+2*3 == 7").unwrap()), "1 + 2 * 3 == 7");
    }

    #[test]
    fn corpus_parses_and_round_trips() {
        for entry in builtin_corpus() {
            let ast = parse(entry.text).unwrap_or_else(|e| panic!("{}: {e}", entry.spec));
            assert_eq!(parse(&render(&ast)).unwrap(), ast, "{}", entry.spec);
        }
    }

    #[test]
    fn perturbed_rhs_fails_at_zero() {
        let ast = parse(
            "sum(k=0..n, binom(2*k,k)/(2*k+1) * binom(2*(n-k), n-k)) == 16^n / ((2*n+2) * binom(2*n,n))",
        )
        .unwrap();
        let r = verify_ast("perturbed", &ast, 0, 5, SweepOptions::default()).unwrap();
        assert_eq!(r.status, Status::Fail);
        match r.first_failure.unwrap() {
            Failure::Mismatch { n, lhs, rhs } => {
                assert_eq!(n, 0);
                assert_eq!(lhs.to_compact_string(), "1");
                assert_eq!(rhs.to_compact_string(), "1/2");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn evaluation_errors_are_failures() {
        let ast = parse("1/(n-3) == 1/(n-3)").unwrap();
        let r = verify_ast("pole", &ast, 0, 5, SweepOptions::default()).unwrap();
        match r.first_failure.unwrap() {
            Failure::EvalError { n, message } => {
                assert_eq!(n, 3);
                assert!(message.contains("division by zero"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }
}
