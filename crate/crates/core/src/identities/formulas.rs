//! Exact evaluators for both sides of each built-in identity.

use crate::exactnum::{
    binomial, catalan, central_binomial, double_factorial, factorial, odd_square_partial_sum,
    trigamma_half_integer, BigRat, QPi2,
};

use super::{Form, IdentityError};

fn cb(k: u64) -> BigRat {
    central_binomial(k).into()
}

fn cat(k: u64) -> BigRat {
    catalan(k).into()
}

fn binom(n: u64, k: u64) -> BigRat {
    binomial(n, k as i64).into()
}

fn fact(n: u64) -> BigRat {
    factorial(n).into()
}

fn int(n: u64) -> BigRat {
    BigRat::from(n as i64)
}

fn div(a: BigRat, b: BigRat) -> BigRat {
    a.checked_div(&b)
        .expect("identity denominators are nonzero")
}

/// `[(2n+1)!!]^2`.
fn odd_dfact_sq(n: u64) -> BigRat {
    let d = double_factorial(2 * n as i64 + 1).expect("odd double factorial");
    BigRat::from(&d * &d)
}

/// `binom(2k,k) / binom(2(n-k+1), n-k+1)`.
fn central_ratio(n: u64, k: u64) -> BigRat {
    div(cb(k), cb(n - k + 1))
}

/// `sum_{k=0}^{n} binom(2k,k) binom(2(n-k),n-k) / (2k+1)` and
/// `2^{4n} / ((2n+1) binom(2n,n))`.
pub fn eval_central_sum(n: u64) -> (BigRat, BigRat) {
    let lhs = (0..=n)
        .map(|k| div(cb(k) * cb(n - k), int(2 * k + 1)))
        .sum();
    let rhs = div(BigRat::pow2(4 * n as i64), int(2 * n + 1) * cb(n));
    (lhs, rhs)
}

/// `2^{4n} (n!)^2 / (2n+1)!`, the closed form reached by the first proof.
pub fn closed_form_first_proof(n: u64) -> BigRat {
    let f = fact(n);
    div(BigRat::pow2(4 * n as i64) * &f * &f, fact(2 * n + 1))
}

/// `2^{4n+1} / ((n+1) binom(2n+2, n+1))`, the closed form reached by the
/// second proof.
pub fn closed_form_second_proof(n: u64) -> BigRat {
    div(BigRat::pow2(4 * n as i64 + 1), int(n + 1) * cb(n + 1))
}

/// `pi^2 - 2 psi'(n + 3/2)`. Its pi^2 part must cancel; anything else means
/// the trigamma table is wrong.
pub fn trigamma_bracket(n: u64) -> Result<BigRat, IdentityError> {
    let bracket = QPi2::pi2() - trigamma_half_integer(n + 1).scale(&BigRat::from(2));
    match bracket.as_rational() {
        Some(r) => Ok(r.clone()),
        None => Err(IdentityError::PiResidue {
            n,
            residue: bracket.to_string(),
        }),
    }
}

/// Rational prefactor of the bracket on the right of each ratio identity.
fn ratio_prefactor(variant: u8, n: u64) -> BigRat {
    let top = odd_dfact_sq(n);
    let p = BigRat::pow2(2 * n as i64 + 3);
    match variant {
        1 => div(BigRat::from(3) * top, p * fact(2 * n + 3)),
        _ => div(top, p * fact(2 * n + 2)),
    }
}

fn check_variant(variant: u8) -> Result<(), IdentityError> {
    if (1..=3).contains(&variant) {
        Ok(())
    } else {
        Err(IdentityError::Argument(format!(
            "ratio identity variant must be 1, 2 or 3, got {variant}"
        )))
    }
}

/// The three ratio identities with the trigamma bracket. The left side is
/// rational; the right side is returned in `Q + Q pi^2` form after the
/// bracket has been checked for pi^2 cancellation.
pub fn eval_ratio_identity(variant: u8, n: u64) -> Result<(BigRat, QPi2), IdentityError> {
    check_variant(variant)?;
    let lhs = (0..=n)
        .map(|k| {
            let m = n - k + 1;
            let denom = match variant {
                1 => BigRat::pow2(4 * k as i64) * int(2 * k + 1) * int(m * m),
                2 => BigRat::pow2(4 * k as i64) * int(m * m),
                _ => BigRat::pow2(4 * k as i64) * int(2 * k + 1) * int(m),
            };
            div(central_ratio(n, k), denom)
        })
        .sum();
    let bracket = QPi2::pi2() - trigamma_half_integer(n + 1).scale(&BigRat::from(2));
    if !bracket.is_rational() {
        return Err(IdentityError::PiResidue {
            n,
            residue: bracket.to_string(),
        });
    }
    let rhs = bracket.scale(&ratio_prefactor(variant, n));
    Ok((lhs, rhs))
}

/// Left side of the raw coefficient displays: the factorial form times
/// `sum_{k=0}^{n} 1/(2k+1)^2`.
fn raw_factorial_side(variant: u8, n: u64) -> BigRat {
    let s = odd_square_partial_sum(n);
    match variant {
        1 => div(BigRat::from(6) * odd_dfact_sq(n), fact(2 * n + 3)) * s,
        _ => div(BigRat::from(2) * odd_dfact_sq(n), fact(2 * n + 2)) * s,
    }
}

/// The raw coefficient-comparison displays. Variant 1 as printed carries
/// the exponent `2(n-2k)-1`; its corrected form uses `2(n-2k)+1`, as do
/// variants 2 and 3 in either form.
pub fn eval_raw_cauchy(variant: u8, form: Form, n: u64) -> Result<(BigRat, BigRat), IdentityError> {
    check_variant(variant)?;
    let lhs = raw_factorial_side(variant, n);
    let rhs = (0..=n)
        .map(|k| {
            let m = n - k + 1;
            let base = 2 * (n as i64 - 2 * k as i64);
            let exp = if variant == 1 && form == Form::Printed {
                base - 1
            } else {
                base + 1
            };
            let denom = match variant {
                1 => int(2 * k + 1) * int(m * m),
                2 => int(m * m),
                _ => int(2 * k + 1) * int(m),
            };
            div(BigRat::pow2(exp) * central_ratio(n, k), denom)
        })
        .sum();
    Ok((lhs, rhs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convolution {
    MonthlyFinal,
    Monthly,
    AlzerNagy,
    EquivalenceStep,
}

pub fn eval_convolution(id: Convolution, n: u64) -> (BigRat, BigRat) {
    match id {
        Convolution::MonthlyFinal => {
            let lhs = (0..=n).map(|k| div(cb(k) * cb(n - k), int(k + 1))).sum();
            (lhs, binom(2 * n + 1, n))
        }
        Convolution::Monthly => {
            let lhs = (0..=n)
                .map(|k| div(cb(k) * cb(n - k + 1), int(k + 1)))
                .sum();
            (lhs, BigRat::from(2) * binom(2 * n + 2, n))
        }
        Convolution::AlzerNagy => {
            let lhs = (0..=n).map(|k| cb(k) * cat(n - k)).sum();
            (lhs, cb(n + 1) * BigRat::frac(1, 2))
        }
        Convolution::EquivalenceStep => {
            let lhs = BigRat::from(2) * binom(2 * n + 2, n) + div(cb(n + 1), int(n + 2));
            (lhs, binom(2 * n + 3, n + 1))
        }
    }
}

/// Extends the `monthly` sum at `n` by its `k = n+1` term and returns it
/// next to the `monthly_final` sum at `n+1`; the two must agree term by term.
pub fn monthly_shift_equivalence(n: u64) -> (BigRat, BigRat) {
    let (monthly_lhs, _) = eval_convolution(Convolution::Monthly, n);
    let extended = monthly_lhs + div(cb(n + 1) * cb(0), int(n + 2));
    let (final_lhs, _) = eval_convolution(Convolution::MonthlyFinal, n + 1);
    (extended, final_lhs)
}

/// The Catalan-number rewrites. Indices 3-5 as printed carry the factor
/// `(n-k+2)/(k+1)`; the corrected forms carry `(k+1)/(n-k+2)`, which is what
/// `binom(2k,k) = (k+1) C_k` forces.
pub fn eval_catalan_rewrite(
    index: u8,
    form: Form,
    n: u64,
) -> Result<(BigRat, BigRat), IdentityError> {
    match (index, form) {
        (1 | 2, Form::Corrected) => {
            return Err(IdentityError::FormNotApplicable {
                id: format!("catalan_rw{index}"),
                form: form.as_str().into(),
            })
        }
        (1..=5, _) => {}
        _ => {
            return Err(IdentityError::Argument(format!(
                "catalan rewrite index must be 1..5, got {index}"
            )))
        }
    }
    let pair = match index {
        1 => {
            let lhs = (0..=n).map(|k| int(n - k + 1) * cat(k) * cat(n - k)).sum();
            (lhs, binom(2 * n + 1, n))
        }
        2 => {
            let lhs = (0..=n)
                .map(|k| {
                    div(
                        int(k + 1) * int(n - k + 1) * cat(k) * cat(n - k),
                        int(2 * k + 1),
                    )
                })
                .sum();
            let rhs = div(
                BigRat::pow2(4 * n as i64),
                int(2 * n + 1) * int(n + 1) * cat(n),
            );
            (lhs, rhs)
        }
        _ => {
            let lhs = (0..=n)
                .map(|k| {
                    let m = n - k + 1;
                    let factor = match form {
                        Form::Printed => div(int(n - k + 2), int(k + 1)),
                        Form::Corrected => div(int(k + 1), int(n - k + 2)),
                    };
                    let denom = match index {
                        3 => BigRat::pow2(4 * k as i64) * int(2 * k + 1) * int(m * m),
                        4 => BigRat::pow2(4 * k as i64) * int(m * m),
                        _ => BigRat::pow2(4 * k as i64) * int(2 * k + 1) * int(m),
                    };
                    div(factor * cat(k), denom * cat(m))
                })
                .sum();
            let top = odd_dfact_sq(n) * odd_square_partial_sum(n);
            let p = BigRat::pow2(2 * n as i64);
            let rhs = match index {
                3 => div(BigRat::from(3) * top, p * fact(2 * n + 3)),
                _ => div(top, p * fact(2 * n + 2)),
            };
            (lhs, rhs)
        }
    };
    Ok(pair)
}

/// Rebuilds the ratio identity of `variant` from the corrected raw display:
/// both raw sides divided by `2^{2n+1}`, with the odd-square sum on the
/// factorial side replaced by `(pi^2 - 2 psi'(n+3/2))/8` in `Q + Q pi^2`.
/// Returns `(raw-derived lhs, raw-derived rhs)` for comparison with
/// [`eval_ratio_identity`].
pub fn substitution_from_raw(variant: u8, n: u64) -> Result<(BigRat, QPi2), IdentityError> {
    check_variant(variant)?;
    let (_, raw_rhs) = eval_raw_cauchy(variant, Form::Corrected, n)?;
    let scale = BigRat::pow2(-(2 * n as i64 + 1));
    let factorial_part = match variant {
        1 => div(BigRat::from(6) * odd_dfact_sq(n), fact(2 * n + 3)),
        _ => div(BigRat::from(2) * odd_dfact_sq(n), fact(2 * n + 2)),
    };
    let bracket = QPi2::pi2() - trigamma_half_integer(n + 1).scale(&BigRat::from(2));
    let substituted = bracket.scale(&(factorial_part * BigRat::frac(1, 8) * &scale));
    Ok((raw_rhs * scale, substituted))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(n: i64, d: i64) -> BigRat {
        BigRat::frac(n, d)
    }

    #[test]
    fn central_sum_small() {
        assert_eq!(eval_central_sum(0), (BigRat::one(), BigRat::one()));
        // 1*2/1 + 2*1/3
        assert_eq!(eval_central_sum(1), (fr(8, 3), fr(8, 3)));
        // 1*6 + 2*2/3 + 6/5 = 128/15
        let (l, r) = eval_central_sum(2);
        assert_eq!(l, fr(128, 15));
        assert_eq!(l, r);
    }

    #[test]
    fn closed_forms_agree() {
        for n in 0..=60 {
            let (_, rhs) = eval_central_sum(n);
            assert_eq!(closed_form_first_proof(n), rhs);
            assert_eq!(closed_form_second_proof(n), rhs);
        }
    }

    #[test]
    fn ratio_identity_spot_values() {
        let expect = [
            (1, 0, fr(1, 2)),
            (2, 0, fr(1, 2)),
            (3, 0, fr(1, 2)),
            (1, 1, fr(1, 16)),
            (2, 1, fr(5, 48)),
            (3, 1, fr(5, 48)),
            (1, 2, fr(37, 3840)),
            (2, 2, fr(259, 11520)),
        ];
        for (v, n, value) in expect {
            let (l, r) = eval_ratio_identity(v, n).unwrap();
            assert_eq!(l, value, "variant {v} n {n}");
            assert_eq!(r, QPi2::rational(value));
        }
        assert!(matches!(
            eval_ratio_identity(4, 0),
            Err(IdentityError::Argument(_))
        ));
    }

    #[test]
    fn trigamma_bracket_values() {
        assert_eq!(trigamma_bracket(0).unwrap(), BigRat::from(8));
        assert_eq!(trigamma_bracket(1).unwrap(), fr(80, 9));
    }

    #[test]
    fn raw_displays() {
        assert_eq!(
            eval_raw_cauchy(1, Form::Printed, 0).unwrap(),
            (BigRat::one(), fr(1, 4))
        );
        assert_eq!(
            eval_raw_cauchy(1, Form::Corrected, 0).unwrap(),
            (BigRat::one(), BigRat::one())
        );
        assert_eq!(
            eval_raw_cauchy(2, Form::Printed, 0).unwrap(),
            (BigRat::one(), BigRat::one())
        );
        assert_eq!(
            eval_raw_cauchy(1, Form::Printed, 1).unwrap(),
            (fr(1, 2), fr(1, 8))
        );
        assert_eq!(
            eval_raw_cauchy(3, Form::Printed, 1).unwrap(),
            (fr(5, 6), fr(5, 6))
        );
    }

    #[test]
    fn convolution_spot_values() {
        let three = BigRat::from(3);
        assert_eq!(
            eval_convolution(Convolution::MonthlyFinal, 1),
            (three.clone(), three.clone())
        );
        assert_eq!(
            eval_convolution(Convolution::AlzerNagy, 1),
            (three.clone(), three.clone())
        );
        assert_eq!(
            eval_convolution(Convolution::EquivalenceStep, 0),
            (three.clone(), three)
        );
        assert_eq!(
            eval_convolution(Convolution::Monthly, 0),
            (BigRat::from(2), BigRat::from(2))
        );
        for n in 0..20 {
            let (a, b) = monthly_shift_equivalence(n);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn catalan_rewrites() {
        let three = BigRat::from(3);
        assert_eq!(
            eval_catalan_rewrite(1, Form::Printed, 1).unwrap(),
            (three.clone(), three)
        );
        assert_eq!(
            eval_catalan_rewrite(3, Form::Printed, 0).unwrap(),
            (BigRat::from(2), fr(1, 2))
        );
        assert_eq!(
            eval_catalan_rewrite(3, Form::Corrected, 0).unwrap(),
            (fr(1, 2), fr(1, 2))
        );
        assert_eq!(
            eval_catalan_rewrite(4, Form::Printed, 1).unwrap().0,
            fr(7, 16)
        );
        assert_eq!(
            eval_catalan_rewrite(5, Form::Corrected, 1).unwrap(),
            (fr(5, 48), fr(5, 48))
        );
        assert!(matches!(
            eval_catalan_rewrite(2, Form::Corrected, 0),
            Err(IdentityError::FormNotApplicable { .. })
        ));
        assert!(matches!(
            eval_catalan_rewrite(6, Form::Printed, 0),
            Err(IdentityError::Argument(_))
        ));
    }

    #[test]
    fn substitution_matches_ratio_identity() {
        for v in 1..=3 {
            for n in 0..15 {
                let (l, r) = substitution_from_raw(v, n).unwrap();
                let (tl, tr) = eval_ratio_identity(v, n).unwrap();
                assert_eq!(l, tl);
                assert_eq!(r, tr);
            }
        }
    }
}
