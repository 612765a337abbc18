use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use super::ArithError;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigRat(BigRational);

/// The four field operations accepted by [`rat_op`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `kind` to `a` and `b`. Division by zero is the only failure.
pub fn rat_op(kind: RatOp, a: &BigRat, b: &BigRat) -> Result<BigRat, ArithError> {
    Ok(match kind {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => a.checked_div(b)?,
    })
}

impl BigRat {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, ArithError> {
        let num = num.into();
        let den = den.into();
        if den.is_zero() {
            return Err(ArithError::DivisionByZero {
                lhs: num.to_string(),
                rhs: "0".into(),
            });
        }
        let g = gcd(&num, &den);
        let g = if den.is_negative() { -g } else { g };
        Ok(BigRat::from_reduced(num / &g, den / g))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        BigRat(BigRational::from_integer(n.into()))
    }

    /// `num / den` for machine-sized operands; panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "BigRat::frac with zero denominator");
        BigRat(BigRational::new(num.into(), den.into()))
    }

    pub fn zero() -> Self {
        BigRat(BigRational::zero())
    }

    pub fn one() -> Self {
        BigRat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The integer value if the denominator is 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    /// The value as an `i64` if it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| i64::try_from(n).ok())
    }

    pub fn checked_div(&self, rhs: &BigRat) -> Result<BigRat, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero {
                lhs: self.to_string(),
                rhs: rhs.to_string(),
            });
        }
        Ok(self.product(&rhs.recip_unchecked()))
    }

    pub fn recip(&self) -> Result<BigRat, ArithError> {
        BigRat::one().checked_div(self)
    }

    /// Integer power; a negative exponent needs a nonzero base.
    pub fn pow_i64(&self, exp: i64) -> Result<BigRat, ArithError> {
        if exp >= 0 {
            Ok(BigRat(Pow::pow(&self.0, exp as u64)))
        } else {
            let inv = self.recip()?;
            Ok(BigRat(Pow::pow(&inv.0, exp.unsigned_abs())))
        }
    }

    /// `2^exp` for any integer exponent.
    pub fn pow2(exp: i64) -> BigRat {
        let p = BigUint::one() << exp.unsigned_abs();
        if exp >= 0 {
            BigRat::from_integer(BigInt::from(p))
        } else {
            BigRat(BigRational::new(BigInt::one(), BigInt::from(p)))
        }
    }

    pub fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self.0).unwrap_or(f64::NAN)
    }
}

impl fmt::Display for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for BigRat {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithError::Parse(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                BigRat::new(n, d)
            }
            None => Ok(BigRat::from_integer(
                s.parse::<BigInt>().map_err(|_| bad())?,
            )),
        }
    }
}

impl From<i64> for BigRat {
    fn from(n: i64) -> Self {
        BigRat::from_integer(n)
    }
}

impl From<BigInt> for BigRat {
    fn from(n: BigInt) -> Self {
        BigRat::from_integer(n)
    }
}

impl From<BigUint> for BigRat {
    fn from(n: BigUint) -> Self {
        BigRat::from_integer(BigInt::from(n))
    }
}

impl From<BigRational> for BigRat {
    fn from(r: BigRational) -> Self {
        BigRat(r)
    }
}

/// `gcd(a, b) >= 0`. num-integer's binary gcd is slow when the operands
/// differ greatly in size, which is the common case here (a big numerator
/// against a small denominator), so reduce by one remainder first.
pub(crate) fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (big, small) = if a.bits() >= b.bits() { (a, b) } else { (b, a) };
    if small.is_zero() {
        return big.abs();
    }
    if small.bits() <= 64 {
        let word = small.magnitude().to_u64_digits()[0];
        return gcd_with_small(big, word);
    }
    if big.bits() > 2 * small.bits() {
        let r = big % small;
        return num_integer::Integer::gcd(small, &r);
    }
    num_integer::Integer::gcd(big, small)
}

/// `gcd(big, small)` via one big-by-small remainder.
fn gcd_with_small(big: &BigInt, small: u64) -> BigInt {
    let r = (big % small)
        .magnitude()
        .to_u64_digits()
        .first()
        .copied()
        .unwrap_or(0);
    BigInt::from(num_integer::Integer::gcd(&r, &small))
}

impl BigRat {
    /// Wraps parts already in lowest terms with a positive denominator.
    fn from_reduced(num: BigInt, den: BigInt) -> BigRat {
        debug_assert!(den.is_positive());
        BigRat(BigRational::new_raw(num, den))
    }

    fn sum_with(&self, rhs: &BigRat, negate: bool) -> BigRat {
        let (a, b) = (self.0.numer(), self.0.denom());
        let (c, d) = (rhs.0.numer(), rhs.0.denom());
        let c = if negate { -c } else { c.clone() };
        if b.is_one() && d.is_one() {
            return BigRat::from_reduced(a + c, BigInt::one());
        }
        // Knuth, TAOCP 4.5.1
        let g = gcd(b, d);
        if g.is_one() {
            return BigRat::from_reduced(a * d + c * b, b * d);
        }
        let t = a * (d / &g) + c * (b / &g);
        let g2 = gcd(&t, &g);
        BigRat::from_reduced(t / &g2, (b / &g) * (d / g2))
    }

    fn product(&self, rhs: &BigRat) -> BigRat {
        let (a, b) = (self.0.numer(), self.0.denom());
        let (c, d) = (rhs.0.numer(), rhs.0.denom());
        let g1 = gcd(a, d);
        let g2 = gcd(c, b);
        if g1.is_one() && g2.is_one() {
            return BigRat::from_reduced(a * c, b * d);
        }
        BigRat::from_reduced((a / &g1) * (c / &g2), (b / g2) * (d / g1))
    }

    /// `1/self` for nonzero `self`.
    fn recip_unchecked(&self) -> BigRat {
        let (n, d) = (self.0.numer(), self.0.denom());
        if n.is_negative() {
            BigRat::from_reduced(-d, -n)
        } else {
            BigRat::from_reduced(d.clone(), n.clone())
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&BigRat> for &BigRat {
            type Output = BigRat;
            fn $method(self, rhs: &BigRat) -> BigRat {
                $body(self, rhs)
            }
        }
        impl $tr<BigRat> for BigRat {
            type Output = BigRat;
            fn $method(self, rhs: BigRat) -> BigRat {
                $body(&self, &rhs)
            }
        }
        impl $tr<&BigRat> for BigRat {
            type Output = BigRat;
            fn $method(self, rhs: &BigRat) -> BigRat {
                $body(&self, rhs)
            }
        }
        impl $tr<BigRat> for &BigRat {
            type Output = BigRat;
            fn $method(self, rhs: BigRat) -> BigRat {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &BigRat, b: &BigRat| a.sum_with(b, false));
forward_binop!(Sub, sub, |a: &BigRat, b: &BigRat| a.sum_with(b, true));
forward_binop!(Mul, mul, |a: &BigRat, b: &BigRat| a.product(b));

impl AddAssign<&BigRat> for BigRat {
    fn add_assign(&mut self, rhs: &BigRat) {
        *self = self.sum_with(rhs, false);
    }
}

impl SubAssign<&BigRat> for BigRat {
    fn sub_assign(&mut self, rhs: &BigRat) {
        *self = self.sum_with(rhs, true);
    }
}

impl MulAssign<&BigRat> for BigRat {
    fn mul_assign(&mut self, rhs: &BigRat) {
        *self = self.product(rhs);
    }
}

impl Neg for BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        BigRat(-self.0)
    }
}

impl Neg for &BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        BigRat(-&self.0)
    }
}

/// Sums over the least common denominator and reduces once at the end.
/// Term denominators in the identity sums are mostly single machine
/// words, so the per-term gcd is cheap where a reducing add is not.
impl Sum for BigRat {
    fn sum<I: Iterator<Item = BigRat>>(iter: I) -> Self {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for x in iter {
            let (p, q) = x.0.into_raw();
            let g = gcd(&den, &q);
            let q_over_g = &q / &g;
            num = num * &q_over_g + p * (&den / &g);
            den *= q_over_g;
        }
        let g = gcd(&num, &den);
        BigRat::from_reduced(num / &g, den / g)
    }
}

impl Product for BigRat {
    fn product<I: Iterator<Item = BigRat>>(iter: I) -> Self {
        iter.fold(BigRat::one(), |acc, x| acc * x)
    }
}
