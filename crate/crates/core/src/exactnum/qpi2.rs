use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use super::{ArithError, BigRat};

/// An element `r + p·π²` of the rational vector space spanned by 1 and π².
///
/// Multiplication is only defined when at least one factor is rational,
/// since π⁴ has no representation here.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPi2 {
    /// Rational part.
    pub r: BigRat,
    /// Coefficient of π².
    pub p: BigRat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QPi2Op {
    Add,
    Sub,
    Mul,
}

/// Componentwise `add`/`sub`, or the restricted product.
pub fn qpi2_op(kind: QPi2Op, a: &QPi2, b: &QPi2) -> Result<QPi2, ArithError> {
    match kind {
        QPi2Op::Add => Ok(a + b),
        QPi2Op::Sub => Ok(a - b),
        QPi2Op::Mul => a.checked_mul(b),
    }
}

impl QPi2 {
    pub fn new(r: BigRat, p: BigRat) -> Self {
        QPi2 { r, p }
    }

    pub fn rational(r: BigRat) -> Self {
        QPi2 {
            r,
            p: BigRat::zero(),
        }
    }

    /// π² itself.
    pub fn pi2() -> Self {
        QPi2 {
            r: BigRat::zero(),
            p: BigRat::one(),
        }
    }

    pub fn zero() -> Self {
        QPi2::default()
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.p.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.p.is_zero()
    }

    /// The rational part, if the π² component vanishes.
    pub fn as_rational(&self) -> Option<&BigRat> {
        self.is_rational().then_some(&self.r)
    }

    pub fn scale(&self, c: &BigRat) -> QPi2 {
        QPi2 {
            r: &self.r * c,
            p: &self.p * c,
        }
    }

    pub fn checked_mul(&self, rhs: &QPi2) -> Result<QPi2, ArithError> {
        if let Some(c) = rhs.as_rational() {
            Ok(self.scale(c))
        } else if let Some(c) = self.as_rational() {
            Ok(rhs.scale(c))
        } else {
            Err(ArithError::DegreeOverflow {
                lhs: self.to_string(),
                rhs: rhs.to_string(),
            })
        }
    }

    /// Division by a value with zero π² part.
    pub fn checked_div(&self, rhs: &QPi2) -> Result<QPi2, ArithError> {
        match rhs.as_rational() {
            Some(c) if c.is_zero() => Err(ArithError::DivisionByZero {
                lhs: self.to_string(),
                rhs: rhs.to_string(),
            }),
            Some(c) => Ok(self.scale(&c.recip()?)),
            None => Err(ArithError::NonRationalDivisor {
                lhs: self.to_string(),
                rhs: rhs.to_string(),
            }),
        }
    }

    /// Integer power. A π² base is allowed only for exponents 0 and 1; a
    /// negative exponent needs a nonzero rational base.
    pub fn pow_i64(&self, exp: i64) -> Result<QPi2, ArithError> {
        match self.as_rational() {
            Some(c) => Ok(QPi2::rational(c.pow_i64(exp)?)),
            None => match exp {
                0 => Ok(QPi2::rational(BigRat::one())),
                1 => Ok(self.clone()),
                e if e < 0 => Err(ArithError::NonRationalDivisor {
                    lhs: "1".into(),
                    rhs: self.to_string(),
                }),
                _ => Err(ArithError::DegreeOverflow {
                    lhs: self.to_string(),
                    rhs: self.to_string(),
                }),
            },
        }
    }

    /// Text form for reports: bare rational when the π² part vanishes,
    /// otherwise the full `r + p*pi^2` form.
    pub fn to_compact_string(&self) -> String {
        match self.as_rational() {
            Some(r) => r.to_string(),
            None => self.to_string(),
        }
    }
}

impl From<BigRat> for QPi2 {
    fn from(r: BigRat) -> Self {
        QPi2::rational(r)
    }
}

impl fmt::Display for QPi2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*pi^2", self.r, self.p)
    }
}

impl fmt::Debug for QPi2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QPi2 {
    type Err = ArithError;

    /// Accepts the `r + p*pi^2` form, or a bare rational.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let Some(head) = t.strip_suffix("*pi^2") else {
            return Ok(QPi2::rational(t.parse()?));
        };
        let (r, p) = head
            .split_once(" + ")
            .ok_or_else(|| ArithError::Parse(s.to_string()))?;
        Ok(QPi2::new(r.parse()?, p.parse()?))
    }
}

impl Add<&QPi2> for &QPi2 {
    type Output = QPi2;
    fn add(self, rhs: &QPi2) -> QPi2 {
        QPi2 {
            r: &self.r + &rhs.r,
            p: &self.p + &rhs.p,
        }
    }
}

impl Add for QPi2 {
    type Output = QPi2;
    fn add(self, rhs: QPi2) -> QPi2 {
        &self + &rhs
    }
}

impl Sub<&QPi2> for &QPi2 {
    type Output = QPi2;
    fn sub(self, rhs: &QPi2) -> QPi2 {
        QPi2 {
            r: &self.r - &rhs.r,
            p: &self.p - &rhs.p,
        }
    }
}

impl Sub for QPi2 {
    type Output = QPi2;
    fn sub(self, rhs: QPi2) -> QPi2 {
        &self - &rhs
    }
}

impl Neg for QPi2 {
    type Output = QPi2;
    fn neg(self) -> QPi2 {
        QPi2 {
            r: -self.r,
            p: -self.p,
        }
    }
}

impl Neg for &QPi2 {
    type Output = QPi2;
    fn neg(self) -> QPi2 {
        QPi2 {
            r: -&self.r,
            p: -&self.p,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(r: i64, p: i64) -> QPi2 {
        QPi2::new(r.into(), p.into())
    }

    #[test]
    fn componentwise_add() {
        assert_eq!(qpi2_op(QPi2Op::Add, &q(1, 1), &q(2, -1)).unwrap(), q(3, 0));
        assert_eq!(qpi2_op(QPi2Op::Sub, &q(1, 1), &q(2, -1)).unwrap(), q(-1, 2));
    }

    #[test]
    fn scale_and_mul() {
        let half = BigRat::frac(1, 2);
        assert_eq!(
            QPi2::pi2().scale(&half),
            QPi2::new(BigRat::zero(), half.clone())
        );
        assert_eq!(qpi2_op(QPi2Op::Mul, &q(2, 0), &q(1, 3)).unwrap(), q(2, 6));
        assert_eq!(qpi2_op(QPi2Op::Mul, &q(1, 3), &q(2, 0)).unwrap(), q(2, 6));
    }

    #[test]
    fn pi4_is_degree_overflow() {
        let err = qpi2_op(QPi2Op::Mul, &QPi2::pi2(), &QPi2::pi2()).unwrap_err();
        assert!(matches!(err, ArithError::DegreeOverflow { .. }));
        assert!(matches!(
            QPi2::pi2().pow_i64(2),
            Err(ArithError::DegreeOverflow { .. })
        ));
        assert_eq!(QPi2::pi2().pow_i64(0).unwrap(), q(1, 0));
    }

    #[test]
    fn division() {
        assert_eq!(q(4, 2).checked_div(&q(2, 0)).unwrap(), q(2, 1));
        assert!(matches!(
            q(1, 0).checked_div(&q(0, 0)),
            Err(ArithError::DivisionByZero { .. })
        ));
        assert!(matches!(
            q(1, 0).checked_div(&q(0, 1)),
            Err(ArithError::NonRationalDivisor { .. })
        ));
    }

    #[test]
    fn text_form() {
        let v = QPi2::new(BigRat::frac(-40, 9), BigRat::frac(1, 2));
        assert_eq!(v.to_string(), "-40/9 + 1/2*pi^2");
        assert_eq!(v.to_string().parse::<QPi2>().unwrap(), v);
        assert_eq!(q(3, 0).to_compact_string(), "3");
        assert_eq!(
            "5/6".parse::<QPi2>().unwrap(),
            QPi2::rational(BigRat::frac(5, 6))
        );
        assert!("1 + x*pi^2".parse::<QPi2>().is_err());
    }
}
