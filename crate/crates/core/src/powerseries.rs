//! Truncated formal power series over exact rationals.
//!
//! A [`TruncSeries`] of order `N` stores `c_0, ..., c_{N-1}` and is known
//! modulo `x^N`. Binary operations truncate to the smaller operand order;
//! `derive`, `integrate` and `shift` change the order by the amounts stated
//! on each method. Reading past the order is an error, never an implicit
//! zero.

use std::fmt;

use crate::exactnum::BigRat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("a series needs at least one coefficient")]
    Empty,
    #[error("coefficient of x^{index} requested from a series known mod x^{order}")]
    OutOfRange { index: usize, order: usize },
    #[error("cannot differentiate a series of order 1")]
    DeriveOrderOne,
    #[error("series is not divisible by x^{power}: coefficient of x^{index} is {value}")]
    NotDivisible {
        power: usize,
        index: usize,
        value: String,
    },
    #[error("shift by {shift} leaves no known coefficients")]
    ShiftTooFar { shift: i64 },
    #[error("series has zero constant term and no inverse")]
    NotInvertible,
    #[error("square root needs constant term 1, found {0}")]
    SqrtConstant(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigRat>,
}

impl TruncSeries {
    pub fn from_coeffs(values: Vec<BigRat>) -> Result<Self, SeriesError> {
        if values.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(TruncSeries { coeffs: values })
    }

    /// Builds `sum_j f(j) x^j` mod `x^order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> BigRat) -> Self {
        assert!(order > 0, "series order must be positive");
        TruncSeries {
            coeffs: (0..order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| BigRat::zero())
    }

    pub fn constant(c: BigRat, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Result<&BigRat, SeriesError> {
        self.coeffs.get(j).ok_or(SeriesError::OutOfRange {
            index: j,
            order: self.order(),
        })
    }

    /// Drops coefficients beyond `order`; no-op if already shorter.
    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order()).max(1);
        TruncSeries {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigRat) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigRat, &BigRat) -> BigRat) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f(a, b))
            .collect();
        TruncSeries { coeffs }
    }

    /// Cauchy product, `c_n = sum_{k=0}^{n} a_k b_{n-k}`, mod `x^min(orders)`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let a = &self.coeffs;
        let b = &other.coeffs;
        Self::from_fn(order, |n| {
            let mut acc = BigRat::zero();
            for k in 0..=n {
                if a[k].is_zero() || b[n - k].is_zero() {
                    continue;
                }
                acc += &(&a[k] * &b[n - k]);
            }
            acc
        })
    }

    /// Formal derivative; the result has order `N - 1`.
    pub fn derive(&self) -> Result<Self, SeriesError> {
        if self.order() < 2 {
            return Err(SeriesError::DeriveOrderOne);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(j, c)| c * BigRat::from(j as i64 + 1))
            .collect();
        Ok(TruncSeries { coeffs })
    }

    /// Antiderivative with zero constant term; the result has order `N + 1`.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(BigRat::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| c * BigRat::frac(1, j as i64 + 1)),
        );
        TruncSeries { coeffs }
    }

    /// Substitutes `c·x` for `x`: coefficient `j` is multiplied by `c^j`.
    pub fn scale_arg(&self, c: &BigRat) -> Self {
        let mut power = BigRat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a * &power;
                power *= c;
                v
            })
            .collect();
        TruncSeries { coeffs }
    }

    /// Multiplies by `x^k`; the order becomes `N + k`. For negative `k`
    /// the first `|k|` coefficients must be exactly zero.
    pub fn shift(&self, k: i64) -> Result<Self, SeriesError> {
        if k >= 0 {
            let mut coeffs = vec![BigRat::zero(); k as usize];
            coeffs.extend(self.coeffs.iter().cloned());
            return Ok(TruncSeries { coeffs });
        }
        let drop = k.unsigned_abs() as usize;
        if drop >= self.order() {
            return Err(SeriesError::ShiftTooFar { shift: k });
        }
        if let Some((index, value)) = self.coeffs[..drop]
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
        {
            return Err(SeriesError::NotDivisible {
                power: drop,
                index,
                value: value.to_string(),
            });
        }
        Ok(TruncSeries {
            coeffs: self.coeffs[drop..].to_vec(),
        })
    }

    /// Multiplicative inverse mod `x^N` by the direct recurrence
    /// `t_0 = 1/s_0`, `t_n = -(1/s_0) sum_{j=1}^{n} s_j t_{n-j}`.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        let s = &self.coeffs;
        let inv0 = s[0].recip().map_err(|_| SeriesError::NotInvertible)?;
        let mut t: Vec<BigRat> = Vec::with_capacity(s.len());
        t.push(inv0.clone());
        for n in 1..s.len() {
            let mut acc = BigRat::zero();
            for j in 1..=n {
                if !s[j].is_zero() && !t[n - j].is_zero() {
                    acc += &(&s[j] * &t[n - j]);
                }
            }
            t.push(-(acc * &inv0));
        }
        Ok(TruncSeries { coeffs: t })
    }

    /// Square root with constant term 1, mod `x^N`, by
    /// `t_n = (s_n - sum_{j=1}^{n-1} t_j t_{n-j}) / 2`.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let s = &self.coeffs;
        if !s[0].is_one() {
            return Err(SeriesError::SqrtConstant(s[0].to_string()));
        }
        let half = BigRat::frac(1, 2);
        let mut t: Vec<BigRat> = Vec::with_capacity(s.len());
        t.push(BigRat::one());
        for n in 1..s.len() {
            let mut acc = s[n].clone();
            for j in 1..n {
                if !t[j].is_zero() && !t[n - j].is_zero() {
                    acc -= &(&t[j] * &t[n - j]);
                }
            }
            t.push(acc * &half);
        }
        Ok(TruncSeries { coeffs: t })
    }

    /// First index `j < min(orders)` where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    /// One `j<TAB>num/den` line per coefficient.
    pub fn to_tsv(&self) -> String {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| format!("{j}\t{c}\n"))
            .collect()
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                f.write_str(" + ")?;
            }
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{j}")?,
            }
        }
        write!(f, " (mod x^{})", self.order())
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
