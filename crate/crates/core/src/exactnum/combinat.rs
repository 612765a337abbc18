//! Closed-form combinatorial quantities: factorials, binomials, Catalan
//! numbers, odd-square partial sums and half-integer trigamma values.
//!
//! Factorials, central binomials and odd-square partial sums live in
//! process-wide growable tables. Readers share a lock; growth takes the
//! write lock and extends the table up to the requested index.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{ArithError, BigRat, QPi2};

/// A prefix table `t[0], t[1], ...` where `t[i]` is derived from `t[i-1]`.
struct GrowTable<T> {
    values: RwLock<Vec<T>>,
    step: fn(&T, u64) -> T,
}

impl<T: Clone> GrowTable<T> {
    fn new(first: T, step: fn(&T, u64) -> T) -> Self {
        GrowTable {
            values: RwLock::new(vec![first]),
            step,
        }
    }

    fn get(&self, idx: u64) -> T {
        let i = idx as usize;
        {
            let table = self.values.read().unwrap_or_else(|e| e.into_inner());
            if let Some(v) = table.get(i) {
                return v.clone();
            }
        }
        let mut table = self.values.write().unwrap_or_else(|e| e.into_inner());
        while table.len() <= i {
            let next = (self.step)(table.last().unwrap(), table.len() as u64);
            table.push(next);
        }
        table[i].clone()
    }
}

static FACTORIALS: LazyLock<GrowTable<BigUint>> =
    LazyLock::new(|| GrowTable::new(BigUint::one(), |prev, n| prev * n));

// binom(2n, n) = binom(2n-2, n-1) * 2(2n-1) / n
static CENTRAL: LazyLock<GrowTable<BigUint>> =
    LazyLock::new(|| GrowTable::new(BigUint::one(), |prev, n| prev * (2 * (2 * n - 1)) / n));

static ODD_SQUARE_SUMS: LazyLock<GrowTable<BigRat>> = LazyLock::new(|| {
    GrowTable::new(BigRat::one(), |prev, n| {
        let d = i64::try_from((2 * n + 1) * (2 * n + 1)).expect("odd square overflow");
        prev + BigRat::frac(1, d)
    })
});

/// Fills the memo tables up to `n` so parallel sweeps only ever read.
pub fn prepopulate(n: u64) {
    FACTORIALS.get(2 * n + 4);
    CENTRAL.get(n + 2);
    ODD_SQUARE_SUMS.get(n + 1);
}

pub fn factorial(n: u64) -> BigUint {
    FACTORIALS.get(n)
}

/// `m!! = m(m-2)(m-4)...`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(m: i64) -> Result<BigUint, ArithError> {
    if m < -1 {
        return Err(ArithError::Domain(format!("double factorial of {m}")));
    }
    let mut acc = BigUint::one();
    let mut k = m;
    while k > 1 {
        acc *= k as u64;
        k -= 2;
    }
    Ok(acc)
}

/// `binom(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = k as u64;
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `binom(2n, n)`.
pub fn central_binomial(n: u64) -> BigUint {
    CENTRAL.get(n)
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigUint {
    let (q, r) = central_binomial(n).div_rem(&BigUint::from(n + 1));
    assert!(r.is_zero(), "binom(2n,n) not divisible by n+1 at n={n}");
    q
}

/// `sum_{k=0}^{n} 1/(2k+1)^2`.
pub fn odd_square_partial_sum(n: u64) -> BigRat {
    ODD_SQUARE_SUMS.get(n)
}

/// `psi'(m + 1/2) = pi^2/2 - 4 sum_{k=1}^{m} 1/(2k-1)^2`.
pub fn trigamma_half_integer(m: u64) -> QPi2 {
    let r = if m == 0 {
        BigRat::zero()
    } else {
        -(odd_square_partial_sum(m - 1) * BigRat::from(4))
    };
    QPi2::new(r, BigRat::frac(1, 2))
}
