//! Exact Fibonacci, Lucas, seeded generalized Fibonacci, and Hosoya-entry
//! scalars, including the standard negative-index extensions
//! F(-n) = (-1)^(n+1) F(n) and L(-n) = (-1)^n L(n).
//!
//! Values are computed iteratively over big integers; there is no floating
//! point anywhere. Positive-index Fibonacci and Lucas values are memoized in
//! thread-local tables, so concurrent callers see identical results
//! regardless of interleaving.

use std::cell::RefCell;
use std::thread::LocalKey;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};

/// Index cap used by the plain accessors. Callers that need deeper indices
/// pass their own cap through the `*_with_cap` variants.
pub const DEFAULT_INDEX_CAP: i64 = 10_000;

type Table = RefCell<Vec<BigInt>>;

thread_local! {
    static FIB_TABLE: Table = RefCell::new(vec![BigInt::zero(), BigInt::one()]);
    static LUCAS_TABLE: Table = RefCell::new(vec![BigInt::from(2), BigInt::one()]);
}

fn checked_index(k: i64, cap: i64) -> Result<usize> {
    if cap < 0 || k.unsigned_abs() > cap as u64 {
        return Err(Error::IndexCapExceeded { index: k, cap });
    }
    Ok(k.unsigned_abs() as usize)
}

fn table_value(table: &'static LocalKey<Table>, idx: usize) -> BigInt {
    table.with(|t| {
        let mut t = t.borrow_mut();
        while t.len() <= idx {
            let next = &t[t.len() - 1] + &t[t.len() - 2];
            t.push(next);
        }
        t[idx].clone()
    })
}

/// F(k) with F(0)=0, F(1)=F(2)=1, for any signed `k` within the default cap.
pub fn fib(k: i64) -> Result<BigInt> {
    fib_with_cap(k, DEFAULT_INDEX_CAP)
}

pub fn fib_with_cap(k: i64, cap: i64) -> Result<BigInt> {
    let idx = checked_index(k, cap)?;
    let value = table_value(&FIB_TABLE, idx);
    // F(-n) = (-1)^(n+1) F(n): negate for even n.
    if k < 0 && idx % 2 == 0 {
        Ok(-value)
    } else {
        Ok(value)
    }
}

/// L(k) with L(0)=2, L(1)=1, for any signed `k` within the default cap.
pub fn lucas(k: i64) -> Result<BigInt> {
    lucas_with_cap(k, DEFAULT_INDEX_CAP)
}

pub fn lucas_with_cap(k: i64, cap: i64) -> Result<BigInt> {
    let idx = checked_index(k, cap)?;
    let value = table_value(&LUCAS_TABLE, idx);
    // L(-n) = (-1)^n L(n): negate for odd n.
    if k < 0 && idx % 2 == 1 {
        Ok(-value)
    } else {
        Ok(value)
    }
}

/// Initial pair (a, b) of a generalized Fibonacci sequence
/// G(1)=a, G(2)=b, G(k)=G(k-1)+G(k-2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedPair {
    a: BigInt,
    b: BigInt,
}

impl SeedPair {
    pub fn new(a: BigInt, b: BigInt) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(domain("seed pair (0, 0) is not allowed"));
        }
        Ok(Self { a, b })
    }

    pub fn from_i64(a: i64, b: i64) -> Result<Self> {
        Self::new(BigInt::from(a), BigInt::from(b))
    }

    /// The classic seeds (1, 1) that reproduce the Fibonacci numbers.
    pub fn classic() -> Self {
        Self {
            a: BigInt::one(),
            b: BigInt::one(),
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_classic(&self) -> bool {
        self.a.is_one() && self.b.is_one()
    }
}

/// G(k) for the seeded sequence, extended to k <= 0 by running the
/// recurrence backwards (G(k-2) = G(k) - G(k-1)).
pub fn general_fib(seed: &SeedPair, k: i64) -> Result<BigInt> {
    general_fib_with_cap(seed, k, DEFAULT_INDEX_CAP)
}

pub fn general_fib_with_cap(seed: &SeedPair, k: i64, cap: i64) -> Result<BigInt> {
    checked_index(k, cap)?;
    let (mut lo, mut hi) = (seed.a.clone(), seed.b.clone()); // (G(1), G(2))
    if k >= 1 {
        if k == 1 {
            return Ok(lo);
        }
        for _ in 2..k {
            let next = &lo + &hi;
            lo = hi;
            hi = next;
        }
        Ok(hi)
    } else {
        let mut value = lo.clone();
        for _ in k..1 {
            let prev = &hi - &lo;
            hi = lo;
            lo = prev;
            value = lo.clone();
        }
        Ok(value)
    }
}

fn check_triangle_coords(r: i64, k: i64) -> Result<()> {
    if r < 1 || k < 1 || k > r {
        return Err(domain(format!(
            "triangle entry requires 1 <= k <= r, got (r, k) = ({r}, {k})"
        )));
    }
    Ok(())
}

/// Hosoya triangle entry H(r, k) = F(k) * F(r-k+1) for 1 <= k <= r.
pub fn hosoya(r: i64, k: i64) -> Result<BigInt> {
    check_triangle_coords(r, k)?;
    Ok(fib(k)? * fib(r - k + 1)?)
}

/// Seeded triangle entry G(k) * G(r-k+1); reduces to `hosoya` for seeds (1, 1).
pub fn hosoya_general(seed: &SeedPair, r: i64, k: i64) -> Result<BigInt> {
    check_triangle_coords(r, k)?;
    Ok(general_fib(seed, k)? * general_fib(seed, r - k + 1)?)
}
