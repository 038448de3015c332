//! Dense exact integer matrices and the matrix families read off the
//! Hosoya triangle: rank-one backslash blocks B(m,n,t), their persymmetric
//! case B(n), the antidiagonal matrices A(n) with squared Fibonacci entries,
//! and the skew-band family T(n,k).
//!
//! Determinants and ranks use fraction-free Bareiss elimination, so every
//! intermediate stays an integer; the characteristic polynomial uses
//! Faddeev-LeVerrier over exact rationals with the final coefficients
//! asserted integral.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

use crate::error::{domain, Error, Result};
use crate::fib::{fib, general_fib, SeedPair};
use crate::poly::IntPolynomial;
use crate::rational::RationalMatrix;

/// Row-major dense matrix over arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(domain("matrix must have at least one row and one column"));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(domain("matrix rows must all have the same length"));
        }
        let n_rows = rows.len();
        let entries = rows.into_iter().flatten().collect();
        Ok(Self {
            rows: n_rows,
            cols,
            entries,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 0-based position (i, j).
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.cols)
    }

    fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        }))
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "mul_vec",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: v.len(),
                rhs_cols: 1,
            });
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect())
    }

    /// Entrywise (Hadamard) product.
    pub fn hadamard(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                op: "hadamard",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) * rhs.get(i, j)
        }))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    /// M^k by repeated squaring; M^0 is the identity.
    pub fn matpow(&self, k: u32) -> Result<Self> {
        let n = self.require_square()?;
        let mut result = Self::identity(n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.matmul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.matmul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn trace(&self) -> Result<BigInt> {
        let n = self.require_square()?;
        Ok((0..n).map(|i| self.get(i, i).clone()).sum())
    }

    /// Exact determinant by fraction-free Bareiss elimination with row
    /// pivoting. Every division below is exact (Sylvester's identity).
    pub fn det(&self) -> Result<BigInt> {
        let n = self.require_square()?;
        let mut a = self.entries.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            a.swap(k * n + j, r * n + j);
                        }
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                    a[i * n + j] = num / &prev;
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = a[k * n + k].clone();
        }
        let det = a[(n - 1) * n + (n - 1)].clone();
        Ok(if sign < 0 { -det } else { det })
    }

    /// Rank by fraction-free elimination with full pivoting.
    pub fn rank(&self) -> usize {
        let (rn, cn) = (self.rows, self.cols);
        let mut a = self.entries.clone();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for k in 0..rn.min(cn) {
            let pivot = (k..rn)
                .flat_map(|i| (k..cn).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i * cn + j].is_zero());
            let Some((pi, pj)) = pivot else {
                break;
            };
            if pi != k {
                for j in 0..cn {
                    a.swap(k * cn + j, pi * cn + j);
                }
            }
            if pj != k {
                for i in 0..rn {
                    a.swap(i * cn + k, i * cn + pj);
                }
            }
            for i in k + 1..rn {
                for j in k + 1..cn {
                    let num = &a[i * cn + j] * &a[k * cn + k] - &a[i * cn + k] * &a[k * cn + j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                    a[i * cn + j] = num / &prev;
                }
                a[i * cn + k] = BigInt::zero();
            }
            prev = a[k * cn + k].clone();
            rank += 1;
        }
        rank
    }

    /// Coefficients of det(xI - M) via Faddeev-LeVerrier. Intermediates are
    /// exact rationals; the final coefficients must come out integral.
    pub fn char_poly(&self) -> Result<IntPolynomial> {
        let n = self.require_square()?;
        let a = RationalMatrix::from_exact(self);
        let mut m = a.clone();
        // cs[k-1] holds the coefficient of x^(n-k).
        let mut cs: Vec<BigRational> = Vec::with_capacity(n);
        for k in 1..=n {
            let c = -(m.trace()? / BigRational::from_integer(BigInt::from(k)));
            cs.push(c.clone());
            if k < n {
                m = a.matmul(&m.add_diag(&c))?;
            }
        }
        let mut coeffs = Vec::with_capacity(n + 1);
        for c in cs.iter().rev() {
            if !c.is_integer() {
                return Err(Error::IdentityViolation(format!(
                    "characteristic polynomial coefficient {c} is not an integer"
                )));
            }
            coeffs.push(c.to_integer());
        }
        coeffs.push(BigInt::one());
        Ok(IntPolynomial::from_coeffs(coeffs))
    }

    /// Exact inverse over rationals; `Err(Singular)` when det = 0.
    pub fn inverse_rational(&self) -> Result<RationalMatrix> {
        crate::rational::inverse_rational(self)
    }

    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        self.iter_rows()
            .map(|r| r.iter().map(BigInt::to_string).collect())
            .collect()
    }

    /// JSON export with entries as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.entry_strings(),
        })
    }
}

pub(crate) fn check_backslash_params(m: i64, n: i64, t: i64) -> Result<()> {
    if m < 1 || n < 1 || t < 1 {
        return Err(domain(format!(
            "backslash matrix requires m, n, t >= 1, got ({m}, {n}, {t})"
        )));
    }
    if m > n {
        return Err(domain(format!(
            "backslash matrix requires m <= n, got m = {m}, n = {n}"
        )));
    }
    if t > n {
        return Err(domain(format!(
            "backslash matrix requires t <= n, got t = {t}, n = {n}"
        )));
    }
    Ok(())
}

/// The t x t backslash matrix B(m,n,t): entry (i, j), 1-based, is
/// F(m+i-1) * F(n-j+1). Slash matrices are its row/column reflections and
/// get no dedicated constructor.
pub fn backslash_matrix(m: i64, n: i64, t: i64) -> Result<ExactMatrix> {
    check_backslash_params(m, n, t)?;
    let row_factors: Vec<BigInt> = (0..t).map(|i| fib(m + i)).collect::<Result<_>>()?;
    let col_factors: Vec<BigInt> = (0..t).map(|j| fib(n - j)).collect::<Result<_>>()?;
    Ok(ExactMatrix::from_fn(t as usize, t as usize, |i, j| {
        &row_factors[i] * &col_factors[j]
    }))
}

/// B(m,n,t) over a seeded triangle: entry (i, j) is G(m+i-1) * G(n-j+1).
pub fn backslash_matrix_general(seed: &SeedPair, m: i64, n: i64, t: i64) -> Result<ExactMatrix> {
    check_backslash_params(m, n, t)?;
    let row_factors: Vec<BigInt> = (0..t)
        .map(|i| general_fib(seed, m + i))
        .collect::<Result<_>>()?;
    let col_factors: Vec<BigInt> = (0..t)
        .map(|j| general_fib(seed, n - j))
        .collect::<Result<_>>()?;
    Ok(ExactMatrix::from_fn(t as usize, t as usize, |i, j| {
        &row_factors[i] * &col_factors[j]
    }))
}

/// B(n) = B(1, n, n), symmetric about its antidiagonal.
pub fn persymmetric(n: i64) -> Result<ExactMatrix> {
    if n < 1 {
        return Err(domain(format!("persymmetric matrix requires n >= 1, got {n}")));
    }
    backslash_matrix(1, n, n)
}

/// A(n): F(i)^2 at (i, n-i+1), zero elsewhere.
pub fn antidiagonal(n: i64) -> Result<ExactMatrix> {
    if n < 1 {
        return Err(domain(format!("antidiagonal matrix requires n >= 1, got {n}")));
    }
    let dim = n as usize;
    let squares: Vec<BigInt> = (1..=n)
        .map(|i| fib(i).map(|f| &f * &f))
        .collect::<Result<_>>()?;
    Ok(ExactMatrix::from_fn(dim, dim, |i, j| {
        if i + j == dim - 1 {
            squares[i].clone()
        } else {
            BigInt::zero()
        }
    }))
}

/// Skew band T(n, lo): entry (i, j) is F(i) * F(n-j+1) when
/// lo <= i+j <= n+1 and zero otherwise (1-based). Values of `lo` below 2
/// are clamped to 2 (i+j >= 2 always); `lo = n+1` leaves only the
/// antidiagonal.
pub fn skew_band(n: i64, lo: i64) -> Result<ExactMatrix> {
    if n < 2 {
        return Err(domain(format!("skew band matrix requires n >= 2, got {n}")));
    }
    if lo > n + 1 {
        return Err(domain(format!(
            "skew band matrix requires lo <= n + 1, got lo = {lo}, n = {n}"
        )));
    }
    let lo = lo.max(2) as usize;
    let dim = n as usize;
    let row_factors: Vec<BigInt> = (1..=n).map(fib).collect::<Result<_>>()?;
    let col_factors: Vec<BigInt> = (1..=n).map(|j| fib(n - j + 1)).collect::<Result<_>>()?;
    Ok(ExactMatrix::from_fn(dim, dim, |i, j| {
        let coord_sum = i + j + 2; // 1-based i + j
        if lo <= coord_sum && coord_sum <= dim + 1 {
            &row_factors[i] * &col_factors[j]
        } else {
            BigInt::zero()
        }
    }))
}
