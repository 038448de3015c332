//! Exact rational matrices: the kernel behind matrix inversion and the
//! Faddeev-LeVerrier characteristic polynomial.
//!
//! `BigRational` is normalized by construction (positive denominator,
//! gcd(numerator, denominator) = 1), which is exactly the invariant the
//! rational scalar type needs.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

pub type RationalValue = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BigRational,
    ) -> Self {
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

    pub fn from_exact(m: &ExactMatrix) -> Self {
        Self::from_fn(m.rows(), m.cols(), |i, j| {
            BigRational::from_integer(m.get(i, j).clone())
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.entries[i * self.cols + j]
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
            (0..self.cols)
                .map(|k| self.get(i, k) * rhs.get(k, j))
                .sum()
        }))
    }

    pub fn trace(&self) -> Result<BigRational> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).map(|i| self.get(i, i).clone()).sum())
    }

    /// Returns self + c*I.
    pub fn add_diag(&self, c: &BigRational) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            if i == j {
                self.get(i, j) + c
            } else {
                self.get(i, j).clone()
            }
        })
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}

/// Exact inverse by Gauss-Jordan elimination over rationals.
pub fn inverse_rational(m: &ExactMatrix) -> Result<RationalMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    // Augmented rows [M | I].
    let mut aug: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        BigRational::from_integer(m.get(i, j).clone())
                    } else if j - n == i {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !aug[r][col].is_zero()) else {
            return Err(Error::Singular);
        };
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for j in col..2 * n {
            aug[col][j] = &aug[col][j] * &inv;
        }
        for r in 0..n {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col].clone();
            for j in col..2 * n {
                let delta = &factor * &aug[col][j];
                aug[r][j] = &aug[r][j] - delta;
            }
        }
    }
    Ok(RationalMatrix::from_fn(n, n, |i, j| aug[i][n + j].clone()))
}
