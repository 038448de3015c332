#![forbid(unsafe_code)]

//! Exact arithmetic for the Hosoya triangle and the matrix families read
//! off it.
//!
//! The triangle entry H(r, k) = F(k) * F(r-k+1) is a product of Fibonacci
//! numbers; this crate materializes the triangle, constructs the rank-one
//! backslash matrices B(m,n,t), the persymmetric case B(n), the
//! antidiagonal matrices A(n) of squared Fibonacci numbers, and the
//! skew-band family T(n,k), and computes their eigenstructure, traces,
//! norms, determinants, and mod-2 graphs entirely over big integers and
//! exact rationals. Every closed form is cross-checked against an
//! independent brute-force route, either at construction time or in the
//! test suites.

pub mod eigen;
pub mod error;
pub mod fib;
pub mod graph;
pub mod identities;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod surd;
pub mod triangle;

pub use error::{Error, Result};
pub use fib::{fib, general_fib, hosoya, hosoya_general, lucas, SeedPair, DEFAULT_INDEX_CAP};
pub use matrix::{
    antidiagonal, backslash_matrix, backslash_matrix_general, persymmetric, skew_band, ExactMatrix,
};
pub use poly::IntPolynomial;
pub use rational::{inverse_rational, RationalMatrix, RationalValue};
pub use surd::SurdValue;
