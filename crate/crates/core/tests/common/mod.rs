//! Independent oracles for the integration suites. Nothing here shares a
//! code path with the library routines it checks: determinants come from
//! the Leibniz permutation sum, characteristic polynomials from the
//! Leibniz expansion of xI - M with local polynomial arithmetic, and
//! triangle values from the double recursion.

// Each test target compiles its own copy; not every target uses every oracle.
#![allow(dead_code)]

use hosoya_core::ExactMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// All permutations of 0..n with their signs, by simple recursion.
fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i32)> {
    let mut result = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(
        n: usize,
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        result: &mut Vec<(Vec<usize>, i32)>,
    ) {
        if current.len() == n {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if current[i] > current[j] {
                        inversions += 1;
                    }
                }
            }
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            result.push((current.clone(), sign));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                go(n, current, used, result);
                current.pop();
                used[v] = false;
            }
        }
    }
    go(n, &mut current, &mut used, &mut result);
    result
}

/// Determinant as the signed sum over all permutations.
pub fn leibniz_det(m: &ExactMatrix) -> BigInt {
    assert!(m.is_square(), "Leibniz oracle needs a square matrix");
    let n = m.rows();
    let mut det = BigInt::zero();
    for (perm, sign) in permutations_with_sign(n) {
        let mut term = BigInt::from(sign);
        for (i, &j) in perm.iter().enumerate() {
            term *= m.get(i, j);
        }
        det += term;
    }
    det
}

// Local polynomial helpers (lowest degree first), deliberately separate
// from the library's IntPolynomial.

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_into(acc: &mut Vec<BigInt>, p: &[BigInt]) {
    if acc.len() < p.len() {
        acc.resize(p.len(), BigInt::zero());
    }
    for (i, c) in p.iter().enumerate() {
        acc[i] += c;
    }
}

/// Coefficients of det(xI - M), lowest degree first, via the Leibniz sum
/// over permutations of degree <= 1 polynomial entries.
pub fn leibniz_char_poly(m: &ExactMatrix) -> Vec<BigInt> {
    assert!(m.is_square(), "Leibniz oracle needs a square matrix");
    let n = m.rows();
    let mut acc: Vec<BigInt> = Vec::new();
    for (perm, sign) in permutations_with_sign(n) {
        let mut term = vec![BigInt::from(sign)];
        for (i, &j) in perm.iter().enumerate() {
            // Entry of xI - M.
            let entry = if i == j {
                vec![-m.get(i, j).clone(), BigInt::one()]
            } else {
                vec![-m.get(i, j).clone()]
            };
            term = poly_mul(&term, &entry);
        }
        poly_add_into(&mut acc, &term);
    }
    while acc.last().is_some_and(Zero::is_zero) {
        acc.pop();
    }
    acc
}

/// The triangle computed purely by the double recursion
/// H(r,k) = H(r-1,k) + H(r-2,k) and H(r,k) = H(r-1,k-1) + H(r-2,k-2),
/// seeded with H(1,1) = a^2, H(2,1) = H(2,2) = a*b, H(3,2) = b^2.
/// Returns rows[r-1][k-1] = H(r,k).
pub fn recursion_triangle_seeded(a: i64, b: i64, rows: usize) -> Vec<Vec<BigInt>> {
    let (a, b) = (BigInt::from(a), BigInt::from(b));
    let mut tri: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for r in 1..=rows {
        let mut row = Vec::with_capacity(r);
        for k in 1..=r {
            let value = match (r, k) {
                (1, 1) => &a * &a,
                (2, _) => &a * &b,
                (3, 2) => &b * &b,
                _ if k <= r - 2 => &tri[r - 2][k - 1] + &tri[r - 3][k - 1],
                _ => &tri[r - 2][k - 2] + &tri[r - 3][k - 3],
            };
            row.push(value);
        }
        tri.push(row);
    }
    tri
}

pub fn recursion_triangle(rows: usize) -> Vec<Vec<BigInt>> {
    recursion_triangle_seeded(1, 1, rows)
}

/// Checks both recurrences at every point of `tri` whose ancestor entries
/// exist; panics with coordinates on the first violation.
pub fn assert_both_recurrences(tri: &[Vec<BigInt>]) {
    for r in 3..=tri.len() {
        for k in 1..=r {
            let h = &tri[r - 1][k - 1];
            if k <= r - 2 {
                let rec1 = &tri[r - 2][k - 1] + &tri[r - 3][k - 1];
                assert_eq!(h, &rec1, "column recurrence fails at ({r}, {k})");
            }
            if k >= 3 {
                let rec2 = &tri[r - 2][k - 2] + &tri[r - 3][k - 3];
                assert_eq!(h, &rec2, "shifted recurrence fails at ({r}, {k})");
            }
        }
    }
}

/// Minimal DOT reader for round-trip checks: accepts the subset emitted by
/// `to_dot` and returns (vertex declarations, edges).
pub fn parse_dot(text: &str) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("graph {"), "missing DOT header");
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut closed = false;
    for line in lines {
        if line == "}" {
            closed = true;
            continue;
        }
        assert!(!closed, "content after closing brace");
        let stmt = line
            .strip_prefix("  ")
            .and_then(|s| s.strip_suffix(';'))
            .unwrap_or_else(|| panic!("malformed DOT statement: {line:?}"));
        if let Some((u, v)) = stmt.split_once(" -- ") {
            edges.push((u.parse().unwrap(), v.parse().unwrap()));
        } else {
            vertices.push(stmt.parse().unwrap());
        }
    }
    assert!(closed, "missing closing brace");
    (vertices, edges)
}

/// Deterministic small-integer generator for pseudo-random test matrices.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        Self(seed.max(1))
    }

    fn next_u64(&mut self) -> u64 {
        // xorshift64
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    /// Uniform-ish value in -9..=9.
    pub fn small(&mut self) -> i64 {
        (self.next_u64() % 19) as i64 - 9
    }

    pub fn in_range(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.next_u64() as usize) % (hi - lo + 1)
    }
}
