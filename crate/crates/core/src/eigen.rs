//! Closed-form eigenvalues, eigenvectors, and diagonalizations of the
//! structured matrix families, each verified by exact multiplication
//! before being returned.
//!
//! Eigenvectors keep the integer entries of the closed forms verbatim (no
//! normalization), so their entries remain readable as triangle points.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::error::{domain, Error, Result};
use crate::fib::{fib, general_fib, lucas, SeedPair};
use crate::matrix::{
    antidiagonal, backslash_matrix, check_backslash_params, persymmetric, ExactMatrix,
};
use crate::poly::IntPolynomial;
use crate::surd::SurdValue;

/// Exact eigenvalue: an integer, or sign * sqrt(radicand).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EigenValue {
    Integer(BigInt),
    Surd(SurdValue),
}

impl EigenValue {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            EigenValue::Integer(v) => json!(v.to_string()),
            EigenValue::Surd(s) => s.to_json(),
        }
    }
}

impl std::fmt::Display for EigenValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EigenValue::Integer(v) => write!(f, "{v}"),
            EigenValue::Surd(s) => write!(f, "{s}"),
        }
    }
}

/// An eigenvalue with its algebraic multiplicity and the exact eigenvectors
/// spanning its eigenspace (their count is the geometric multiplicity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenPair {
    pub value: EigenValue,
    pub multiplicity: usize,
    pub eigenvectors: Vec<Vec<BigInt>>,
}

/// Q and D with M*Q = Q*D verified exactly and Q nonsingular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagonalization {
    pub q: ExactMatrix,
    pub d: ExactMatrix,
}

/// JSON report: [{value, multiplicity, eigenvectors}].
pub fn eigen_report_json(pairs: &[EigenPair]) -> serde_json::Value {
    json!(pairs
        .iter()
        .map(|p| {
            json!({
                "value": p.value.to_json(),
                "multiplicity": p.multiplicity,
                "eigenvectors": p
                    .eigenvectors
                    .iter()
                    .map(|v| v.iter().map(BigInt::to_string).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            })
        })
        .collect::<Vec<_>>())
}

fn verify_integer_pair(m: &ExactMatrix, pair: &EigenPair, what: &str) -> Result<()> {
    let EigenValue::Integer(lambda) = &pair.value else {
        return Err(Error::IdentityViolation(format!(
            "{what}: expected an integer eigenvalue"
        )));
    };
    for w in &pair.eigenvectors {
        let lhs = m.mul_vec(w)?;
        let rhs: Vec<BigInt> = w.iter().map(|x| x * lambda).collect();
        if lhs != rhs {
            return Err(Error::IdentityViolation(format!(
                "{what}: M*w != lambda*w for lambda = {lambda}"
            )));
        }
    }
    Ok(())
}

/// The rank-one factorization B(m,n,t) = u v^T with
/// u = [F(m) .. F(m+t-1)] and v = [F(n), F(n-1) .. F(n-t+1)].
pub fn rank_one_factor(m: i64, n: i64, t: i64) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    check_backslash_params(m, n, t)?;
    let u = (0..t).map(|i| fib(m + i)).collect::<Result<_>>()?;
    let v = (0..t).map(|i| fib(n - i)).collect::<Result<_>>()?;
    Ok((u, v))
}

/// Seeded-triangle analogue of [`rank_one_factor`].
pub fn rank_one_factor_general(
    seed: &SeedPair,
    m: i64,
    n: i64,
    t: i64,
) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    check_backslash_params(m, n, t)?;
    let u = (0..t).map(|i| general_fib(seed, m + i)).collect::<Result<_>>()?;
    let v = (0..t).map(|i| general_fib(seed, n - i)).collect::<Result<_>>()?;
    Ok((u, v))
}

pub fn dot(u: &[BigInt], v: &[BigInt]) -> BigInt {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Eigenstructure of the rank-one matrix B(m,n,t): the trace with
/// eigenvector u, and 0 with multiplicity t-1 and null vectors
/// v_i = [-F(n-i), 0, .., F(n) at position i+1, .., 0].
pub fn rank_one_eigen(m: i64, n: i64, t: i64) -> Result<Vec<EigenPair>> {
    let (u, v) = rank_one_factor(m, n, t)?;
    let b = backslash_matrix(m, n, t)?;
    let tr = dot(&u, &v);
    if tr != b.trace()? {
        return Err(Error::IdentityViolation(
            "rank-one eigen: u.v does not equal the matrix trace".into(),
        ));
    }
    let mut pairs = vec![EigenPair {
        value: EigenValue::Integer(tr),
        multiplicity: 1,
        eigenvectors: vec![u],
    }];
    let dim = t as usize;
    if dim > 1 {
        let f_n = fib(n)?;
        let mut null_vectors = Vec::with_capacity(dim - 1);
        for i in 1..t {
            let mut w = vec![BigInt::zero(); dim];
            w[0] = -fib(n - i)?;
            w[i as usize] = f_n.clone();
            null_vectors.push(w);
        }
        pairs.push(EigenPair {
            value: EigenValue::Integer(BigInt::zero()),
            multiplicity: dim - 1,
            eigenvectors: null_vectors,
        });
    }
    for pair in &pairs {
        verify_integer_pair(&b, pair, "rank-one eigen")?;
    }
    Ok(pairs)
}

/// Diagonalization of B(n): Q = [u, v_1, .., v_{n-1}],
/// D = diag((n*L(n+1) + 2*F(n))/5, 0, .., 0).
pub fn diagonalize_persymmetric(n: i64) -> Result<Diagonalization> {
    if n < 1 {
        return Err(domain(format!(
            "persymmetric diagonalization requires n >= 1, got {n}"
        )));
    }
    let pairs = rank_one_eigen(1, n, n)?;
    let EigenValue::Integer(tr) = &pairs[0].value else {
        unreachable!("rank-one eigenvalues are integers");
    };

    // Closed form for the trace, with the division by 5 checked exact.
    let numerator = BigInt::from(n) * lucas(n + 1)? + BigInt::from(2) * fib(n)?;
    let (quotient, remainder) = num_integer::Integer::div_rem(&numerator, &BigInt::from(5));
    if !remainder.is_zero() {
        return Err(Error::IdentityViolation(format!(
            "(n*L(n+1) + 2*F(n)) = {numerator} is not divisible by 5"
        )));
    }
    if &quotient != tr {
        return Err(Error::IdentityViolation(format!(
            "closed-form trace {quotient} does not match matrix trace {tr}"
        )));
    }

    let dim = n as usize;
    let mut columns: Vec<&Vec<BigInt>> = vec![&pairs[0].eigenvectors[0]];
    if dim > 1 {
        columns.extend(pairs[1].eigenvectors.iter());
    }
    let q = ExactMatrix::from_fn(dim, dim, |i, j| columns[j][i].clone());
    let d = ExactMatrix::from_fn(dim, dim, |i, j| {
        if i == 0 && j == 0 {
            tr.clone()
        } else {
            BigInt::zero()
        }
    });

    let b = persymmetric(n)?;
    if b.matmul(&q)? != q.matmul(&d)? {
        return Err(Error::IdentityViolation("B*Q != Q*D".into()));
    }
    if q.det()?.is_zero() {
        return Err(Error::IdentityViolation("eigenvector matrix Q is singular".into()));
    }
    Ok(Diagonalization { q, d })
}

/// Spectrum of A(n): pairs +-F(i)*F(n-i+1) for i = 1 .. floor(n/2), plus
/// the center eigenvalue F(k)^2 with eigenvector e_k when n = 2k-1. The
/// +lambda eigenvector carries F(i) at position i and F(n-i+1) at position
/// n-i+1; the -lambda eigenvector negates the second entry.
pub fn antidiagonal_eigen(n: i64) -> Result<Vec<EigenPair>> {
    if n < 1 {
        return Err(domain(format!("antidiagonal eigen requires n >= 1, got {n}")));
    }
    let a = antidiagonal(n)?;
    let dim = n as usize;
    let mut pairs = Vec::new();
    for i in 1..=n / 2 {
        let f_i = fib(i)?;
        let f_mirror = fib(n - i + 1)?;
        let lambda = &f_i * &f_mirror;
        for negate in [false, true] {
            let mut w = vec![BigInt::zero(); dim];
            w[(i - 1) as usize] = f_i.clone();
            w[(n - i) as usize] = if negate { -f_mirror.clone() } else { f_mirror.clone() };
            pairs.push(EigenPair {
                value: EigenValue::Integer(if negate { -lambda.clone() } else { lambda.clone() }),
                multiplicity: 1,
                eigenvectors: vec![w],
            });
        }
    }
    if n % 2 == 1 {
        let k = (n + 1) / 2;
        let f_k = fib(k)?;
        let mut w = vec![BigInt::zero(); dim];
        w[(k - 1) as usize] = BigInt::one();
        pairs.push(EigenPair {
            value: EigenValue::Integer(&f_k * &f_k),
            multiplicity: 1,
            eigenvectors: vec![w],
        });
    }
    for pair in &pairs {
        verify_integer_pair(&a, pair, "antidiagonal eigen")?;
    }
    Ok(pairs)
}

/// Diagonalization of A(n) with eigenvector columns ordered
/// (+lambda_1, -lambda_1, +lambda_2, ..)
/// and the center column last for odd n.
pub fn diagonalize_antidiagonal(n: i64) -> Result<Diagonalization> {
    let pairs = antidiagonal_eigen(n)?;
    let dim = n as usize;
    let columns: Vec<&Vec<BigInt>> = pairs.iter().map(|p| &p.eigenvectors[0]).collect();
    let values: Vec<&EigenValue> = pairs.iter().map(|p| &p.value).collect();
    let q = ExactMatrix::from_fn(dim, dim, |i, j| columns[j][i].clone());
    let d = ExactMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            let EigenValue::Integer(v) = values[i] else {
                unreachable!("antidiagonal eigenvalues are integers");
            };
            v.clone()
        } else {
            BigInt::zero()
        }
    });
    let a = antidiagonal(n)?;
    if a.matmul(&q)? != q.matmul(&d)? {
        return Err(Error::IdentityViolation("A*P != P*D".into()));
    }
    if q.det()?.is_zero() {
        return Err(Error::IdentityViolation("eigenvector matrix P is singular".into()));
    }
    Ok(Diagonalization { q, d })
}

/// Eigenvalues of a general antidiagonal matrix: for each pair of mirror
/// positions (i, n+1-i) and (n+1-i, i) with i < n+1-i the values are
/// +-sqrt of the product of the two entries; the center entry itself is the
/// remaining eigenvalue for odd n. Negative products are rejected.
pub fn antidiagonal_general_eigen(m: &ExactMatrix) -> Result<Vec<SurdValue>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let dim = m.rows();
    for i in 0..dim {
        for j in 0..dim {
            if i + j != dim - 1 && !m.get(i, j).is_zero() {
                return Err(domain(format!(
                    "matrix has a nonzero entry off the antidiagonal at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let mut values = Vec::new();
    for i in 0..dim / 2 {
        let product = m.get(i, dim - 1 - i) * m.get(dim - 1 - i, i);
        if product.is_negative() {
            return Err(Error::NegativeRadicand(product.to_string()));
        }
        values.push(SurdValue::new(1, product.clone())?);
        values.push(SurdValue::new(-1, product)?);
    }
    if dim % 2 == 1 {
        let center = m.get(dim / 2, dim / 2);
        values.push(SurdValue::from_integer(center));
    }
    Ok(values)
}

/// det(xI - A(n)) as the expanded product of quadratic factors
/// (x^2 - F(i)^2 F(n-i+1)^2), with the linear center factor for odd n.
pub fn antidiagonal_char_poly(n: i64) -> Result<IntPolynomial> {
    if n < 1 {
        return Err(domain(format!(
            "antidiagonal characteristic polynomial requires n >= 1, got {n}"
        )));
    }
    let mut p = IntPolynomial::one();
    for i in 1..=n / 2 {
        let lambda = fib(i)? * fib(n - i + 1)?;
        p = p.mul(&IntPolynomial::x_squared_minus(&(&lambda * &lambda)));
    }
    if n % 2 == 1 {
        let f_k = fib((n + 1) / 2)?;
        p = p.mul(&IntPolynomial::x_minus(&(&f_k * &f_k)));
    }
    Ok(p)
}

/// The unique nonzero eigenvalue of B(n)^T B(n), which is
/// (F(n) F(n+1))^2, with eigenvector v = [F(n), .., F(1)].
pub fn gram_eigen(n: i64) -> Result<EigenPair> {
    if n < 1 {
        return Err(domain(format!("gram eigen requires n >= 1, got {n}")));
    }
    let b = persymmetric(n)?;
    let a = b.transpose().matmul(&b)?;
    let lambda = a.trace()?;
    let closed = {
        let p = fib(n)? * fib(n + 1)?;
        &p * &p
    };
    if lambda != closed {
        return Err(Error::IdentityViolation(format!(
            "tr(B^T B) = {lambda} differs from (F(n)F(n+1))^2 = {closed}"
        )));
    }
    if a.rank() != 1 {
        return Err(Error::IdentityViolation(
            "B^T B does not have rank one".into(),
        ));
    }
    let v: Vec<BigInt> = (0..n).map(|i| fib(n - i)).collect::<Result<_>>()?;
    let pair = EigenPair {
        value: EigenValue::Integer(lambda),
        multiplicity: 1,
        eigenvectors: vec![v],
    };
    verify_integer_pair(&a, &pair, "gram eigen")?;
    Ok(pair)
}

/// The unique nonzero eigenvalue of the Hadamard square C = B(n) o B(n),
/// which is tr(C), with eigenvector [F(1)^2, .., F(n)^2].
pub fn hadamard_eigen(n: i64) -> Result<EigenPair> {
    if n < 1 {
        return Err(domain(format!("hadamard eigen requires n >= 1, got {n}")));
    }
    let b = persymmetric(n)?;
    let c = b.hadamard(&b)?;
    let lambda = c.trace()?;
    if c.rank() != 1 {
        return Err(Error::IdentityViolation(
            "Hadamard square does not have rank one".into(),
        ));
    }
    let u: Vec<BigInt> = (1..=n)
        .map(|i| fib(i).map(|f| &f * &f))
        .collect::<Result<_>>()?;
    let pair = EigenPair {
        value: EigenValue::Integer(lambda),
        multiplicity: 1,
        eigenvectors: vec![u],
    };
    verify_integer_pair(&c, &pair, "hadamard eigen")?;
    Ok(pair)
}
