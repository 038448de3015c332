//! Closed-form identity evaluators (trace, convolution, norms, determinant
//! signs) next to the brute-force oracles they are checked against, plus a
//! batch range verifier.
//!
//! Closed forms and oracles deliberately share no code: the closed forms
//! combine Lucas/Fibonacci terms and divide by 5 with the exactness of the
//! division checked; the oracles are direct summations and eliminations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::json;

use crate::error::{domain, Error, Result};
use crate::fib::{fib, hosoya, lucas};
use crate::matrix::{persymmetric, skew_band};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Mismatch,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equal => "equal",
            Verdict::Mismatch => "mismatch",
        }
    }
}

/// One evaluated identity instance: both sides exact, verdict derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub params: Vec<i64>,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub verdict: Verdict,
}

impl IdentityCheck {
    pub fn new(identity: &'static str, params: Vec<i64>, lhs: BigRational, rhs: BigRational) -> Self {
        let verdict = if lhs == rhs {
            Verdict::Equal
        } else {
            Verdict::Mismatch
        };
        Self {
            identity,
            params,
            lhs,
            rhs,
            verdict,
        }
    }

    pub fn is_equal(&self) -> bool {
        self.verdict == Verdict::Equal
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "identity": self.identity,
            "params": self.params,
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "verdict": self.verdict.as_str(),
        })
    }
}

fn int(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

fn neg_one_pow(exponent: i64) -> BigInt {
    if exponent.rem_euclid(2) == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// Closed-form trace of B(m,n,t):
/// [t*L(m+n) + (-1)^(n-t) F(m-n+2t-1) + (-1)^(m-1) F(n-m+1)] / 5,
/// asserted integral.
pub fn trace_closed(m: i64, n: i64, t: i64) -> Result<BigInt> {
    crate::matrix::check_backslash_params(m, n, t)?;
    let numerator = BigInt::from(t) * lucas(m + n)?
        + neg_one_pow(n - t) * fib(m - n + 2 * t - 1)?
        + neg_one_pow(m - 1) * fib(n - m + 1)?;
    let (quotient, remainder) = numerator.div_rem(&BigInt::from(5));
    if !remainder.is_zero() {
        return Err(Error::IdentityViolation(format!(
            "trace numerator {numerator} for (m,n,t)=({m},{n},{t}) is not divisible by 5"
        )));
    }
    Ok(quotient)
}

/// Oracle: the direct convolution sum F(m)F(n) + F(m+1)F(n-1) + ..
/// with t terms. Defined for all m, n, t >= 1.
pub fn convolution_brute(m: i64, n: i64, t: i64) -> Result<BigInt> {
    if m < 1 || n < 1 || t < 1 {
        return Err(domain(format!(
            "convolution requires m, n, t >= 1, got ({m}, {n}, {t})"
        )));
    }
    let mut sum = BigInt::zero();
    for i in 0..t {
        sum += fib(m + i)? * fib(n - i)?;
    }
    Ok(sum)
}

/// Sum of F(m+i)F(n-i) for i = 0..=t against
/// [(t+1)L(m+n) - sum of (-1)^(n-i) L(m-n+2i)] / 5.
pub fn lemma1a(m: i64, n: i64, t: i64) -> Result<IdentityCheck> {
    if m < 1 || n < 1 || t < 0 {
        return Err(domain(format!(
            "lemma1a requires m, n >= 1 and t >= 0, got ({m}, {n}, {t})"
        )));
    }
    let mut lhs = BigInt::zero();
    for i in 0..=t {
        lhs += fib(m + i)? * fib(n - i)?;
    }
    let mut alternating = BigInt::zero();
    for i in 0..=t {
        alternating += neg_one_pow(n - i) * lucas(m - n + 2 * i)?;
    }
    let bracket = BigInt::from(t + 1) * lucas(m + n)? - alternating;
    let rhs = BigRational::new(bracket, BigInt::from(5));
    Ok(IdentityCheck::new("lemma1a", vec![m, n, t], int(lhs), rhs))
}

/// Alternating Lucas sum (-1)^(n-i-1) L(m-n+2i) for i = 0..t-1 against the
/// two-Fibonacci closed form (-1)^(n-t) F(m-n+2t-1) + (-1)^(m-1) F(n-m+1).
pub fn lemma1b(m: i64, n: i64, t: i64) -> Result<IdentityCheck> {
    if m < 1 || n < 1 || t < 0 {
        return Err(domain(format!(
            "lemma1b requires m, n >= 1 and t >= 0, got ({m}, {n}, {t})"
        )));
    }
    let mut lhs = BigInt::zero();
    for i in 0..t {
        lhs += neg_one_pow(n - i - 1) * lucas(m - n + 2 * i)?;
    }
    let rhs = neg_one_pow(n - t) * fib(m - n + 2 * t - 1)? + neg_one_pow(m - 1) * fib(n - m + 1)?;
    Ok(IdentityCheck::new("lemma1b", vec![m, n, t], int(lhs), int(rhs)))
}

/// The seven norm relations of B(n) around the single nonzero eigenvalue
/// of B^T B, all computed from the matrix and asserted against the closed
/// forms. Any failed relation is an implementation bug, surfaced as
/// `Error::IdentityViolation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormReport {
    pub n: i64,
    /// tr(B^T B) = (F(n) F(n+1))^2.
    pub lambda: BigInt,
    /// F(n) F(n+1) = sum of F(i)^2 = H(2n, n).
    pub sqrt_lambda: BigInt,
    /// Spectral norm of B: sqrt of the spectral radius of B^T B.
    pub two_norm: BigInt,
    /// Maximum absolute row sum: F(n) (F(n+2) - 1).
    pub inf_norm: BigInt,
    /// Sum of squared entries of B; equals lambda.
    pub sum_sq: BigInt,
    /// Sum of all entries of B; equals (F(n+2) - 1)^2.
    pub sum_all: BigInt,
}

pub fn norm_report(n: i64) -> Result<NormReport> {
    if n < 1 {
        return Err(domain(format!("norm report requires n >= 1, got {n}")));
    }
    let violated = |what: String| Error::IdentityViolation(format!("norm report n={n}: {what}"));

    let b = persymmetric(n)?;
    let gram = b.transpose().matmul(&b)?;
    let lambda = gram.trace()?;

    // Rank one means the trace is the only nonzero eigenvalue, hence the
    // spectral radius of B^T B.
    if gram.rank() != 1 {
        return Err(violated("B^T B is not rank one".into()));
    }

    let sqrt_lambda = fib(n)? * fib(n + 1)?;
    if &sqrt_lambda * &sqrt_lambda != lambda {
        return Err(violated(format!(
            "tr(B^T B) = {lambda} is not (F(n)F(n+1))^2"
        )));
    }

    let sum_sq: BigInt = b.iter_rows().flatten().map(|e| e * e).sum();
    if sum_sq != lambda {
        return Err(violated("sum of squared entries differs from lambda".into()));
    }

    let mut fib_sq_sum = BigInt::zero();
    let mut fib_sum = BigInt::zero();
    for i in 1..=n {
        let f = fib(i)?;
        fib_sq_sum += &f * &f;
        fib_sum += f;
    }
    if fib_sq_sum != sqrt_lambda {
        return Err(violated("sum of F(i)^2 differs from F(n)F(n+1)".into()));
    }
    if fib_sum != fib(n + 2)? - 1 {
        return Err(violated("sum of F(i) differs from F(n+2) - 1".into()));
    }

    let sum_all: BigInt = b.iter_rows().flatten().sum();
    if sum_all != &fib_sum * &fib_sum {
        return Err(violated("entry sum differs from (F(n+2) - 1)^2".into()));
    }

    let inf_norm = b
        .iter_rows()
        .map(|row| row.iter().map(Signed::abs).sum::<BigInt>())
        .max()
        .expect("matrix has rows");
    if inf_norm != fib(n)? * &fib_sum {
        return Err(violated("infinity norm differs from F(n)(F(n+2) - 1)".into()));
    }

    if sqrt_lambda != hosoya(2 * n, n)? {
        return Err(violated("F(n)F(n+1) differs from H(2n, n)".into()));
    }

    Ok(NormReport {
        n,
        two_norm: sqrt_lambda.clone(),
        lambda,
        sqrt_lambda,
        inf_norm,
        sum_sq,
        sum_all,
    })
}

/// det T(n, k) for every band bound k: the product of F(i)^2 for
/// i = 1..n, positive when n = 0, 1 mod 4 and negative when n = 2, 3 mod 4.
pub fn det_sign_closed(n: i64) -> Result<BigInt> {
    if n < 2 {
        return Err(domain(format!("determinant closed form requires n >= 2, got {n}")));
    }
    let mut product = BigInt::from(1);
    for i in 1..=n {
        let f = fib(i)?;
        product *= &f * &f;
    }
    Ok(match n % 4 {
        0 | 1 => product,
        _ => -product,
    })
}

/// Identity names known to [`verify_range`].
pub fn registered_identities() -> &'static [&'static str] {
    &["trace", "lemma1a", "lemma1b", "norms", "det_sign", "graph"]
}

/// Parameter grid for a batch verification sweep. `max_t` defaults to
/// `max_n` where a third parameter is swept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeSpec {
    pub identity: String,
    pub max_n: i64,
    pub max_t: Option<i64>,
}

/// Evaluates the named identity over its whole parameter grid, in
/// deterministic grid order. Every check carries both operands, so
/// mismatches arrive with a full dump.
pub fn verify_range(spec: &RangeSpec) -> Result<Vec<IdentityCheck>> {
    let max_n = spec.max_n;
    let max_t = spec.max_t.unwrap_or(max_n);
    let mut checks = Vec::new();
    match spec.identity.as_str() {
        "trace" => {
            for n in 1..=max_n {
                for m in 1..=n {
                    for t in 1..=n {
                        checks.push(IdentityCheck::new(
                            "trace",
                            vec![m, n, t],
                            int(trace_closed(m, n, t)?),
                            int(convolution_brute(m, n, t)?),
                        ));
                    }
                }
            }
        }
        "lemma1a" => {
            for m in 1..=max_n {
                for n in 1..=max_n {
                    for t in 0..=max_t {
                        checks.push(lemma1a(m, n, t)?);
                    }
                }
            }
        }
        "lemma1b" => {
            for m in 1..=max_n {
                for n in 1..=max_n {
                    for t in 0..=max_t {
                        checks.push(lemma1b(m, n, t)?);
                    }
                }
            }
        }
        "norms" => {
            for n in 1..=max_n {
                let report = norm_report(n)?;
                let closed = fib(n)? * fib(n + 1)?;
                checks.push(IdentityCheck::new(
                    "norms",
                    vec![n],
                    int(report.lambda),
                    int(&closed * &closed),
                ));
            }
        }
        "det_sign" => {
            for n in 2..=max_n {
                let closed = det_sign_closed(n)?;
                for lo in 2..=n + 1 {
                    checks.push(IdentityCheck::new(
                        "det_sign",
                        vec![n, lo],
                        int(skew_band(n, lo)?.det()?),
                        int(closed.clone()),
                    ));
                }
            }
        }
        "graph" => {
            for n in 1..=max_n {
                if n % 3 == 2 {
                    checks.push(crate::graph::structure_check(n)?);
                }
            }
        }
        other => return Err(Error::UnknownIdentity(other.to_string())),
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn trace_closed_examples() {
        assert_eq!(trace_closed(3, 7, 5).unwrap(), bi(125));
        assert_eq!(trace_closed(1, 4, 4).unwrap(), bi(10));
        assert_eq!(trace_closed(2, 3, 1).unwrap(), bi(2));
        assert!(matches!(trace_closed(4, 3, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn convolution_brute_examples() {
        assert_eq!(convolution_brute(3, 7, 5).unwrap(), bi(125));
        assert_eq!(convolution_brute(1, 1, 1).unwrap(), bi(1));
        // Regenerated from the oracle: F(2)F(5) + F(3)F(4) + F(4)F(3)
        // = 5 + 6 + 6 = 17.
        assert_eq!(convolution_brute(2, 5, 3).unwrap(), bi(17));
    }

    #[test]
    fn lemma1a_examples() {
        let check = lemma1a(2, 5, 3).unwrap();
        assert!(check.is_equal());
        assert_eq!(check.lhs, BigRational::from_integer(bi(22)));
        let check = lemma1a(1, 1, 0).unwrap();
        assert!(check.is_equal());
        assert_eq!(check.lhs, BigRational::from_integer(bi(1)));
        assert!(lemma1a(3, 7, 4).unwrap().is_equal());
    }

    #[test]
    fn lemma1b_examples() {
        let check = lemma1b(2, 5, 3).unwrap();
        assert!(check.is_equal());
        // Regenerated from the oracle: both sides are -2.
        assert_eq!(check.lhs, BigRational::from_integer(bi(-2)));
        assert!(lemma1b(1, 1, 1).unwrap().is_equal());
        assert!(lemma1b(4, 9, 2).unwrap().is_equal());
    }

    #[test]
    fn norm_report_examples() {
        let report = norm_report(4).unwrap();
        assert_eq!(report.lambda, bi(225));
        assert_eq!(report.sqrt_lambda, bi(15));
        assert_eq!(report.two_norm, bi(15));
        assert_eq!(report.inf_norm, bi(21));
        assert_eq!(report.sum_all, bi(49));

        let report = norm_report(1).unwrap();
        assert_eq!(report.lambda, bi(1));
        assert_eq!(report.inf_norm, bi(1));

        let report = norm_report(7).unwrap();
        assert_eq!(report.sqrt_lambda, bi(273));
        assert_eq!(report.sqrt_lambda, hosoya(14, 7).unwrap());
    }

    #[test]
    fn det_sign_closed_examples() {
        assert_eq!(det_sign_closed(4).unwrap(), bi(36));
        assert_eq!(det_sign_closed(2).unwrap(), bi(-1));
        assert_eq!(det_sign_closed(6).unwrap(), bi(-57600));
        assert_eq!(det_sign_closed(5).unwrap(), bi(900));
        assert!(det_sign_closed(1).is_err());
    }

    #[test]
    fn verify_range_sweeps() {
        let checks = verify_range(&RangeSpec {
            identity: "trace".into(),
            max_n: 8,
            max_t: None,
        })
        .unwrap();
        assert_eq!(checks.len(), (1..=8).map(|n| n * n).sum::<usize>());
        assert!(checks.iter().all(IdentityCheck::is_equal));

        let checks = verify_range(&RangeSpec {
            identity: "det_sign".into(),
            max_n: 7,
            max_t: None,
        })
        .unwrap();
        assert!(checks.iter().all(IdentityCheck::is_equal));

        let empty = verify_range(&RangeSpec {
            identity: "lemma1a".into(),
            max_n: 0,
            max_t: None,
        })
        .unwrap();
        assert!(empty.is_empty());

        assert!(matches!(
            verify_range(&RangeSpec {
                identity: "nosuch".into(),
                max_n: 3,
                max_t: None,
            }),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn identity_check_json_shape() {
        let check = lemma1b(2, 5, 3).unwrap();
        let v = check.to_json();
        assert_eq!(v["identity"], "lemma1b");
        assert_eq!(v["lhs"], "-2");
        assert_eq!(v["verdict"], "equal");
    }
}
