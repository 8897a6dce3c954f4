//! Exact integer polynomials: height, evaluation, derivative, the text
//! format used by fixtures and the CLI, Eisenstein certification and an
//! exact irreducibility test for degree at most five.

mod bounds;
mod factor;

pub use bounds::{rho, root_distance_bound, root_product_bound, taylor_midpoint_bound};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Polynomial with exact integer coefficients, stored lowest power first.
///
/// Trailing zero coefficients are stripped on construction, so the degree is
/// the index of the last stored coefficient. The zero polynomial is
/// representable but every operation below rejects it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Monic polynomial `t^n + lower[n-1] t^(n-1) + ... + lower[0]`.
    pub fn monic_from_lower(lower: &[i64]) -> Self {
        let mut c: Vec<BigInt> = lower.iter().map(|&v| BigInt::from(v)).collect();
        c.push(BigInt::one());
        IntPolynomial { coeffs: c }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub(crate) fn deg(&self) -> Result<usize> {
        self.degree()
            .ok_or_else(|| Error::InvalidInput("zero polynomial".into()))
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn height(&self) -> Result<BigInt> {
        self.deg()?;
        Ok(self
            .coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default())
    }

    /// Gcd of the coefficients (positive).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.content().is_one()
    }

    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        self.deg()?;
        let (num, den) = self.homogeneous(x.numer(), x.denom());
        Ok(Rational::new(num, den))
    }

    /// Returns `(sum a_k p^k q^(n-k), q^n)`, so that `P(p/q)` is their ratio.
    pub(crate) fn homogeneous(&self, p: &BigInt, q: &BigInt) -> (BigInt, BigInt) {
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        let n = self.coeffs.len().saturating_sub(1);
        (acc, num_traits::pow(q.clone(), n))
    }

    /// Sign of `P(x)`, computed exactly on integers.
    pub fn sign_at(&self, x: &Rational) -> Ordering {
        // x.denom() > 0, so the homogenized numerator carries the sign.
        let p = x.numer();
        let q = x.denom();
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        acc.sign_cmp()
    }

    /// Fast floating evaluation; for pruning only, never for decisions.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Result<IntPolynomial> {
        self.deg()?;
        Ok(IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        ))
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    /// Exact quotient `self / divisor` over the integers, if it exists.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return if rem.is_empty() {
                Some(IntPolynomial::zero())
            } else {
                None
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(IntPolynomial::new(quot))
        } else {
            None
        }
    }

    /// Eisenstein's criterion at `p`: `p` does not divide the leading
    /// coefficient, divides every other coefficient, and `p^2` does not divide
    /// the constant term.
    pub fn eisenstein_check(&self, p: u64) -> Result<bool> {
        let n = self.deg()?;
        if !crate::primes::is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if n == 0 {
            return Ok(false);
        }
        let p = BigInt::from(p);
        let divides = |c: &BigInt, m: &BigInt| (c % m).is_zero();
        Ok(!divides(&self.coeffs[n], &p)
            && self.coeffs[..n].iter().all(|c| divides(c, &p))
            && !divides(&self.coeffs[0], &(&p * &p)))
    }

    /// Smallest prime `p <= limit` certifying irreducibility by Eisenstein.
    pub fn eisenstein_prime(&self, limit: u64) -> Option<u64> {
        (2..=limit)
            .filter(|&p| crate::primes::is_prime(p))
            .find(|&p| self.eisenstein_check(p).unwrap_or(false))
    }

    /// Exact irreducibility over the rationals for primitive polynomials of
    /// degree 1..=5.
    pub fn is_irreducible(&self) -> Result<bool> {
        factor::is_irreducible(self)
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl PartialOrd for IntPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients lowest power first.
impl Ord for IntPolynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

/// Text format: coefficients lowest power first, separated by single spaces,
/// e.g. `"2 2 0 1"` for `t^3 + 2t + 2`. The zero polynomial prints as `"0"`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<BigInt>()
                    .map_err(|_| Error::InvalidInput(format!("bad coefficient {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("empty coefficient list".into()));
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

impl From<IntPolynomial> for String {
    fn from(p: IntPolynomial) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for IntPolynomial {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn height_examples() {
        assert_eq!(p(&[2, 2, 0, 1]).height().unwrap(), BigInt::from(2));
        assert_eq!(p(&[0, 0, 0, 0, 0, 1]).height().unwrap(), BigInt::from(1));
        assert_eq!(p(&[100, -3, 7]).height().unwrap(), BigInt::from(100));
        assert!(IntPolynomial::zero().height().is_err());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p(&[-2, 0, 1]).evaluate(&ratio(3, 2)).unwrap(), ratio(1, 4));
        assert_eq!(p(&[2, 2, 0, 1]).evaluate(&rat(0)).unwrap(), rat(2));
        assert_eq!(p(&[-1, -1, 1]).evaluate(&rat(2)).unwrap(), rat(1));
        assert!(IntPolynomial::zero().evaluate(&rat(1)).is_err());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[-2, 0, 1]).derivative().unwrap(), p(&[0, 2]));
        assert_eq!(p(&[2, 2, 0, 1]).derivative().unwrap(), p(&[2, 0, 3]));
        assert_eq!(p(&[0, 5]).derivative().unwrap(), p(&[5]));
        assert!(p(&[7]).derivative().unwrap().is_zero());
        assert!(IntPolynomial::zero().derivative().is_err());
    }

    #[test]
    fn eisenstein_examples() {
        assert!(p(&[2, 2, 0, 1]).eisenstein_check(2).unwrap());
        assert!(!p(&[4, 4, 0, 1]).eisenstein_check(2).unwrap());
        assert!(!p(&[1, 1, 1]).eisenstein_check(2).unwrap());
        assert!(p(&[2, 2, 0, 1]).eisenstein_check(4).is_err());
        assert_eq!(p(&[6, 3, 1]).eisenstein_prime(10), Some(3));
    }

    #[test]
    fn text_format_round_trip() {
        let q: IntPolynomial = "2 2 0 1".parse().unwrap();
        assert_eq!(q, p(&[2, 2, 0, 1]));
        assert_eq!(q.to_string(), "2 2 0 1");
        assert_eq!(
            "-1  -1 1".parse::<IntPolynomial>().unwrap().to_string(),
            "-1 -1 1"
        );
        assert!("".parse::<IntPolynomial>().is_err());
        assert!("1 x".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn exact_division() {
        let a = p(&[2, 2, 1]);
        let b = p(&[2, -2, 1]);
        let prod = a.mul(&b);
        assert_eq!(prod, p(&[4, 0, 0, 0, 1]));
        assert_eq!(prod.exact_div(&a), Some(b));
        assert_eq!(prod.exact_div(&p(&[1, 1])), None);
    }

    #[test]
    fn sign_matches_exact_value() {
        let q = p(&[-2, 0, 1]);
        assert_eq!(q.sign_at(&ratio(7, 5)), Ordering::Less);
        assert_eq!(q.sign_at(&ratio(3, 2)), Ordering::Greater);
        assert_eq!(p(&[-4, 0, 1]).sign_at(&rat(-2)), Ordering::Equal);
    }
}
