//! Closed-form bounds used by the counting and construction arguments.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// `n |P(x)| / |P'(x)|`: no root of `P` lies farther than this from `x`.
pub fn root_distance_bound(poly: &IntPolynomial, x: &Rational) -> Result<Rational> {
    let n = poly.deg()?;
    let dp = poly.derivative()?;
    if dp.is_zero() {
        return Err(Error::DerivativeVanishes);
    }
    let d = dp.evaluate(x)?;
    if d.is_zero() {
        return Err(Error::DerivativeVanishes);
    }
    let v = poly.evaluate(x)?;
    Ok(Rational::from_integer(BigInt::from(n)) * v.abs() / d.abs())
}

/// `(n + 1) 2^n H(P) / |a_n|`: bounds the product of the absolute values of
/// any subset of the roots.
pub fn root_product_bound(poly: &IntPolynomial) -> Result<Rational> {
    let n = poly.deg()?;
    if n == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    let h = poly.height()?;
    let lead = poly.leading().expect("nonzero").abs();
    Ok(Rational::new(
        BigInt::from(n + 1) * (BigInt::from(1) << n) * h,
        lead,
    ))
}

/// `((|x| + 1)^(n+1) - 1) / |x|`.
pub fn rho(n: u32, x: f64) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        return Err(Error::InvalidInput(format!("rho undefined at x = {x}")));
    }
    let a = x.abs();
    Ok(((a + 1.0).powi(n as i32 + 1) - 1.0) / a)
}

/// `2^n rho_n(d) Q width`, the bound on `|P(d)|` for a monic `P` of height
/// at most `Q` with a root in the interval of midpoint `d` and length `width`.
pub fn taylor_midpoint_bound(n: u32, d: f64, q: f64, width: f64) -> Result<f64> {
    if !(width >= 0.0) || !(q > 0.0) {
        return Err(Error::InvalidInput(
            "Q must be positive and width nonnegative".into(),
        ));
    }
    Ok(2f64.powi(n as i32) * rho(n, d)? * q * width)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn root_distance_examples() {
        assert_eq!(
            root_distance_bound(&p(&[-2, 0, 1]), &ratio(3, 2)).unwrap(),
            ratio(1, 6)
        );
        assert_eq!(
            root_distance_bound(&p(&[-2, 0, 1]), &ratio(7, 5)).unwrap(),
            ratio(1, 35)
        );
        assert_eq!(
            root_distance_bound(&p(&[-4, 0, 1]), &rat(2)).unwrap(),
            rat(0)
        );
        assert_eq!(
            root_distance_bound(&p(&[-2, 0, 1]), &rat(0)),
            Err(Error::DerivativeVanishes)
        );
        // Actual distances from the bisection oracle in the tests directory:
        // |3/2 - sqrt 2| ~ 0.0858, |7/5 - sqrt 2| ~ 0.0142.
        assert!((1.5f64 - 2f64.sqrt()).abs() <= 1.0 / 6.0);
        assert!((1.4f64 - 2f64.sqrt()).abs() <= 1.0 / 35.0);
    }

    #[test]
    fn root_product_examples() {
        assert_eq!(root_product_bound(&p(&[-2, 0, 1])).unwrap(), rat(24));
        assert_eq!(root_product_bound(&p(&[2, 2, 0, 1])).unwrap(), rat(64));
        assert_eq!(root_product_bound(&p(&[-2, 0, 2])).unwrap(), rat(12));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(3, 1.0).unwrap(), 15.0);
        assert_eq!(rho(3, 2.0).unwrap(), 40.0);
        assert_eq!(rho(2, 0.5).unwrap(), 4.75);
        assert_eq!(rho(3, -2.0).unwrap(), 40.0);
        assert!(rho(3, 0.0).is_err());
    }

    #[test]
    fn taylor_examples() {
        assert!((taylor_midpoint_bound(3, 1.0, 100.0, 0.1).unwrap() - 1200.0).abs() < 1e-9);
        assert!((taylor_midpoint_bound(2, 2.0, 10.0, 0.5).unwrap() - 260.0).abs() < 1e-12);
        assert_eq!(taylor_midpoint_bound(2, 2.0, 10.0, 0.0).unwrap(), 0.0);
        assert!(taylor_midpoint_bound(2, 0.0, 10.0, 0.5).is_err());
    }
}
