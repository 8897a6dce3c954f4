//! Irreducibility by exhaustive search for integer factors of degree one and
//! two. Gauss's lemma reduces factorization over the rationals to primitive
//! integer factors, and a polynomial of degree at most five that splits has a
//! factor of degree one or two.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};
use crate::primes::divisors;

fn small_abs(x: &BigInt) -> Result<u64> {
    x.abs()
        .to_u64()
        .ok_or_else(|| Error::InvalidInput(format!("coefficient {x} too large for factor search")))
}

pub(super) fn is_irreducible(poly: &IntPolynomial) -> Result<bool> {
    let n = poly.deg()?;
    if n == 0 {
        return Err(Error::InvalidInput("constant polynomial".into()));
    }
    if n > 5 {
        return Err(Error::UnsupportedDegree(n));
    }
    if !poly.is_primitive() {
        return Err(Error::InvalidInput(format!(
            "non-primitive polynomial {poly}"
        )));
    }
    if n == 1 {
        return Ok(true);
    }
    let a0 = &poly.coeffs[0];
    if a0.is_zero() {
        return Ok(false);
    }
    let lead_divs = divisors(small_abs(&poly.coeffs[n])?);
    let const_divs = divisors(small_abs(a0)?);

    // Linear factors q t - p with q | a_n, p | a_0.
    for &q in &lead_divs {
        let qb = BigInt::from(q);
        for &p in &const_divs {
            for pb in [BigInt::from(p), -BigInt::from(p)] {
                if poly.homogeneous(&pb, &qb).0.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    if n <= 3 {
        return Ok(true);
    }

    // Quadratic factors a t^2 + b t + c. With no rational root, P(1) and
    // P(-1) are nonzero and divisible by F(1) = a + b + c and F(-1) = a - b + c.
    let at_one: BigInt = poly.coeffs.iter().sum();
    let at_minus_one: BigInt = poly
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
        .sum();
    let one_divs = divisors(small_abs(&at_one)?);
    // |b| = a |r1 + r2| <= 2 a R with R the root-product bound.
    let rpb = super::root_product_bound(poly)?;
    for &a in &lead_divs {
        let ab = BigInt::from(a);
        let b_limit = crate::rational::ceil(&(rpb.clone() * crate::rational::rat(2 * a as i64)));
        for &c in &const_divs {
            for cb in [BigInt::from(c), -BigInt::from(c)] {
                for &e in &one_divs {
                    for eb in [BigInt::from(e), -BigInt::from(e)] {
                        let b = &eb - &ab - &cb;
                        if b.abs() > b_limit {
                            continue;
                        }
                        let f_minus_one = &ab - &b + &cb;
                        if f_minus_one.is_zero() || !(&at_minus_one % &f_minus_one).is_zero() {
                            continue;
                        }
                        let f = IntPolynomial::new(vec![cb.clone(), b, ab.clone()]);
                        if poly.exact_div(&f).is_some() {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn examples() {
        assert!(p(&[-2, 0, 1]).is_irreducible().unwrap());
        assert!(!p(&[-1, 0, 1]).is_irreducible().unwrap());
        assert!(p(&[-1, -1, 0, 1]).is_irreducible().unwrap());
        assert!(!p(&[4, 0, 0, 0, 1]).is_irreducible().unwrap());
    }

    #[test]
    fn degree_two_times_three() {
        // (t^2 + t + 1)(t^3 - t - 1)
        let prod = p(&[1, 1, 1]).mul(&p(&[-1, -1, 0, 1]));
        assert!(!prod.is_irreducible().unwrap());
        assert!(p(&[-2, 0, 0, 0, 0, 1]).is_irreducible().unwrap());
    }

    #[test]
    fn non_monic_primitive() {
        // (2t^2 + 1)(3t^2 - 2)
        let prod = p(&[1, 0, 2]).mul(&p(&[-2, 0, 3]));
        assert!(!prod.is_irreducible().unwrap());
        assert!(!p(&[-1, 0, 4]).is_irreducible().unwrap());
        assert!(p(&[-2, 0, 3]).is_irreducible().unwrap());
    }

    #[test]
    fn rejections() {
        assert_eq!(
            p(&[1, 0, 0, 0, 0, 0, 1]).is_irreducible(),
            Err(Error::UnsupportedDegree(6))
        );
        assert!(matches!(
            p(&[2, 0, 2]).is_irreducible(),
            Err(Error::InvalidInput(_))
        ));
        assert!(IntPolynomial::zero().is_irreducible().is_err());
        assert!(!p(&[0, 1, 1]).is_irreducible().unwrap());
        assert!(p(&[3, 1]).is_irreducible().unwrap());
    }
}
