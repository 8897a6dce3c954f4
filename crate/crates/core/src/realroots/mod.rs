//! Exact real root isolation by Sturm sequences, bisection refinement on
//! dyadic endpoints, and extraction of algebraic integer points.

mod points;
mod sturm;

pub use points::{extract_points, extract_points_unchecked, AlgebraicIntegerPoint};
pub use sturm::SturmSequence;

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;
use crate::rational::{rat, Rational};

/// Refinement floor for decisions that cannot be settled by a single exact
/// sign evaluation.
pub fn max_refinement_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << 60u32)
}

/// Half-open interval `(lo, hi]` with dyadic endpoints containing exactly one
/// real root of `poly`.
#[derive(Clone, Debug)]
pub struct RootInterval {
    poly: Arc<IntPolynomial>,
    lo: Rational,
    hi: Rational,
}

impl PartialEq for RootInterval {
    fn eq(&self, other: &Self) -> bool {
        self.lo == other.lo && self.hi == other.hi && self.poly == other.poly
    }
}

impl RootInterval {
    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        crate::rational::to_f64(&((&self.lo + &self.hi) / rat(2)))
    }

    /// The root itself when it coincides with the right endpoint.
    pub fn exact_value(&self) -> Option<Rational> {
        (self.poly.sign_at(&self.hi) == Ordering::Equal).then(|| self.hi.clone())
    }

    /// One bisection step: returns the half that keeps the root.
    pub fn bisect(&self) -> RootInterval {
        let mid = (&self.lo + &self.hi) / rat(2);
        let s_hi = self.poly.sign_at(&self.hi);
        let keep_right = match s_hi {
            Ordering::Equal => true,
            _ => {
                let s_mid = self.poly.sign_at(&mid);
                s_mid != Ordering::Equal && s_mid != s_hi
            }
        };
        if keep_right {
            RootInterval {
                poly: self.poly.clone(),
                lo: mid,
                hi: self.hi.clone(),
            }
        } else {
            RootInterval {
                poly: self.poly.clone(),
                lo: self.lo.clone(),
                hi: mid,
            }
        }
    }

    /// Bisects until the width is below `eps`.
    pub fn refine(&self, eps: &Rational) -> RootInterval {
        let mut r = self.clone();
        while &r.width() >= eps {
            r = r.bisect();
        }
        r
    }

    /// Exact comparison of the root with a rational `c`.
    pub fn cmp_rational(&self, c: &Rational) -> Ordering {
        if c > &self.hi {
            return Ordering::Less;
        }
        if c <= &self.lo {
            return Ordering::Greater;
        }
        // c in (lo, hi]: the root is simple and unique here, so the sign of
        // P(c) against P(hi) locates it.
        let s_hi = self.poly.sign_at(&self.hi);
        if s_hi == Ordering::Equal {
            return self.hi.cmp(c);
        }
        match self.poly.sign_at(c) {
            Ordering::Equal => Ordering::Equal,
            s if s == s_hi => Ordering::Less,
            _ => Ordering::Greater,
        }
    }

    /// Whether the root lies in the half-open `[lo, hi)`.
    pub fn in_half_open(&self, lo: &Rational, hi: &Rational) -> bool {
        self.cmp_rational(lo) != Ordering::Less && self.cmp_rational(hi) == Ordering::Less
    }
}

/// Integer `B` with every real root inside `(-B, B)`.
pub fn cauchy_bound(p: &IntPolynomial) -> Result<BigInt> {
    let h = p.height()?;
    let lead = p.leading().expect("nonzero").abs();
    Ok(BigInt::from(2) + crate::rational::ceil(&Rational::new(h, lead)))
}

/// All real roots of a squarefree `P`, ascending, each in its own interval.
pub fn isolate_real_roots(p: &IntPolynomial) -> Result<Vec<RootInterval>> {
    let n = p.deg()?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let seq = SturmSequence::new(p);
    if !seq.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    Ok(isolate_with(p, &seq))
}

pub(crate) fn isolate_with(p: &IntPolynomial, seq: &SturmSequence) -> Vec<RootInterval> {
    let poly = Arc::new(p.clone());
    let b = Rational::from_integer(cauchy_bound(p).expect("nonzero"));
    let lo = -b.clone();
    let total = seq.count_between(&lo, &b);
    let mut out = Vec::new();
    // Depth-first, left half first, so roots come out ascending.
    let mut stack = vec![(lo, b, total)];
    while let Some((a, c, k)) = stack.pop() {
        match k {
            0 => {}
            1 => out.push(RootInterval {
                poly: poly.clone(),
                lo: a,
                hi: c,
            }),
            _ => {
                let mid = (&a + &c) / rat(2);
                let left = seq.count_between(&a, &mid);
                stack.push((mid.clone(), c, k - left));
                stack.push((a, mid, left));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn sqrt_two() {
        let roots = isolate_real_roots(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        let eps = ratio(1, 1 << 20);
        let a = roots[0].refine(&eps).midpoint_f64();
        let b = roots[1].refine(&eps).midpoint_f64();
        assert!((a + 2f64.sqrt()).abs() < 1e-5);
        assert!((b - 2f64.sqrt()).abs() < 1e-5);
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&p(&[1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn plastic_number() {
        let roots = isolate_real_roots(&p(&[-1, -1, 0, 1])).unwrap();
        assert_eq!(roots.len(), 1);
        let r = roots[0].refine(&ratio(1, 1 << 30));
        assert!((r.midpoint_f64() - 1.324_717_957_244_746).abs() < 1e-8);
    }

    #[test]
    fn rejects_repeated_roots() {
        // (t - 1)^2 (t + 2)
        let q = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        assert_eq!(isolate_real_roots(&q).unwrap_err(), Error::NotSquarefree);
    }

    #[test]
    fn refine_contract() {
        let r = isolate_real_roots(&p(&[-2, 0, 1])).unwrap()[1].clone();
        let r = RootInterval {
            lo: rat(1),
            hi: rat(2),
            ..r
        };
        let coarse = r.refine(&rat(1));
        assert!(coarse.width() <= rat(1));
        let fine = r.refine(&ratio(1, 1024));
        assert!(fine.width() < ratio(1, 1024));
        let finer = fine.refine(&ratio(1, 1 << 16));
        assert!(finer.lo() >= fine.lo() && finer.hi() <= fine.hi());
        assert!(
            fine.lo() < &ratio(1_414_214, 1_000_000) && fine.hi() > &ratio(1_414_213, 1_000_000)
        );
    }

    #[test]
    fn exact_comparisons() {
        let roots = isolate_real_roots(&p(&[-3, 1])).unwrap();
        let r = &roots[0];
        assert_eq!(r.cmp_rational(&rat(3)), Ordering::Equal);
        assert!(r.in_half_open(&rat(3), &rat(4)));
        assert!(!r.in_half_open(&rat(2), &rat(3)));
        let s = &isolate_real_roots(&p(&[-2, 0, 1])).unwrap()[1];
        assert_eq!(s.cmp_rational(&ratio(141, 100)), Ordering::Greater);
        assert_eq!(s.cmp_rational(&ratio(142, 100)), Ordering::Less);
    }
}
