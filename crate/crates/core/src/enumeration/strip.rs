use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{ceil, floor, rat, Rational};

/// Integer pairs `(b1, b0)` with `|b1 d_i + b0 + offset_i| <= K_i` for both
/// `i`, together with the closed-form bound
/// `(4 K1 / eps + 1)(4 K2 + 1)`, `eps = |d1 - d2|`.
#[derive(Clone, Debug, PartialEq)]
pub struct StripCount {
    pub count: u64,
    pub bound: Rational,
}

/// Exact count of the lattice points in the parallelogram cut out by two
/// strips.
pub fn strip_lattice_count(
    d: (&Rational, &Rational),
    k: (&Rational, &Rational),
    offsets: (&Rational, &Rational),
) -> Result<StripCount> {
    let (d1, d2) = d;
    let (k1, k2) = k;
    let (o1, o2) = offsets;
    if d1 == d2 {
        return Err(Error::DegenerateStrips);
    }
    if k1.is_negative() || k2.is_negative() {
        return Err(Error::InvalidInput(
            "strip half-widths must be nonnegative".into(),
        ));
    }
    let eps = (d1 - d2).abs();
    let bound = (rat(4) * k1 / &eps + rat(1)) * (rat(4) * k2 + rat(1));

    // Eliminating b0: |b1 (d1 - d2) + (o1 - o2)| <= K1 + K2.
    let dd = d1 - d2;
    let a = (-(o1 - o2) - (k1 + k2)) / &dd;
    let b = (-(o1 - o2) + (k1 + k2)) / &dd;
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    let mut count = 0u64;
    let mut b1 = ceil(&lo);
    let top = floor(&hi);
    while b1 <= top {
        let r = Rational::from_integer(b1.clone());
        let lo1 = -o1 - &r * d1 - k1;
        let lo2 = -o2 - &r * d2 - k2;
        let hi1 = -o1 - &r * d1 + k1;
        let hi2 = -o2 - &r * d2 + k2;
        let b0_lo = ceil(&lo1.max(lo2));
        let b0_hi = floor(&hi1.min(hi2));
        if b0_hi >= b0_lo {
            let span = b0_hi - b0_lo + 1;
            count +=
                u64::try_from(span).map_err(|_| Error::Internal("strip count overflow".into()))?;
        }
        b1 += 1;
    }
    debug_assert!(!bound.is_zero());
    Ok(StripCount { count, bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn run(d1: i64, d2: i64, k1: Rational, k2: Rational) -> StripCount {
        let z = rat(0);
        strip_lattice_count((&rat(d1), &rat(d2)), (&k1, &k2), (&z, &z)).unwrap()
    }

    #[test]
    fn examples() {
        let s = run(0, 1, rat(1), rat(1));
        assert_eq!(s.count, 9);
        assert_eq!(s.bound, rat(25));
        let s = run(1, 2, rat(1), rat(1));
        assert_eq!(s.bound, rat(25));
        assert!(s.count <= 25);
        assert_eq!(run(0, 1, ratio(2, 5), ratio(2, 5)).count, 1);
    }

    #[test]
    fn degenerate() {
        let z = rat(0);
        assert_eq!(
            strip_lattice_count((&rat(1), &rat(1)), (&z, &z), (&z, &z)),
            Err(Error::DegenerateStrips)
        );
    }

    #[test]
    fn brute_force_agreement() {
        let d1 = ratio(3, 7);
        let d2 = ratio(-5, 4);
        let (k1, k2) = (ratio(9, 4), ratio(7, 3));
        let (o1, o2) = (ratio(1, 3), ratio(-2, 5));
        let s = strip_lattice_count((&d1, &d2), (&k1, &k2), (&o1, &o2)).unwrap();
        let mut brute = 0;
        for b1 in -50..=50 {
            for b0 in -50..=50 {
                let (b1, b0) = (rat(b1), rat(b0));
                if (&b1 * &d1 + &b0 + &o1).abs() <= k1 && (&b1 * &d2 + &b0 + &o2).abs() <= k2 {
                    brute += 1;
                }
            }
        }
        assert_eq!(s.count, brute);
    }
}
