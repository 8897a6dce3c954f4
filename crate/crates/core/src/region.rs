//! Axis-aligned rectangles and the whole plane, with the half-open membership
//! convention `[lo, hi)` on each axis so that tilings count every point once.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{fmt_rational, from_f64, ratio, serde_text, to_f64, Rational};

/// Parameters of a rectangle with sides `c6 * Q^(-gamma_i)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RectParams {
    pub q: u64,
    pub gamma1: f64,
    pub gamma2: f64,
    pub c6: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rectangle {
    #[serde(with = "serde_text")]
    pub d1: Rational,
    #[serde(with = "serde_text")]
    pub d2: Rational,
    #[serde(with = "serde_text")]
    pub w1: Rational,
    #[serde(with = "serde_text")]
    pub w2: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<RectParams>,
}

impl Rectangle {
    pub fn new(d1: Rational, d2: Rational, w1: Rational, w2: Rational) -> Result<Self> {
        if !w1.is_positive() || !w2.is_positive() {
            return Err(Error::InvalidRegion("widths must be positive".into()));
        }
        Ok(Rectangle {
            d1,
            d2,
            w1,
            w2,
            params: None,
        })
    }

    /// `[x_lo, x_hi) x [y_lo, y_hi)`.
    pub fn from_bounds(
        x_lo: Rational,
        x_hi: Rational,
        y_lo: Rational,
        y_hi: Rational,
    ) -> Result<Self> {
        let half = ratio(1, 2);
        let d1 = (&x_lo + &x_hi) * &half;
        let d2 = (&y_lo + &y_hi) * &half;
        Self::new(d1, d2, x_hi - x_lo, y_hi - y_lo)
    }

    /// Sides `c6 Q^(-gamma_i)`; the widths are the exact values of their
    /// double-precision evaluation.
    pub fn parametric(
        d1: Rational,
        d2: Rational,
        q: u64,
        gamma1: f64,
        gamma2: f64,
        c6: f64,
    ) -> Result<Self> {
        for g in [gamma1, gamma2] {
            if !(g > 0.0 && g < 1.0) {
                return Err(Error::InvalidRegion(format!("gamma {g} outside (0, 1)")));
            }
        }
        if !(c6 > 0.0) || q == 0 {
            return Err(Error::InvalidRegion("c6 and Q must be positive".into()));
        }
        let w1 = from_f64(c6 * (q as f64).powf(-gamma1))?;
        let w2 = from_f64(c6 * (q as f64).powf(-gamma2))?;
        let mut r = Self::new(d1, d2, w1, w2)?;
        r.params = Some(RectParams {
            q,
            gamma1,
            gamma2,
            c6,
        });
        Ok(r)
    }

    pub fn x_bounds(&self) -> (Rational, Rational) {
        let h = &self.w1 / Rational::from_integer(2.into());
        (&self.d1 - &h, &self.d1 + &h)
    }

    pub fn y_bounds(&self) -> (Rational, Rational) {
        let h = &self.w2 / Rational::from_integer(2.into());
        (&self.d2 - &h, &self.d2 + &h)
    }

    /// `mu_2` of the rectangle.
    pub fn area(&self) -> Rational {
        &self.w1 * &self.w2
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        let (xl, xh) = self.x_bounds();
        let (yl, yh) = self.y_bounds();
        &xl <= x && x < &xh && &yl <= y && y < &yh
    }

    /// The fast counting path needs `d1 != d2` and both midpoints nonzero.
    pub fn check_fast_midpoint(&self) -> Result<()> {
        if self.d1 == self.d2 || self.d1.is_zero() || self.d2.is_zero() {
            return Err(Error::InvalidRegion(format!(
                "degenerate midpoint ({}, {})",
                fmt_rational(&self.d1),
                fmt_rational(&self.d2)
            )));
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        format!(
            "rect d=({}, {}) w=({}, {})",
            fmt_rational(&self.d1),
            fmt_rational(&self.d2),
            to_f64(&self.w1),
            to_f64(&self.w2)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Region {
    Plane,
    Rect(Rectangle),
}

impl Region {
    pub fn x_bounds(&self) -> Option<(Rational, Rational)> {
        match self {
            Region::Plane => None,
            Region::Rect(r) => Some(r.x_bounds()),
        }
    }

    pub fn y_bounds(&self) -> Option<(Rational, Rational)> {
        match self {
            Region::Plane => None,
            Region::Rect(r) => Some(r.y_bounds()),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Region::Plane => "plane".into(),
            Region::Rect(r) => r.describe(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn half_open_membership() {
        let r = Rectangle::from_bounds(rat(1), rat(2), rat(-1), rat(0)).unwrap();
        assert!(r.contains(&rat(1), &rat(-1)));
        assert!(!r.contains(&rat(2), &rat(-1)));
        assert!(!r.contains(&rat(1), &rat(0)));
        assert_eq!(r.area(), rat(1));
        assert_eq!(r.d1, ratio(3, 2));
    }

    #[test]
    fn parametric_validation() {
        assert!(Rectangle::parametric(rat(1), rat(2), 100, 0.5, 0.3, 1.0).is_ok());
        assert!(Rectangle::parametric(rat(1), rat(2), 100, 1.0, 0.3, 1.0).is_err());
        assert!(Rectangle::new(rat(1), rat(2), rat(0), rat(1)).is_err());
        let r = Rectangle::parametric(rat(1), rat(2), 100, 0.5, 0.5, 1.0).unwrap();
        assert!((to_f64(&r.w1) - 0.1).abs() < 1e-15);
    }
}
