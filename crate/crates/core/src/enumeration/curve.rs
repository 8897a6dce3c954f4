use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{fmt_rational, from_f64, parse_rational, rat, serde_text, to_f64, Rational};

/// A plane curve `y = phi(x)` with `phi` a polynomial with rational
/// coefficients, identified by a registry id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    id: String,
    coeffs: Vec<Rational>,
}

impl Curve {
    pub fn square() -> Self {
        Curve {
            id: "square".into(),
            coeffs: vec![rat(0), rat(0), rat(1)],
        }
    }

    pub fn cubic() -> Self {
        Curve {
            id: "cubic".into(),
            coeffs: vec![rat(0), rat(1), rat(0), rat(1)],
        }
    }

    pub fn identity() -> Self {
        Curve {
            id: "identity".into(),
            coeffs: vec![rat(0), rat(1)],
        }
    }

    /// `poly:c0,c1,...`, lowest power first.
    pub fn polynomial(coeffs: Vec<Rational>) -> Result<Self> {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(rat(0));
        }
        let id = format!(
            "poly:{}",
            coeffs
                .iter()
                .map(fmt_rational)
                .collect::<Vec<_>>()
                .join(",")
        );
        Ok(Curve { id, coeffs })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(rat(0), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    /// Enclosure of `phi([lo, hi])` by interval Horner evaluation.
    pub fn enclose(&self, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
        horner_interval(&self.coeffs, lo, hi)
    }

    fn derivative_coeffs(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat(k as i64))
            .collect()
    }

    /// Upper bound on `sup |phi'|` over `[lo, hi]`.
    pub fn slope_bound(&self, lo: &Rational, hi: &Rational) -> Rational {
        let d = self.derivative_coeffs();
        if d.is_empty() {
            return rat(0);
        }
        let pieces = 64;
        let step = (hi - lo) / rat(pieces);
        let mut best = rat(0);
        for k in 0..pieces {
            let a = lo + &step * rat(k);
            let b = &a + &step;
            let (l, h) = horner_interval(&d, &a, &b);
            best = best.max(l.abs()).max(h.abs());
        }
        best
    }

    /// Tight-ish enclosure of `phi` over `[lo, hi]` from subintervals.
    pub fn range(&self, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
        let pieces = 64;
        let step = (hi - lo) / rat(pieces);
        let mut out: Option<(Rational, Rational)> = None;
        for k in 0..pieces {
            let a = lo + &step * rat(k);
            let b = &a + &step;
            let (l, h) = self.enclose(&a, &b);
            out = Some(match out {
                None => (l, h),
                Some((ol, oh)) => (ol.min(l), oh.max(h)),
            });
        }
        out.expect("pieces > 0")
    }
}

fn mul_interval(a: (&Rational, &Rational), b: (&Rational, &Rational)) -> (Rational, Rational) {
    let p = [a.0 * b.0, a.0 * b.1, a.1 * b.0, a.1 * b.1];
    let lo = p.iter().min().expect("nonempty").clone();
    let hi = p.iter().max().expect("nonempty").clone();
    (lo, hi)
}

fn horner_interval(coeffs: &[Rational], lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut acc = (rat(0), rat(0));
    for c in coeffs.iter().rev() {
        let (l, h) = mul_interval((&acc.0, &acc.1), (lo, hi));
        acc = (l + c, h + c);
    }
    acc
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id)
    }
}

impl FromStr for Curve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "square" | "x^2" => Ok(Curve::square()),
            "cubic" | "x+x^3" => Ok(Curve::cubic()),
            "identity" | "x" => Ok(Curve::identity()),
            other => match other.strip_prefix("poly:") {
                Some(list) => {
                    let coeffs = list
                        .split(',')
                        .map(|c| parse_rational(c.trim()))
                        .collect::<Result<Vec<_>>>()
                        .map_err(|e| Error::InvalidCurve(format!("{other}: {e}")))?;
                    Curve::polynomial(coeffs)
                }
                None => Err(Error::InvalidCurve(format!("unknown curve '{other}'"))),
            },
        }
    }
}

impl Serialize for Curve {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.id)
    }
}

impl<'de> Deserialize<'de> for Curve {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The neighbourhood `{x in J, |phi(x) - y| < c1 Q^(-gamma)}` of a curve.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveStrip {
    pub curve: Curve,
    #[serde(with = "serde_text")]
    pub j_lo: Rational,
    #[serde(with = "serde_text")]
    pub j_hi: Rational,
    pub gamma: f64,
    pub c1: f64,
}

impl CurveStrip {
    pub fn new(curve: Curve, j_lo: Rational, j_hi: Rational, gamma: f64, c1: f64) -> Result<Self> {
        if j_lo >= j_hi {
            return Err(Error::InvalidCurve("interval J is empty".into()));
        }
        if !(gamma > 0.0 && gamma < 1.0) {
            return Err(Error::InvalidGamma(format!("gamma {gamma} outside (0, 1)")));
        }
        if !(c1 >= 0.0) || !c1.is_finite() {
            return Err(Error::InvalidInput(format!(
                "c1 must be a nonnegative number, got {c1}"
            )));
        }
        // A polynomial curve has a bounded slope on bounded J; its fixed
        // points are finite unless phi(x) = x, which is accepted as the
        // diagonal diagnostic.
        Ok(CurveStrip {
            curve,
            j_lo,
            j_hi,
            gamma,
            c1,
        })
    }

    /// Strip half-width `c1 Q^(-gamma)`: the exact value of its
    /// double-precision evaluation.
    pub fn threshold(&self, q: u64) -> Rational {
        from_f64(self.c1 * (q as f64).powf(-self.gamma)).unwrap_or_else(|_| rat(0))
    }

    /// `sup_J |phi'|`.
    pub fn slope(&self) -> Rational {
        self.curve.slope_bound(&self.j_lo, &self.j_hi)
    }

    /// `c1 / (1/2 + c4)`.
    pub fn tile_constant(&self) -> f64 {
        self.c1 / (0.5 + to_f64(&self.slope()))
    }

    pub fn describe(&self) -> String {
        format!(
            "curve {} J=[{}, {}) gamma={} c1={}",
            self.curve,
            fmt_rational(&self.j_lo),
            fmt_rational(&self.j_hi),
            self.gamma,
            self.c1
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn registry() {
        assert_eq!("square".parse::<Curve>().unwrap(), Curve::square());
        let c: Curve = "poly:1,0,1/2".parse().unwrap();
        assert_eq!(c.eval(&rat(2)), rat(3));
        assert_eq!(c.id(), "poly:1,0,0.5");
        assert!(matches!(
            "spiral".parse::<Curve>(),
            Err(Error::InvalidCurve(_))
        ));
    }

    #[test]
    fn enclosures_contain_values() {
        let c = Curve::cubic();
        let (lo, hi) = (ratio(-3, 2), ratio(1, 3));
        let (l, h) = c.range(&lo, &hi);
        for k in 0..=20 {
            let x = &lo + (&hi - &lo) * ratio(k, 20);
            let y = c.eval(&x);
            assert!(l <= y && y <= h);
        }
        let s = Curve::square().slope_bound(&ratio(11, 10), &ratio(19, 10));
        assert!(s >= ratio(38, 10) && s < rat(4));
    }

    #[test]
    fn strip_validation() {
        let sq = Curve::square;
        assert!(CurveStrip::new(sq(), rat(2), rat(1), 0.5, 1.0).is_err());
        assert!(matches!(
            CurveStrip::new(sq(), rat(1), rat(2), 1.0, 1.0),
            Err(Error::InvalidGamma(_))
        ));
        let s = CurveStrip::new(sq(), rat(1), rat(2), 0.5, 1.0).unwrap();
        assert_eq!(s.threshold(4), ratio(1, 2));
    }
}
