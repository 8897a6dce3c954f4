//! Special squares: squares not crowded by quadratic polynomials that are
//! small at the midpoint, banded by the size of the leading coefficient.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{ceil, fmt_rational, from_f64, rat, serde_text, to_f64, Rational};
use crate::region::Rectangle;

/// Exponent schedule `lambda_1 >= lambda_2 >= ...` for the leading
/// coefficient bands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    /// `L = floor((3 - 2 gamma) / (1 - gamma))`.
    pub l_max: usize,
    /// `lambda_1, ..., lambda_(L+3)`; every later value is 0.
    pub lambdas: Vec<Rational>,
}

impl Ladder {
    /// `lambda_l` for any `l >= 1`.
    pub fn lambda(&self, l: usize) -> Rational {
        assert!(l >= 1, "levels start at 1");
        self.lambdas.get(l - 1).cloned().unwrap_or_else(|| rat(0))
    }
}

fn check_gamma(gamma: &Rational) -> Result<()> {
    if !(gamma > &Rational::new(1.into(), 2.into()) && gamma < &rat(1)) {
        return Err(Error::InvalidGamma(format!(
            "gamma {} outside (1/2, 1)",
            fmt_rational(gamma)
        )));
    }
    Ok(())
}

pub fn lambda_ladder(gamma: &Rational) -> Result<Ladder> {
    check_gamma(gamma)?;
    let one = rat(1);
    let l_max = ((rat(3) - rat(2) * gamma) / (&one - gamma))
        .floor()
        .to_integer()
        .to_usize()
        .ok_or_else(|| Error::Internal("ladder length overflow".into()))?;
    let mut lambdas = Vec::with_capacity(l_max + 3);
    for l in 1..=l_max + 1 {
        lambdas.push(&one - rat(l as i64 - 1) * (&one - gamma) / rat(2));
    }
    lambdas.push(gamma - Rational::new(1.into(), 2.into()));
    lambdas.push(rat(0));
    Ok(Ladder { l_max, lambdas })
}

/// `sqrt(3/2 (|d1| + |d2|) max(1, 3|d1|, 3|d2|)^(n^2))`.
pub fn h_constant(n: u32, d1: f64, d2: f64) -> f64 {
    let m = 1f64.max(3.0 * d1.abs()).max(3.0 * d2.abs());
    (1.5 * (d1.abs() + d2.abs()) * m.powi((n * n) as i32)).sqrt()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecialSquareParams {
    #[serde(with = "serde_text")]
    pub gamma: Rational,
    pub q: u64,
    pub h: f64,
    pub delta: f64,
    #[serde(skip)]
    ladder: Option<Ladder>,
}

impl SpecialSquareParams {
    /// Defaults: `h` from [`h_constant`] with `n = 2` and
    /// `delta = 2^(-L-17) h^(-2) (d1 - d2)^2`.
    pub fn new(gamma: Rational, q: u64, d1: f64, d2: f64) -> Result<Self> {
        Self::with_h(gamma, q, d1, d2, h_constant(2, d1, d2))
    }

    pub fn with_h(gamma: Rational, q: u64, d1: f64, d2: f64, h: f64) -> Result<Self> {
        if d1 == d2 {
            return Err(Error::InvalidRegion("special squares need d1 != d2".into()));
        }
        if !(h > 0.0 && h.is_finite()) || q == 0 {
            return Err(Error::InvalidInput("h and Q must be positive".into()));
        }
        let ladder = lambda_ladder(&gamma)?;
        let delta = 2f64.powi(-(ladder.l_max as i32) - 17) / (h * h) * (d1 - d2) * (d1 - d2);
        Ok(SpecialSquareParams {
            gamma,
            q,
            h,
            delta,
            ladder: Some(ladder),
        })
    }

    /// Replaces the derived `delta`.
    pub fn with_delta(mut self, delta: f64) -> Result<Self> {
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "delta must be positive, got {delta}"
            )));
        }
        self.delta = delta;
        Ok(self)
    }

    pub fn ladder(&self) -> Ladder {
        match &self.ladder {
            Some(l) => l.clone(),
            None => lambda_ladder(&self.gamma).expect("validated"),
        }
    }

    pub fn levels(&self) -> usize {
        self.ladder().l_max + 2
    }

    /// Integer range `lo <= |a2| < hi` for level `l`, clipped at `Q`.
    fn band(&self, l: usize) -> (u64, u64) {
        let ladder = self.ladder();
        let q = self.q as f64;
        let lo = from_f64(self.delta * q.powf(to_f64(&ladder.lambda(l + 1)))).expect("finite");
        let hi = from_f64(self.delta * q.powf(to_f64(&ladder.lambda(l)))).expect("finite");
        let lo = ceil(&lo).max(BigInt::one());
        let hi = ceil(&hi);
        let cap = BigInt::from(self.q) + BigInt::one();
        let lo = lo.min(cap.clone()).to_u64().expect("small");
        let hi = hi.min(cap).to_u64().expect("small");
        (lo, hi.max(lo))
    }

    /// `delta^3 2^(l+3) Q^(1 + 2 lambda_(l+1)) mu_2`.
    pub fn threshold(&self, l: usize, area: f64) -> f64 {
        let lam = to_f64(&self.ladder().lambda(l + 1));
        self.delta.powi(3) * 2f64.powi(l as i32 + 3) * (self.q as f64).powf(1.0 + 2.0 * lam) * area
    }
}

/// Weights with `v1 + v2 = 1`.
fn check_weights(v1: f64, v2: f64) -> Result<()> {
    if !(v1 >= 0.0 && v2 >= 0.0) || (v1 + v2 - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidWeights(v1.to_string(), v2.to_string()));
    }
    Ok(())
}

/// The two value tests for a square: midpoint and half-side per axis, with
/// the thresholds `h Q^(-v_i)` as exact rationals.
struct ValueTest {
    d: [Rational; 2],
    half: [Rational; 2],
    lo: [Rational; 2],
    hi: [Rational; 2],
    bound: [Rational; 2],
}

impl ValueTest {
    fn new(rect: &Rectangle, params: &SpecialSquareParams, v: [f64; 2]) -> Result<Self> {
        let q = params.q as f64;
        let (xl, xh) = rect.x_bounds();
        let (yl, yh) = rect.y_bounds();
        Ok(ValueTest {
            d: [rect.d1.clone(), rect.d2.clone()],
            half: [&rect.w1 / rat(2), &rect.w2 / rat(2)],
            lo: [xl, yl],
            hi: [xh, yh],
            bound: [
                from_f64(params.h * q.powf(-v[0]))?,
                from_f64(params.h * q.powf(-v[1]))?,
            ],
        })
    }

    /// `|P(d_i)| < h Q^(-v_i) + sup_(I_i) |P'| * side / 2` for both axes.
    fn relaxed(&self, a: [i64; 3]) -> bool {
        (0..2).all(|i| {
            let d = &self.d[i];
            let val = (rat(a[2]) * d + rat(a[1])) * d + rat(a[0]);
            let dl = rat(2 * a[2]) * &self.lo[i] + rat(a[1]);
            let dh = rat(2 * a[2]) * &self.hi[i] + rat(a[1]);
            let slope = dl.abs().max(dh.abs());
            val.abs() < &self.bound[i] + slope * &self.half[i]
        })
    }

    /// `min over the closed side of |P| < h Q^(-v_i)` for both axes.
    fn exact(&self, a: [i64; 3]) -> bool {
        (0..2).all(|i| min_abs_quadratic(a, &self.lo[i], &self.hi[i]) < self.bound[i])
    }
}

/// `min |a2 t^2 + a1 t + a0|` over `[lo, hi]`.
pub fn min_abs_quadratic(a: [i64; 3], lo: &Rational, hi: &Rational) -> Rational {
    let p = |t: &Rational| (rat(a[2]) * t + rat(a[1])) * t + rat(a[0]);
    let mut pts = vec![p(lo), p(hi)];
    if a[2] != 0 {
        let v = Rational::new((-a[1]).into(), (2 * a[2]).into());
        if lo <= &v && &v <= hi {
            pts.push(p(&v));
        }
    }
    let pos = pts.iter().any(|x| x.is_positive());
    let neg = pts.iter().any(|x| x.is_negative());
    if (pos && neg) || pts.iter().any(|x| x.is_zero()) {
        return rat(0);
    }
    pts.into_iter().map(|x| x.abs()).min().expect("nonempty")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelCensus {
    pub l: usize,
    #[serde(with = "serde_text")]
    pub lambda_l: Rational,
    #[serde(with = "serde_text")]
    pub lambda_next: Rational,
    /// Polynomials passing the midpoint + slack test.
    pub count: u64,
    /// Polynomials passing the exact existential test.
    pub exact_count: u64,
    pub threshold: f64,
    /// `count <= threshold`; a sound certificate for the level condition.
    pub satisfied: bool,
}

pub const LEVEL_CSV_HEADER: &str = "l,lambda_l,lambda_l1,count,threshold,satisfied";

impl LevelCensus {
    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            self.l.to_string(),
            fmt_rational(&self.lambda_l),
            fmt_rational(&self.lambda_next),
            self.count.to_string(),
            format!("{:e}", self.threshold),
            self.satisfied.to_string(),
        ]
    }
}

fn check_square(
    rect: &Rectangle,
    params: &SpecialSquareParams,
    l: usize,
    v1: f64,
    v2: f64,
) -> Result<()> {
    check_weights(v1, v2)?;
    let max = params.levels();
    if l == 0 || l > max {
        return Err(Error::InvalidLevel { level: l, max });
    }
    if rect.d1 == rect.d2 {
        return Err(Error::InvalidRegion("special squares need d1 != d2".into()));
    }
    Ok(())
}

/// Census of quadratics of height at most `Q` in the leading-coefficient
/// band of level `l`, scanning only that band.
pub fn l_condition_census(
    rect: &Rectangle,
    l: usize,
    v1: f64,
    v2: f64,
    params: &SpecialSquareParams,
) -> Result<LevelCensus> {
    check_square(rect, params, l, v1, v2)?;
    let test = ValueTest::new(rect, params, [v1, v2])?;
    let (lo, hi) = params.band(l);
    let q = params.q as i64;
    let (mut count, mut exact_count) = (0u64, 0u64);
    for m in lo..hi {
        for a2 in [-(m as i64), m as i64] {
            for a1 in -q..=q {
                for a0 in -q..=q {
                    let a = [a0, a1, a2];
                    if test.relaxed(a) {
                        count += 1;
                        if test.exact(a) {
                            exact_count += 1;
                        }
                    }
                }
            }
        }
    }
    let ladder = params.ladder();
    let threshold = params.threshold(l, to_f64(&rect.area()));
    Ok(LevelCensus {
        l,
        lambda_l: ladder.lambda(l),
        lambda_next: ladder.lambda(l + 1),
        count,
        exact_count,
        threshold,
        satisfied: (count as f64) <= threshold,
    })
}

/// Relaxed counts for every level from one pass over all quadratics of
/// height at most `Q`, without using the band structure.
pub fn flat_census(
    rect: &Rectangle,
    v1: f64,
    v2: f64,
    params: &SpecialSquareParams,
) -> Result<Vec<u64>> {
    check_square(rect, params, 1, v1, v2)?;
    let test = ValueTest::new(rect, params, [v1, v2])?;
    let levels = params.levels();
    let ladder = params.ladder();
    let q = params.q as i64;
    let qf = params.q as f64;
    let edges: Vec<Rational> = (1..=levels + 1)
        .map(|l| from_f64(params.delta * qf.powf(to_f64(&ladder.lambda(l)))))
        .collect::<Result<_>>()?;
    let mut counts = vec![0u64; levels];
    for a2 in -q..=q {
        let m = rat(a2.abs());
        for a1 in -q..=q {
            for a0 in -q..=q {
                let a = [a0, a1, a2];
                let mut passed = None;
                for l in 1..=levels {
                    if edges[l] <= m && m < edges[l - 1] && !m.is_zero() {
                        let ok = *passed.get_or_insert_with(|| test.relaxed(a));
                        if ok {
                            counts[l - 1] += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(counts)
}

/// All level conditions, `l = 1, ..., L + 2`.
pub fn level_table(
    rect: &Rectangle,
    v1: f64,
    v2: f64,
    params: &SpecialSquareParams,
) -> Result<Vec<LevelCensus>> {
    (1..=params.levels())
        .map(|l| l_condition_census(rect, l, v1, v2, params))
        .collect()
}

pub fn is_special(
    rect: &Rectangle,
    v1: f64,
    v2: f64,
    params: &SpecialSquareParams,
) -> Result<bool> {
    for l in 1..=params.levels() {
        if !l_condition_census(rect, l, v1, v2, params)?.satisfied {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse_rational, ratio};

    fn g(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn ladders() {
        let l = lambda_ladder(&g("0.6")).unwrap();
        assert_eq!(l.l_max, 4);
        let want: Vec<Rational> = ["1", "0.8", "0.6", "0.4", "0.2", "0.1", "0"]
            .iter()
            .map(|s| g(s))
            .collect();
        assert_eq!(l.lambdas, want);
        assert_eq!(l.lambda(9), rat(0));
        let l = lambda_ladder(&g("0.75")).unwrap();
        assert_eq!(l.l_max, 6);
        assert_eq!(l.lambda(7), ratio(1, 4));
        assert_eq!(l.lambda(8), ratio(1, 4));
        assert!(matches!(
            lambda_ladder(&g("0.5")),
            Err(Error::InvalidGamma(_))
        ));
    }

    #[test]
    fn h_example() {
        assert!((h_constant(2, 1.0, 2.0) - 5832f64.sqrt()).abs() < 1e-9);
    }

    fn square(q: u64, gamma: f64) -> Rectangle {
        Rectangle::parametric(rat(1), rat(2), q, gamma, gamma, 1.0).unwrap()
    }

    #[test]
    fn default_delta_makes_bands_empty() {
        let p = SpecialSquareParams::new(g("0.6"), 20, 1.0, 2.0).unwrap();
        let r = square(20, 0.6);
        assert!(is_special(&r, 0.5, 0.5, &p).unwrap());
        assert!(level_table(&r, 0.5, 0.5, &p)
            .unwrap()
            .iter()
            .all(|c| c.count == 0));
    }

    #[test]
    fn banded_matches_flat() {
        let p = SpecialSquareParams::new(g("0.6"), 12, 1.0, 2.0)
            .unwrap()
            .with_delta(0.5)
            .unwrap();
        let r = square(12, 0.6);
        let flat = flat_census(&r, 0.5, 0.5, &p).unwrap();
        let banded: Vec<u64> = level_table(&r, 0.5, 0.5, &p)
            .unwrap()
            .iter()
            .map(|c| c.count)
            .collect();
        assert_eq!(flat, banded);
        assert!(banded.iter().any(|&c| c > 0));
        for c in level_table(&r, 0.5, 0.5, &p).unwrap() {
            assert!(c.exact_count <= c.count);
        }
    }

    #[test]
    fn argument_errors() {
        let p = SpecialSquareParams::new(g("0.6"), 10, 1.0, 2.0).unwrap();
        let r = square(10, 0.6);
        assert!(matches!(
            l_condition_census(&r, 1, 0.5, 0.6, &p),
            Err(Error::InvalidWeights(..))
        ));
        assert!(matches!(
            l_condition_census(&r, 7, 0.5, 0.5, &p),
            Err(Error::InvalidLevel { level: 7, max: 6 })
        ));
    }

    #[test]
    fn min_abs() {
        assert_eq!(min_abs_quadratic([-2, 0, 1], &rat(1), &rat(2)), rat(0));
        assert_eq!(min_abs_quadratic([-2, 0, 1], &rat(2), &rat(3)), rat(2));
        assert_eq!(min_abs_quadratic([1, 0, 1], &rat(-1), &rat(1)), rat(1));
    }
}
