//! Points in the neighbourhood of a curve, by a filtered full census or by
//! tiling the neighbourhood with squares.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::census::{exact_hit, prefilter, Window};
use super::curve::{Curve, CurveStrip};
use super::naive::{self, Points, Tally};
use super::{fast, CensusOptions};
use crate::error::{Error, Result};
use crate::rational::{fmt_rational, from_f64, to_f64, Rational};
use crate::realroots::{max_refinement_width, RootInterval};

/// Decides `|phi(x) - y| < c` for roots `x`, `y`, refining both until the
/// enclosure settles it.
pub fn strip_contains(
    curve: &Curve,
    x: &RootInterval,
    y: &RootInterval,
    c: &Rational,
) -> Result<bool> {
    if let (Some(a), Some(b)) = (x.exact_value(), y.exact_value()) {
        return Ok((curve.eval(&a) - b).abs() < *c);
    }
    let floor = max_refinement_width();
    let neg_c = -c.clone();
    let (mut x, mut y) = (x.clone(), y.clone());
    loop {
        let (fl, fh) = curve.enclose(x.lo(), x.hi());
        let dlo = fl - y.hi();
        let dhi = fh - y.lo();
        if dhi < *c && dlo > neg_c {
            return Ok(true);
        }
        if dlo >= *c || dhi <= neg_c {
            return Ok(false);
        }
        let xw = x.width() > floor;
        let yw = y.width() > floor;
        if !xw && !yw {
            return Err(Error::BoundaryAmbiguous(format!(
                "point near x = {}, y = {} on the strip boundary",
                x.midpoint_f64(),
                y.midpoint_f64()
            )));
        }
        if xw {
            x = x.bisect();
        }
        if yw {
            y = y.bisect();
        }
    }
}

/// Points of the hit inside the windows and the strip.
fn strip_points(
    strip: &CurveStrip,
    c: &Rational,
    lower: &[i64],
    x: &Window,
    y: &Window,
) -> Result<Points> {
    let mut k = Points::default();
    if !prefilter(lower, Some(x), Some(y)) {
        return Ok(k);
    }
    let Some(hit) = exact_hit(lower, Some(x), Some(y))? else {
        return Ok(k);
    };
    let (xs, ys) = hit.roots_in(Some(x), Some(y));
    for a in &xs {
        for b in &ys {
            if strip_contains(&strip.curve, a, b, c)? {
                k.all += 1;
                if a == b {
                    k.diagonal += 1;
                }
            }
        }
    }
    Ok(k)
}

/// Windows bounding the whole strip.
fn bounding_windows(strip: &CurveStrip, c: &Rational) -> (Window, Window) {
    let (lo, hi) = strip.curve.range(&strip.j_lo, &strip.j_hi);
    (
        Window::new(strip.j_lo.clone(), strip.j_hi.clone()),
        Window::new(lo - c, hi + c),
    )
}

pub(crate) fn count_naive(
    n: usize,
    q: u64,
    strip: &CurveStrip,
    opts: &CensusOptions,
) -> Result<Tally> {
    let c = strip.threshold(q);
    if c.is_zero() {
        return Ok(Tally::default());
    }
    let (x, y) = bounding_windows(strip, &c);
    naive::scan(n, q, opts, |lower| strip_points(strip, &c, lower, &x, &y))
}

/// Side of the covering squares: `c6 Q^(-gamma)` rounded down to a multiple
/// of `2^-20`.
pub fn tile_side(strip: &CurveStrip, q: u64) -> Rational {
    let v = strip.tile_constant() * (q as f64).powf(-strip.gamma);
    let units = (v * (1u64 << 20) as f64).floor().max(1.0);
    from_f64(units / (1u64 << 20) as f64)
        .unwrap_or_else(|_| Rational::new(1.into(), (1u64 << 20).into()))
}

/// Half-open squares covering the strip: columns start at the left end of
/// `J` (the last one clipped), rows are aligned at multiples of the side.
pub(crate) fn tiles(strip: &CurveStrip, q: u64) -> Vec<(Window, Window)> {
    let c = strip.threshold(q);
    let s = tile_side(strip, q);
    let mut out = Vec::new();
    let mut x0 = strip.j_lo.clone();
    while x0 < strip.j_hi {
        let x1 = (&x0 + &s).min(strip.j_hi.clone());
        let (fl, fh) = strip.curve.range(&x0, &x1);
        let m_lo = crate::rational::floor(&((fl - &c) / &s));
        let m_hi = crate::rational::ceil(&((fh + &c) / &s));
        let mut m = m_lo;
        while m < m_hi {
            let y0 = Rational::from_integer(m.clone()) * &s;
            let y1 = &y0 + &s;
            out.push((Window::new(x0.clone(), x1.clone()), Window::new(y0, y1)));
            m += 1;
        }
        x0 = x1;
    }
    out
}

pub(crate) fn count_tiled(
    n: usize,
    q: u64,
    strip: &CurveStrip,
    opts: &CensusOptions,
) -> Result<Tally> {
    let c = strip.threshold(q);
    if c.is_zero() {
        return Ok(Tally::default());
    }
    if n > 5 {
        return Err(Error::UnsupportedDegree(n));
    }
    let tiles = tiles(strip, q);
    let total = tiles.len() as u128 * super::monic::monic_count(n.saturating_sub(2), q);
    if total > opts.budget {
        return Err(Error::BudgetExceeded {
            size: total,
            budget: opts.budget,
        });
    }
    let parts: Vec<Result<(Tally, Vec<Vec<i64>>)>> = tiles
        .par_iter()
        .map(|(x, y)| {
            let mut found = Vec::new();
            let t = fast::scan_serial(n, q, x, y, |lower| {
                let k = strip_points(strip, &c, lower, x, y)?;
                if k.all > 0 {
                    found.push(lower.to_vec());
                }
                Ok(k)
            })?;
            Ok((t, found))
        })
        .collect();
    let mut total = Tally::default();
    let mut polys = BTreeSet::new();
    for p in parts {
        let (t, found) = p?;
        total = total.add(t);
        polys.extend(found);
    }
    total.polys = polys.len() as u64;
    Ok(total)
}

/// Human-readable tiling summary.
pub fn describe_tiling(strip: &CurveStrip, q: u64) -> String {
    let s = tile_side(strip, q);
    format!(
        "side {} ({}), {} tiles",
        fmt_rational(&s),
        to_f64(&s),
        tiles(strip, q).len()
    )
}
