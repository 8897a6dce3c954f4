//! Exhaustive and accelerated censuses of algebraic integer points in
//! rectangles and curve strips.

mod census;
pub mod curve;
mod fast;
pub mod monic;
mod naive;
pub mod prefilter;
pub mod report;
pub mod strip;
pub mod strip_census;

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::region::{Rectangle, Region};
use census::{diagonal_in, exact_hit, prefilter as float_prefilter, Window};
use naive::Points;

pub use curve::{Curve, CurveStrip};
pub use monic::{enumerate_monic, monic_count, MonicEnumerator};
pub use report::{Algorithm, CountReport, Scope, CSV_HEADER};
pub use strip::{strip_lattice_count, StripCount};
pub use strip_census::strip_contains;

/// Default refusal threshold for the number of enumerated polynomials.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusOptions {
    /// Number of disjoint work blocks; results do not depend on it.
    pub shards: usize,
    pub budget: u128,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            shards: 4 * rayon::current_num_threads(),
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StripStrategy {
    /// Full census filtered by the strip predicate.
    Naive,
    /// Cover the strip with squares and run the fast path on each.
    Tiled,
}

fn windows(region: &Region) -> (Option<Window>, Option<Window>) {
    match region {
        Region::Plane => (None, None),
        Region::Rect(r) => {
            let (xl, xh) = r.x_bounds();
            let (yl, yh) = r.y_bounds();
            (Some(Window::new(xl, xh)), Some(Window::new(yl, yh)))
        }
    }
}

fn rect_points(lower: &[i64], x: Option<&Window>, y: Option<&Window>) -> Result<Points> {
    if !float_prefilter(lower, x, y) {
        return Ok(Points::default());
    }
    Ok(
        exact_hit(lower, x, y)?.map_or(Points::default(), |h| Points {
            all: (h.rx * h.ry) as u64,
            diagonal: diagonal_in(&h.seq, x, y) as u64,
        }),
    )
}

/// Ground-truth census: every monic polynomial of degree `n`, height at most
/// `q`, filtered by irreducibility, points counted in `region`.
pub fn count_points_naive(
    n: usize,
    q: u64,
    region: &Region,
    opts: &CensusOptions,
) -> Result<CountReport> {
    if n > 5 {
        return Err(Error::UnsupportedDegree(n));
    }
    let start = Instant::now();
    let (x, y) = windows(region);
    let t = naive::scan(n, q, opts, |lower| {
        rect_points(lower, x.as_ref(), y.as_ref())
    })?;
    Ok(CountReport {
        n,
        q,
        scope: Scope::Region(region.clone()),
        count: t.points,
        diagonal: t.diagonal,
        polys: t.polys,
        shards: opts.shards.max(1),
        seconds: start.elapsed().as_secs_f64(),
        algo: Algorithm::Naive,
    })
}

/// Same count as [`count_points_naive`] for a rectangle, enumerating only
/// the `(a_1, a_0)` pairs compatible with a root in each side interval.
pub fn count_points_rect_fast(
    n: usize,
    q: u64,
    rect: &Rectangle,
    opts: &CensusOptions,
) -> Result<CountReport> {
    rect.check_fast_midpoint()?;
    if n > 5 {
        return Err(Error::UnsupportedDegree(n));
    }
    let start = Instant::now();
    let region = Region::Rect(rect.clone());
    let (x, y) = windows(&region);
    let (x, y) = (x.expect("rectangle"), y.expect("rectangle"));
    let t = fast::scan(n, q, &x, &y, opts, |lower| {
        rect_points(lower, Some(&x), Some(&y))
    })?;
    Ok(CountReport {
        n,
        q,
        scope: Scope::Region(region),
        count: t.points,
        diagonal: t.diagonal,
        polys: t.polys,
        shards: opts.shards.max(1),
        seconds: start.elapsed().as_secs_f64(),
        algo: Algorithm::Fast,
    })
}

/// Points with `x` in `J` and `|phi(x) - y| < c1 Q^(-gamma)`.
pub fn count_curve_strip(
    n: usize,
    q: u64,
    strip: &CurveStrip,
    strategy: StripStrategy,
    opts: &CensusOptions,
) -> Result<CountReport> {
    if n > 5 {
        return Err(Error::UnsupportedDegree(n));
    }
    let start = Instant::now();
    let (t, algo) = match strategy {
        StripStrategy::Naive => (
            strip_census::count_naive(n, q, strip, opts)?,
            Algorithm::Naive,
        ),
        StripStrategy::Tiled => (
            strip_census::count_tiled(n, q, strip, opts)?,
            Algorithm::Fast,
        ),
    };
    Ok(CountReport {
        n,
        q,
        scope: Scope::Curve(strip.clone()),
        count: t.points,
        diagonal: t.diagonal,
        polys: t.polys,
        shards: opts.shards.max(1),
        seconds: start.elapsed().as_secs_f64(),
        algo,
    })
}
