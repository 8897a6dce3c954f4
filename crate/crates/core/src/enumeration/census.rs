//! Exact per-polynomial checks shared by the naive and fast censuses.

use crate::error::Result;
use crate::intpoly::IntPolynomial;
use crate::rational::Rational;
use crate::realroots::{isolate_with, RootInterval, SturmSequence};

use super::prefilter::{may_have_root, FloatWindow};

/// Half-open window `[lo, hi)` on one axis with its float enclosure.
#[derive(Clone, Debug)]
pub(crate) struct Window {
    pub lo: Rational,
    pub hi: Rational,
    pub float: FloatWindow,
}

impl Window {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        let float = FloatWindow::new(&lo, &hi);
        Window { lo, hi, float }
    }
}

/// Float coefficients of the monic polynomial with the given lower part.
pub(crate) fn float_coeffs(lower: &[i64], out: &mut [f64; 8]) -> usize {
    for (o, &c) in out.iter_mut().zip(lower) {
        *o = c as f64;
    }
    out[lower.len()] = 1.0;
    lower.len() + 1
}

pub(crate) fn prefilter(lower: &[i64], x: Option<&Window>, y: Option<&Window>) -> bool {
    let mut buf = [0.0; 8];
    let len = float_coeffs(lower, &mut buf);
    let c = &buf[..len];
    x.is_none_or(|w| may_have_root(c, w.float)) && y.is_none_or(|w| may_have_root(c, w.float))
}

/// An irreducible monic polynomial with roots in both windows.
pub(crate) struct Hit {
    pub poly: IntPolynomial,
    pub seq: SturmSequence,
    pub rx: usize,
    pub ry: usize,
}

impl Hit {
    pub fn roots_in(
        &self,
        x: Option<&Window>,
        y: Option<&Window>,
    ) -> (Vec<RootInterval>, Vec<RootInterval>) {
        let roots = isolate_with(&self.poly, &self.seq);
        let pick = |w: Option<&Window>| -> Vec<RootInterval> {
            roots
                .iter()
                .filter(|r| w.is_none_or(|w| r.in_half_open(&w.lo, &w.hi)))
                .cloned()
                .collect()
        };
        (pick(x), pick(y))
    }
}

/// Roots lying in both windows, i.e. the diagonal points of the hit.
pub(crate) fn diagonal_in(seq: &SturmSequence, x: Option<&Window>, y: Option<&Window>) -> usize {
    let lo = match (x, y) {
        (Some(a), Some(b)) => Some((&a.lo).max(&b.lo)),
        (Some(a), None) | (None, Some(a)) => Some(&a.lo),
        (None, None) => None,
    };
    let hi = match (x, y) {
        (Some(a), Some(b)) => Some((&a.hi).min(&b.hi)),
        (Some(a), None) | (None, Some(a)) => Some(&a.hi),
        (None, None) => None,
    };
    match (lo, hi) {
        (Some(lo), Some(hi)) if lo < hi => seq.count_half_open(lo, hi),
        (Some(_), Some(_)) => 0,
        _ => seq.count_real(),
    }
}

fn count_in(seq: &SturmSequence, w: Option<&Window>) -> usize {
    match w {
        Some(w) => seq.count_half_open(&w.lo, &w.hi),
        None => seq.count_real(),
    }
}

/// Exact root counts in both windows; `None` if either is zero or the
/// polynomial is reducible.
pub(crate) fn exact_hit(
    lower: &[i64],
    x: Option<&Window>,
    y: Option<&Window>,
) -> Result<Option<Hit>> {
    let poly = IntPolynomial::monic_from_lower(lower);
    let seq = SturmSequence::new(&poly);
    let rx = count_in(&seq, x);
    if rx == 0 {
        return Ok(None);
    }
    let ry = count_in(&seq, y);
    if ry == 0 || !poly.is_irreducible()? {
        return Ok(None);
    }
    Ok(Some(Hit { poly, seq, rx, ry }))
}
