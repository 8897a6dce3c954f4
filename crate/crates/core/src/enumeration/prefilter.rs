//! Certified floating-point root exclusion, used only to skip polynomials
//! that provably have no root in an interval. Every rejection is backed by a
//! Taylor bound with a rounding margin far above double-precision error.

use crate::rational::{to_f64, Rational};

/// Closed interval `[m - r, m + r]` widened to contain the exact one.
#[derive(Clone, Copy, Debug)]
pub struct FloatWindow {
    pub mid: f64,
    pub rad: f64,
}

impl FloatWindow {
    pub fn new(lo: &Rational, hi: &Rational) -> Self {
        let (l, h) = (to_f64(lo), to_f64(hi));
        let mid = 0.5 * (l + h);
        let rad = 0.5 * (h - l);
        let slack = 1e-12 * (mid.abs() + rad) + 1e-300;
        FloatWindow {
            mid,
            rad: rad + slack,
        }
    }
}

/// Replaces coefficients of `P(t)` by those of `P(t + c)`.
pub(crate) fn taylor_shift(t: &mut [f64], c: f64) {
    let n = t.len();
    for k in 0..n {
        for j in (k..n.saturating_sub(1)).rev() {
            t[j] += c * t[j + 1];
        }
    }
}

/// `false` only if `P` (coefficients lowest first) certainly has no root in
/// the window.
pub fn may_have_root(coeffs: &[f64], w: FloatWindow) -> bool {
    let n = coeffs.len();
    if n <= 1 {
        return coeffs.first().is_none_or(|&c| c == 0.0);
    }
    let mut t = [0.0f64; 8];
    let t = &mut t[..n];
    t.copy_from_slice(coeffs);
    taylor_shift(t, w.mid);
    let mut tail = 0.0;
    let mut rk = 1.0;
    for &c in t.iter().skip(1) {
        rk *= w.rad;
        tail += c.abs() * rk;
    }
    let scale = (w.mid.abs() + w.rad + 1.0).powi(n as i32 - 1) * (1u64 << n) as f64;
    let magnitude: f64 = coeffs.iter().map(|c| c.abs()).sum::<f64>() * scale;
    t[0].abs() <= tail + 1e-9 * magnitude
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn excludes_and_keeps() {
        // t^2 - 2
        let c = [-2.0, 0.0, 1.0];
        assert!(may_have_root(&c, FloatWindow::new(&rat(1), &rat(2))));
        assert!(!may_have_root(&c, FloatWindow::new(&rat(2), &rat(3))));
        assert!(!may_have_root(
            &c,
            FloatWindow::new(&ratio(-1, 2), &ratio(1, 2))
        ));
        assert!(may_have_root(
            &c,
            FloatWindow::new(&ratio(141, 100), &ratio(142, 100))
        ));
        // t - 3 with a root on the boundary
        assert!(may_have_root(
            &[-3.0, 1.0],
            FloatWindow::new(&rat(3), &rat(4))
        ));
    }
}
