//! Tail-vector enumeration: with `(a_(n-1), ..., a_2)` fixed, a root in
//! each window forces `(a_1, a_0)` into the intersection of two strips.

use rayon::prelude::*;

use super::census::Window;
use super::monic::{blocks, decode_lower, monic_count, step_lower};
use super::naive::{Points, Tally};
use super::prefilter::taylor_shift;
use super::CensusOptions;
use crate::error::{Error, Result};

/// One strip `|t0 + a1 c + a0| <= k`.
#[derive(Clone, Copy, Debug)]
struct Strip {
    t0: f64,
    c: f64,
    k: f64,
}

/// For `P = r + a1 t + a0` with a root in `[c - h, c + h]`,
/// `|P(c)| <= h sup |P'| <= h (|r'(c)| + Q + sum_m m |r_m| h^(m-1))`
/// where `r_m` are the Taylor coefficients of `r` at `c`.
fn strip_for(r: &[f64], q: f64, c: f64, h: f64) -> Strip {
    let n = r.len() - 1;
    let mut t = [0.0f64; 8];
    let t = &mut t[..=n];
    t.copy_from_slice(r);
    taylor_shift(t, c);
    let mut e = 0.0;
    let mut hp = 1.0;
    for (m, tm) in t.iter().enumerate().skip(2) {
        hp *= h;
        e += m as f64 * tm.abs() * hp;
    }
    let k = h * (t[1].abs() + q + e);
    let scale =
        (c.abs() + h + 1.0).powi(n as i32) * (q + 1.0) * (n as f64 + 1.0) * (1u64 << n) as f64;
    Strip {
        t0: t[0],
        c,
        k: k + 1e-9 * scale,
    }
}

fn clamp_range(lo: f64, hi: f64, q: i64) -> (i64, i64) {
    let lo = if lo.is_finite() {
        (lo.floor() - 1.0).max(-(q as f64)) as i64
    } else {
        -q
    };
    let hi = if hi.is_finite() {
        (hi.ceil() + 1.0).min(q as f64) as i64
    } else {
        q
    };
    (lo.max(-q), hi.min(q))
}

/// Calls `emit(a1, a0)` for a superset of the pairs whose polynomial has a
/// root in both windows.
fn candidates(
    s1: Strip,
    s2: Strip,
    q: i64,
    mut emit: impl FnMut(i64, i64) -> Result<()>,
) -> Result<()> {
    let dc = s1.c - s2.c;
    let (a1_lo, a1_hi) = if dc != 0.0 {
        let dt = s1.t0 - s2.t0;
        let kk = s1.k + s2.k;
        let a = (-dt - kk) / dc;
        let b = (-dt + kk) / dc;
        clamp_range(a.min(b), a.max(b), q)
    } else {
        (-q, q)
    };
    for a1 in a1_lo..=a1_hi {
        let x = a1 as f64;
        let lo = (-s1.t0 - x * s1.c - s1.k).max(-s2.t0 - x * s2.c - s2.k);
        let hi = (-s1.t0 - x * s1.c + s1.k).min(-s2.t0 - x * s2.c + s2.k);
        if lo > hi + 4.0 {
            continue;
        }
        let (a0_lo, a0_hi) = clamp_range(lo, hi, q);
        for a0 in a0_lo..=a0_hi {
            emit(a1, a0)?;
        }
    }
    Ok(())
}

/// Visits every candidate polynomial (lower coefficients) for the windows,
/// over the tail-vector shards.
pub(crate) fn scan<F>(
    n: usize,
    q: u64,
    x: &Window,
    y: &Window,
    opts: &CensusOptions,
    visit: F,
) -> Result<Tally>
where
    F: Fn(&[i64]) -> Result<Points> + Sync,
{
    let parts: Vec<Result<Tally>> = shards(n, q, opts)?
        .into_par_iter()
        .map(|(start, end)| scan_block(n, q, x, y, start, end, &visit))
        .collect();
    parts
        .into_iter()
        .try_fold(Tally::default(), |acc, p| Ok(acc.add(p?)))
}

/// Sequential variant, used when the caller parallelises over windows.
pub(crate) fn scan_serial<F>(n: usize, q: u64, x: &Window, y: &Window, visit: F) -> Result<Tally>
where
    F: FnMut(&[i64]) -> Result<Points>,
{
    check(n, q)?;
    scan_block(n, q, x, y, 0, monic_count(n - 2, q), visit)
}

fn check(n: usize, q: u64) -> Result<()> {
    if !(2..=7).contains(&n) || q == 0 || q > (1 << 40) {
        return Err(Error::InvalidInput(format!(
            "fast path needs 2 <= n <= 7 and 1 <= Q, got n={n}, Q={q}"
        )));
    }
    Ok(())
}

fn shards(n: usize, q: u64, opts: &CensusOptions) -> Result<Vec<(u128, u128)>> {
    check(n, q)?;
    let tails = monic_count(n - 2, q);
    if tails > opts.budget {
        return Err(Error::BudgetExceeded {
            size: tails,
            budget: opts.budget,
        });
    }
    Ok(blocks(tails, opts.shards))
}

fn scan_block<F>(
    n: usize,
    q: u64,
    x: &Window,
    y: &Window,
    start: u128,
    end: u128,
    mut visit: F,
) -> Result<Tally>
where
    F: FnMut(&[i64]) -> Result<Points>,
{
    let qi = q as i64;
    let qf = q as f64;
    let mut tail = vec![0i64; n - 2];
    decode_lower(start, q, &mut tail);
    let mut lower = vec![0i64; n];
    let mut r = vec![0.0f64; n + 1];
    r[n] = 1.0;
    let mut t = Tally::default();
    for _ in start..end {
        for (k, &a) in tail.iter().enumerate() {
            r[k + 2] = a as f64;
            lower[k + 2] = a;
        }
        let s1 = strip_for(&r, qf, x.float.mid, x.float.rad);
        let s2 = strip_for(&r, qf, y.float.mid, y.float.rad);
        candidates(s1, s2, qi, |a1, a0| {
            lower[1] = a1;
            lower[0] = a0;
            t.record(visit(&lower)?);
            Ok(())
        })?;
        step_lower(&mut tail, q);
    }
    Ok(t)
}
