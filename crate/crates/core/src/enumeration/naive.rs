use rayon::prelude::*;

use super::monic::{blocks, decode_lower, monic_count, step_lower};
use super::CensusOptions;
use crate::error::{Error, Result};

/// Points one polynomial contributes; `diagonal` counts the pairs of equal
/// roots among them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct Points {
    pub all: u64,
    pub diagonal: u64,
}

/// Per-shard tally: points and contributing polynomials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct Tally {
    pub points: u64,
    pub diagonal: u64,
    pub polys: u64,
}

impl Tally {
    pub fn add(self, other: Tally) -> Tally {
        Tally {
            points: self.points + other.points,
            diagonal: self.diagonal + other.diagonal,
            polys: self.polys + other.polys,
        }
    }

    pub fn record(&mut self, k: Points) {
        if k.all > 0 {
            self.points += k.all;
            self.diagonal += k.diagonal;
            self.polys += 1;
        }
    }
}

/// Runs `visit` over every monic polynomial of degree `n` and height at most
/// `q`, split into contiguous index shards. `visit` returns the number of
/// points the polynomial contributes.
pub(crate) fn scan<F>(n: usize, q: u64, opts: &CensusOptions, visit: F) -> Result<Tally>
where
    F: Fn(&[i64]) -> Result<Points> + Sync,
{
    if n == 0 || n > 7 || q == 0 {
        return Err(Error::InvalidInput(format!(
            "need 1 <= n <= 7 and Q >= 1, got n={n}, Q={q}"
        )));
    }
    if q > i64::MAX as u64 / 4 {
        return Err(Error::InvalidInput(format!("Q={q} too large")));
    }
    let total = monic_count(n, q);
    if total > opts.budget {
        return Err(Error::BudgetExceeded {
            size: total,
            budget: opts.budget,
        });
    }
    let parts: Vec<Result<Tally>> = blocks(total, opts.shards)
        .into_par_iter()
        .map(|(start, end)| {
            let mut lower = vec![0i64; n];
            decode_lower(start, q, &mut lower);
            let mut t = Tally::default();
            for _ in start..end {
                t.record(visit(&lower)?);
                step_lower(&mut lower, q);
            }
            Ok(t)
        })
        .collect();
    parts
        .into_iter()
        .try_fold(Tally::default(), |acc, p| Ok(acc.add(p?)))
}
