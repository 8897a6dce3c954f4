//! Least-squares exponent fits on log-log data.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Documented tolerance on fitted exponents. Finite-Q fits carry no error
/// bars of their own, so this is a fixed allowance.
pub const EXPONENT_TOLERANCE: f64 = 0.35;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    /// Root mean square of the log residuals.
    pub residual: f64,
    pub q: Vec<u64>,
    pub counts: Vec<u64>,
}

impl FitResult {
    pub fn within(&self, target: f64, tol: f64) -> bool {
        (self.slope - target).abs() <= tol
    }
}

/// Fits `log count = slope * log Q + intercept`.
pub fn fit_exponent(points: &[(u64, u64)]) -> Result<FitResult> {
    if points.len() < 4 {
        return Err(Error::InvalidInput(format!(
            "need at least 4 points to fit, got {}",
            points.len()
        )));
    }
    if let Some(&(q, _)) = points.iter().find(|p| p.1 == 0) {
        return Err(Error::CannotFitZeroCounts(q.to_string()));
    }
    let xs: Vec<f64> = points.iter().map(|p| (p.0 as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| (p.1 as f64).ln()).collect();
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidInput("all Q values are equal".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - slope * x - intercept).powi(2))
        .sum();
    Ok(FitResult {
        slope,
        intercept,
        residual: (ss / m).sqrt(),
        q: points.iter().map(|p| p.0).collect(),
        counts: points.iter().map(|p| p.1).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_power_law() {
        // 7 Q^2.4 is an integer at Q = 2^(5k).
        let pts: Vec<(u64, u64)> = (1..=4u32)
            .map(|k| (1u64 << (5 * k), 7u64 << (12 * k)))
            .collect();
        let f = fit_exponent(&pts).unwrap();
        assert!((f.slope - 2.4).abs() < 1e-12);
        assert!((f.intercept - 7f64.ln()).abs() < 1e-9);
        assert!(f.residual < 1e-12);
    }

    #[test]
    fn constant_data() {
        let f = fit_exponent(&[(40, 9), (80, 9), (160, 9), (320, 9)]).unwrap();
        assert!(f.slope.abs() < 1e-12);
    }

    #[test]
    fn zero_count_is_reported() {
        let e = fit_exponent(&[(40, 0), (80, 1), (160, 2), (320, 3)]).unwrap_err();
        assert_eq!(e.name(), "cannot-fit-zero-counts");
        assert!(fit_exponent(&[(1, 1), (2, 2)]).is_err());
    }
}
