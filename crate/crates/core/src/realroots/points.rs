use std::cmp::Ordering;
use std::sync::Arc;

use super::{isolate_real_roots, RootInterval};
use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;
use crate::rational::{fmt_decimal, Rational};
use crate::region::Region;

/// An ordered pair `(alpha_i, alpha_j)` of real roots of one monic
/// irreducible polynomial. `i == j` is a valid point.
#[derive(Clone, Debug)]
pub struct AlgebraicIntegerPoint {
    pub poly: Arc<IntPolynomial>,
    pub i: usize,
    pub j: usize,
    pub x: RootInterval,
    pub y: RootInterval,
}

impl PartialEq for AlgebraicIntegerPoint {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly && self.i == other.i && self.j == other.j
    }
}

impl Eq for AlgebraicIntegerPoint {}

impl PartialOrd for AlgebraicIntegerPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicIntegerPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.poly
            .cmp(&other.poly)
            .then(self.i.cmp(&other.i))
            .then(self.j.cmp(&other.j))
    }
}

impl AlgebraicIntegerPoint {
    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn height(&self) -> num_bigint::BigInt {
        self.poly.height().unwrap_or_default()
    }

    /// `coeffs,i,j,x_lo,x_hi,y_lo,y_hi` with endpoints rounded outward to
    /// `digits` decimals after refining below `10^-digits`.
    pub fn to_record(&self, digits: usize) -> String {
        let eps = Rational::new(
            1.into(),
            num_traits::pow(num_bigint::BigInt::from(10), digits),
        );
        let x = self.x.refine(&eps);
        let y = self.y.refine(&eps);
        format!(
            "{},{},{},{},{},{},{}",
            self.poly,
            self.i,
            self.j,
            fmt_decimal(x.lo(), digits, false),
            fmt_decimal(x.hi(), digits, true),
            fmt_decimal(y.lo(), digits, false),
            fmt_decimal(y.hi(), digits, true),
        )
    }
}

/// Every ordered pair of real roots of `P` lying in `region`.
pub fn extract_points(p: &IntPolynomial, region: &Region) -> Result<Vec<AlgebraicIntegerPoint>> {
    if !p.is_monic() {
        return Err(Error::InvalidInput(format!("{p} is not monic")));
    }
    if p.degree().unwrap_or(0) <= 5 && !p.is_irreducible()? {
        return Err(Error::InvalidInput(format!("{p} is reducible")));
    }
    extract_points_unchecked(p, region)
}

/// As [`extract_points`] without the monic/irreducible validation.
pub fn extract_points_unchecked(
    p: &IntPolynomial,
    region: &Region,
) -> Result<Vec<AlgebraicIntegerPoint>> {
    let roots = isolate_real_roots(p)?;
    let inside = |r: &RootInterval, b: &Option<(Rational, Rational)>| match b {
        None => true,
        Some((lo, hi)) => r.in_half_open(lo, hi),
    };
    let xb = region.x_bounds();
    let yb = region.y_bounds();
    let xs: Vec<usize> = (0..roots.len())
        .filter(|&i| inside(&roots[i], &xb))
        .collect();
    let ys: Vec<usize> = (0..roots.len())
        .filter(|&j| inside(&roots[j], &yb))
        .collect();
    let poly = Arc::new(p.clone());
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for &i in &xs {
        for &j in &ys {
            out.push(AlgebraicIntegerPoint {
                poly: poly.clone(),
                i,
                j,
                x: roots[i].clone(),
                y: roots[j].clone(),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::region::Rectangle;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn golden_ratio_points() {
        let q = p(&[-1, -1, 1]);
        let r = Region::Rect(Rectangle::from_bounds(rat(1), rat(2), rat(-1), rat(0)).unwrap());
        let pts = extract_points(&q, &r).unwrap();
        assert_eq!(pts.len(), 1);
        assert!((pts[0].x.midpoint_f64() - 1.618).abs() < 0.5);
        assert_eq!((pts[0].i, pts[0].j), (1, 0));

        let diag = Region::Rect(Rectangle::from_bounds(rat(1), rat(2), rat(1), rat(2)).unwrap());
        let pts = extract_points(&q, &diag).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!((pts[0].i, pts[0].j), (1, 1));
        let rec = pts[0].to_record(4);
        let fields: Vec<&str> = rec.split(',').collect();
        assert_eq!(&fields[..3], &["-1 -1 1", "1", "1"]);
        let lo: f64 = fields[3].parse().unwrap();
        let hi: f64 = fields[4].parse().unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!(lo <= phi && phi <= hi && hi - lo <= 2e-4);
    }

    #[test]
    fn whole_plane_gives_r_squared() {
        assert!(extract_points(&p(&[1, 0, 1]), &Region::Plane)
            .unwrap()
            .is_empty());
        assert_eq!(
            extract_points(&p(&[-1, -3, 0, 1]), &Region::Plane)
                .unwrap()
                .len(),
            9
        );
        assert!(extract_points(&p(&[-1, 0, 1]), &Region::Plane).is_err());
        assert!(extract_points(&p(&[-1, 0, 2]), &Region::Plane).is_err());
    }
}
