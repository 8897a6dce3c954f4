use serde::{Deserialize, Serialize};

use super::curve::CurveStrip;
use crate::error::{Error, Result};
use crate::rational::fmt_rational;
use crate::region::Region;

pub const CSV_HEADER: &str = "n,Q,gamma1,gamma2,d1,d2,count,diagonal,polys,algo,seconds";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Naive,
    Fast,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Fast => "fast",
        }
    }
}

/// What was counted: points in a region, or points in a curve strip.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    Region(Region),
    Curve(CurveStrip),
}

impl Scope {
    pub fn describe(&self) -> String {
        match self {
            Scope::Region(r) => r.describe(),
            Scope::Curve(c) => c.describe(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountReport {
    pub n: usize,
    pub q: u64,
    pub scope: Scope,
    /// Algebraic integer points counted.
    pub count: u64,
    /// Points with equal coordinates (a root paired with itself), included
    /// in `count`.
    pub diagonal: u64,
    /// Distinct polynomials contributing at least one point.
    pub polys: u64,
    pub shards: usize,
    pub seconds: f64,
    pub algo: Algorithm,
}

impl CountReport {
    pub fn empty(n: usize, q: u64, scope: Scope, algo: Algorithm) -> Self {
        CountReport {
            n,
            q,
            scope,
            count: 0,
            diagonal: 0,
            polys: 0,
            shards: 1,
            seconds: 0.0,
            algo,
        }
    }

    /// Combines reports over disjoint coefficient shards.
    pub fn merge(&mut self, other: &CountReport) -> Result<()> {
        if self.n != other.n
            || self.q != other.q
            || self.scope != other.scope
            || self.algo != other.algo
        {
            return Err(Error::InvalidInput(
                "cannot merge reports with different parameters".into(),
            ));
        }
        self.count += other.count;
        self.diagonal += other.diagonal;
        self.polys += other.polys;
        self.shards += other.shards;
        self.seconds += other.seconds;
        Ok(())
    }

    /// Fields in [`CSV_HEADER`] order. Without `timing` the seconds column is
    /// left empty so that repeated runs produce identical bytes.
    pub fn csv_fields(&self, timing: bool) -> Vec<String> {
        let (g1, g2, d1, d2) = match &self.scope {
            Scope::Region(Region::Plane) => {
                (String::new(), String::new(), String::new(), String::new())
            }
            Scope::Region(Region::Rect(r)) => {
                let (g1, g2) = match &r.params {
                    Some(p) => (p.gamma1.to_string(), p.gamma2.to_string()),
                    None => (String::new(), String::new()),
                };
                (g1, g2, fmt_rational(&r.d1), fmt_rational(&r.d2))
            }
            Scope::Curve(c) => (
                c.gamma.to_string(),
                String::new(),
                String::new(),
                String::new(),
            ),
        };
        vec![
            self.n.to_string(),
            self.q.to_string(),
            g1,
            g2,
            d1,
            d2,
            self.count.to_string(),
            self.diagonal.to_string(),
            self.polys.to_string(),
            self.algo.as_str().to_string(),
            if timing {
                format!("{:.3}", self.seconds)
            } else {
                String::new()
            },
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_sums() {
        let mut a = CountReport::empty(2, 2, Scope::Region(Region::Plane), Algorithm::Naive);
        a.count = 3;
        a.polys = 1;
        let mut b = a.clone();
        b.count = 5;
        a.merge(&b).unwrap();
        assert_eq!((a.count, a.polys, a.shards), (8, 2, 2));
        b.q = 3;
        assert!(a.merge(&b).is_err());
    }

    #[test]
    fn csv_row() {
        let mut a = CountReport::empty(2, 2, Scope::Region(Region::Plane), Algorithm::Naive);
        a.count = 28;
        a.diagonal = 14;
        a.polys = 7;
        assert_eq!(a.csv_fields(false).join(","), "2,2,,,,,28,14,7,naive,");
        assert_eq!(CSV_HEADER.split(',').count(), a.csv_fields(true).len());
    }
}
