use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::intpoly::IntPolynomial;
use crate::rational::Rational;

/// Sturm sequence `P, P', -rem(P, P'), ...` over the integers, with each
/// pseudo-remainder rescaled by a positive factor and made primitive.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    polys: Vec<IntPolynomial>,
}

/// Remainder of `f` modulo `g` times a positive constant, made primitive.
fn positive_pseudo_remainder(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    let dg = g.degree().expect("nonzero divisor");
    let lg = g.leading().expect("nonzero divisor").clone();
    let mut r: Vec<BigInt> = f.coeffs().to_vec();
    let mut steps = 0u32;
    while r.len() > dg {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lg;
        }
        for (i, c) in g.coeffs().iter().enumerate() {
            r[dr - dg + i] -= &lr * c;
        }
        steps += 1;
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    let mut out = IntPolynomial::new(r);
    if lg.is_negative() && steps % 2 == 1 {
        out = IntPolynomial::new(out.coeffs().iter().map(|c| -c).collect());
    }
    let content = out.content();
    if !content.is_zero() {
        out = IntPolynomial::new(out.coeffs().iter().map(|c| c / &content).collect());
    }
    out
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl SturmSequence {
    pub fn new(p: &IntPolynomial) -> Self {
        let mut polys = vec![p.clone()];
        let dp = p.derivative().expect("nonzero polynomial");
        if !dp.is_zero() {
            polys.push(dp);
        }
        while polys.len() >= 2 {
            let k = polys.len();
            let r = positive_pseudo_remainder(&polys[k - 2], &polys[k - 1]);
            if r.is_zero() {
                break;
            }
            polys.push(IntPolynomial::new(r.coeffs().iter().map(|c| -c).collect()));
        }
        SturmSequence { polys }
    }

    /// The last element is (up to a constant) `gcd(P, P')`; a positive degree
    /// means `P` has a repeated root.
    pub fn is_squarefree(&self) -> bool {
        self.polys.last().and_then(|p| p.degree()) == Some(0) || self.polys.len() == 1
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.polys.iter().map(|p| match p.sign_at(x) {
            Ordering::Greater => 1,
            Ordering::Less => -1,
            Ordering::Equal => 0,
        }))
    }

    pub fn variations_at_neg_infinity(&self) -> usize {
        Self::variations(self.polys.iter().map(|p| {
            let s = sign_of(p.leading().expect("nonzero"));
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    pub fn variations_at_infinity(&self) -> usize {
        Self::variations(
            self.polys
                .iter()
                .map(|p| sign_of(p.leading().expect("nonzero"))),
        )
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_between(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_neg_infinity()
            .saturating_sub(self.variations_at_infinity())
    }

    /// Number of distinct real roots in the half-open interval `[a, b)`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        let p = &self.polys[0];
        let mut c = self.count_between(a, b);
        if p.sign_at(a) == Ordering::Equal {
            c += 1;
        }
        if p.sign_at(b) == Ordering::Equal {
            c -= 1;
        }
        c
    }
}
