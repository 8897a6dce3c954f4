//! Construction of monic irreducible polynomials with two real roots close
//! to a prescribed target point, certified by Eisenstein's criterion.

pub mod lattice;
pub mod linalg;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;
use crate::primes::is_prime;
use crate::rational::{floor, from_f64, pow, rat, to_f64, Rational};
use crate::realroots::{isolate_real_roots, RootInterval};
use crate::special::h_constant;
use lattice::{enumerate_short, lll, LatticeVector};
use linalg::{determinant, mat_vec, rank, solve, Matrix};

/// The symmetric convex body in the coefficient space `(a_0, ..., a_(n-1))`
/// of polynomials of degree below `n`:
/// `|P(x_i)| <= h Q^(-u_i)`, `|P'(x_i)| <= Q`, `|a_k| <= Q` for `2 <= k < n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexBodySpec {
    pub x1: Rational,
    pub x2: Rational,
    pub n: usize,
    pub q: u64,
    pub u1: Rational,
    pub u2: Rational,
    pub h: f64,
}

impl ConvexBodySpec {
    /// Weights `u1 = u2 = (n - 2) / 2` and `h` the constant of degree
    /// `n - 1` at the target.
    pub fn new(x1: Rational, x2: Rational, n: usize, q: u64) -> Result<Self> {
        let h = h_constant(n as u32 - 1, to_f64(&x1), to_f64(&x2));
        let u = Rational::new(BigInt::from(n as i64 - 2), BigInt::from(2));
        Self::with_weights(x1, x2, n, q, u.clone(), u, h)
    }

    pub fn with_weights(
        x1: Rational,
        x2: Rational,
        n: usize,
        q: u64,
        u1: Rational,
        u2: Rational,
        h: f64,
    ) -> Result<Self> {
        if x1 == x2 {
            return Err(Error::DegenerateTarget);
        }
        if !(3..=6).contains(&n) {
            return Err(Error::InvalidInput(format!(
                "construction needs 3 <= n <= 6, got {n}"
            )));
        }
        if q == 0 || !(h > 0.0 && h.is_finite()) {
            return Err(Error::InvalidInput("Q and h must be positive".into()));
        }
        if u1.is_negative() || u2.is_negative() || &u1 + &u2 != rat(n as i64 - 2) {
            return Err(Error::InvalidWeights(u1.to_string(), u2.to_string()));
        }
        Ok(ConvexBodySpec {
            x1,
            x2,
            n,
            q,
            u1,
            u2,
            h,
        })
    }

    fn xs(&self) -> [&Rational; 2] {
        [&self.x1, &self.x2]
    }

    /// `h Q^(-u_i)` as the exact value of its double-precision evaluation.
    pub fn value_scale(&self, i: usize) -> Rational {
        let u = if i == 0 { &self.u1 } else { &self.u2 };
        from_f64(self.h * (self.q as f64).powf(-to_f64(u))).expect("finite scale")
    }

    fn constraint_count(&self) -> usize {
        self.n + 2
    }

    /// Smallest `t` with `a` in the `t`-dilated body.
    pub fn norm(&self, a: &[i64]) -> Rational {
        let p = IntPolynomial::from_i64(a);
        let dp = p.derivative().unwrap_or_else(|_| IntPolynomial::zero());
        let q = rat(self.q as i64);
        let mut t = rat(0);
        for (i, x) in self.xs().into_iter().enumerate() {
            let v = if p.is_zero() {
                rat(0)
            } else {
                p.evaluate(x).expect("nonzero")
            };
            let d = if dp.is_zero() {
                rat(0)
            } else {
                dp.evaluate(x).expect("nonzero")
            };
            t = t.max(v.abs() / self.value_scale(i)).max(d.abs() / &q);
        }
        for &c in a.iter().take(self.n).skip(2) {
            t = t.max(rat(c.abs()) / &q);
        }
        t
    }

    /// Image of the unit coefficient vectors under the scaled constraint
    /// map.
    fn embedding(&self) -> Vec<Vec<f64>> {
        let (x1, x2) = (to_f64(&self.x1), to_f64(&self.x2));
        let (s1, s2) = (to_f64(&self.value_scale(0)), to_f64(&self.value_scale(1)));
        let q = self.q as f64;
        (0..self.n)
            .map(|k| {
                let mut col = vec![
                    x1.powi(k as i32) / s1,
                    x2.powi(k as i32) / s2,
                    if k == 0 {
                        0.0
                    } else {
                        k as f64 * x1.powi(k as i32 - 1) / q
                    },
                    if k == 0 {
                        0.0
                    } else {
                        k as f64 * x2.powi(k as i32 - 1) / q
                    },
                ];
                for j in 2..self.n {
                    col.push(if j == k { 1.0 / q } else { 0.0 });
                }
                col
            })
            .collect()
    }
}

/// `n` linearly independent polynomials of degree below `n` inside the
/// `tau`-dilated body.
#[derive(Clone, Debug, PartialEq)]
pub struct SmallBasis {
    pub polys: Vec<IntPolynomial>,
    /// Coefficient rows `(a_(j,0), ..., a_(j,n-1))`.
    pub coeffs: Vec<Vec<i64>>,
    /// Determinant of the coefficient matrix.
    pub det: BigInt,
    pub tau: Rational,
    /// Body norm of each polynomial.
    pub norms: Vec<Rational>,
}

impl SmallBasis {
    pub fn from_coeffs(
        body: &ConvexBodySpec,
        coeffs: Vec<Vec<i64>>,
        tau: Rational,
    ) -> Result<Self> {
        let n = body.n;
        if coeffs.len() != n || coeffs.iter().any(|c| c.len() != n) {
            return Err(Error::InvalidInput(format!(
                "basis must be {n} vectors of length {n}"
            )));
        }
        let m: Matrix = coeffs
            .iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect();
        let det = determinant(&m).to_integer();
        if det.is_zero() {
            return Err(Error::InvalidInput(
                "basis polynomials are linearly dependent".into(),
            ));
        }
        let norms = coeffs.iter().map(|c| body.norm(c)).collect();
        let polys = coeffs.iter().map(|c| IntPolynomial::from_i64(c)).collect();
        Ok(SmallBasis {
            polys,
            coeffs,
            det,
            tau,
            norms,
        })
    }
}

const EXCEPTIONAL_NODE_BUDGET: u64 = 5_000_000;
const BASIS_NODE_BUDGET: u64 = 2_000_000;

/// Nonzero lattice vector with body norm at most `t`, if any.
pub fn find_vector_within(
    body: &ConvexBodySpec,
    reduced: &[LatticeVector],
    t: &Rational,
) -> Result<Option<(Vec<i64>, Rational)>> {
    let radius = (body.constraint_count() as f64).sqrt() * to_f64(t);
    let mut found = None;
    let complete = enumerate_short(reduced, radius, EXCEPTIONAL_NODE_BUDGET, |v| {
        let nv = body.norm(&v.coords);
        if &nv <= t {
            found = Some((v.coords.clone(), nv));
            return true;
        }
        false
    })?;
    if found.is_none() && !complete {
        return Err(Error::TargetInExceptionalSet(format!(
            "could not rule out a vector of norm <= {} within the search budget",
            to_f64(t)
        )));
    }
    Ok(found)
}

/// `delta^(-(n-1))`.
pub fn slack(n: usize, delta: &Rational) -> Rational {
    pow(&(rat(1) / delta), n - 1)
}

fn check_delta(delta: &Rational) -> Result<()> {
    if !(delta.is_positive() && delta < &rat(1)) {
        return Err(Error::InvalidInput(format!(
            "delta must lie in (0, 1), got {}",
            to_f64(delta)
        )));
    }
    Ok(())
}

/// Reduced basis; rejects targets whose body contains a nonzero vector of
/// norm at most `delta`; returns the reduced vectors if they all fit the
/// `delta^(-(n-1))` dilation, otherwise the successive independent
/// shortest vectors from enumeration.
pub fn find_small_basis(body: &ConvexBodySpec, delta: &Rational) -> Result<SmallBasis> {
    check_delta(delta)?;
    let reduced = lll(&body.embedding())?;
    if let Some((v, nv)) = find_vector_within(body, &reduced, delta)? {
        return Err(Error::TargetInExceptionalSet(format!(
            "{:?} has norm {}",
            v,
            to_f64(&nv)
        )));
    }
    let tau = slack(body.n, delta);
    let coeffs: Vec<Vec<i64>> = reduced.iter().map(|v| v.coords.clone()).collect();
    if coeffs.iter().all(|c| body.norm(c) <= tau) {
        return SmallBasis::from_coeffs(body, coeffs, tau);
    }
    exhaustive_basis(body, &reduced, tau)
}

/// Greedy independent selection, by increasing body norm, among all lattice
/// vectors in the `tau`-dilated body.
pub fn exhaustive_basis(
    body: &ConvexBodySpec,
    reduced: &[LatticeVector],
    tau: Rational,
) -> Result<SmallBasis> {
    let radius = (body.constraint_count() as f64).sqrt() * to_f64(&tau);
    let mut cands: Vec<(Rational, Vec<i64>)> = Vec::new();
    enumerate_short(reduced, radius, BASIS_NODE_BUDGET, |v| {
        // Keep one of each +-v pair.
        if v.coords.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0) {
            let nv = body.norm(&v.coords);
            if nv <= tau {
                cands.push((nv, v.coords.clone()));
            }
        }
        false
    })?;
    cands.sort();
    let mut chosen: Vec<Vec<i64>> = Vec::new();
    for (_, c) in cands {
        let mut rows: Matrix = chosen
            .iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect();
        rows.push(c.iter().map(|&v| rat(v)).collect());
        if rank(&rows) == rows.len() {
            chosen.push(c);
            if chosen.len() == body.n {
                return SmallBasis::from_coeffs(body, chosen, tau);
            }
        }
    }
    Err(Error::SlackExhausted(format!(
        "only {} independent vectors within slack {}",
        chosen.len(),
        to_f64(&tau)
    )))
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Smallest prime `p` with `n! < p < 2 n!` not dividing `det`.
pub fn select_prime(n: usize, det: &BigInt) -> Result<u64> {
    if det.is_zero() {
        return Err(Error::InvalidInput("basis determinant is zero".into()));
    }
    let f = factorial(n);
    (f + 1..2 * f)
        .find(|&p| is_prime(p) && !(det % BigInt::from(p)).is_zero())
        .ok_or_else(|| {
            Error::Internal(format!(
                "no prime in ({f}, {}) avoids the determinant",
                2 * f
            ))
        })
}

/// The linear system for the real multipliers `theta_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaSystem {
    pub matrix: Matrix,
    pub rhs: Vec<Rational>,
    pub det: Rational,
    pub theta: Vec<Rational>,
}

/// Rows in the order: value at `x1`, derivative at `x1`, value at `x2`,
/// derivative at `x2` (omitted for `n = 3`), then one row per coefficient
/// `4 <= k < n` forcing it to vanish.
pub fn assemble_system(
    basis: &SmallBasis,
    body: &ConvexBodySpec,
    p: u64,
) -> (Matrix, Vec<Rational>) {
    let n = body.n;
    let pr = rat(p as i64);
    let q = rat(body.q as i64);
    let tau = &basis.tau;
    let mut m: Matrix = Vec::with_capacity(n);
    let mut rhs = Vec::with_capacity(n);
    let derivs: Vec<IntPolynomial> = basis
        .polys
        .iter()
        .map(|pj| pj.derivative().unwrap_or_else(|_| IntPolynomial::zero()))
        .collect();
    let eval = |f: &IntPolynomial, x: &Rational| {
        if f.is_zero() {
            rat(0)
        } else {
            f.evaluate(x).expect("nonzero")
        }
    };
    for (i, x) in body.xs().into_iter().enumerate() {
        m.push(basis.polys.iter().map(|pj| &pr * eval(pj, x)).collect());
        rhs.push(&pr * rat(n as i64 + 1) * tau * body.value_scale(i) - pow(x, n));
        if i == 0 || n > 3 {
            let dvals: Vec<Rational> = derivs.iter().map(|d| eval(d, x)).collect();
            let abs_sum = dvals.iter().fold(rat(0), |acc, v| acc + v.abs());
            m.push(dvals.iter().map(|v| &pr * v).collect());
            rhs.push(&pr * &q + &pr * abs_sum - rat(n as i64) * pow(x, n - 1));
        }
    }
    for k in 4..n {
        m.push(basis.coeffs.iter().map(|c| rat(c[k])).collect());
        rhs.push(rat(0));
    }
    (m, rhs)
}

/// `p^4 (x2 - x1)^4 det`.
pub fn determinant_identity_rhs(basis: &SmallBasis, body: &ConvexBodySpec, p: u64) -> Rational {
    pow(&rat(p as i64), 4)
        * pow(&(&body.x2 - &body.x1), 4)
        * Rational::from_integer(basis.det.clone())
}

pub fn solve_theta(basis: &SmallBasis, body: &ConvexBodySpec, p: u64) -> Result<ThetaSystem> {
    if body.x1 == body.x2 {
        return Err(Error::DegenerateTarget);
    }
    let (matrix, rhs) = assemble_system(basis, body, p);
    let det = determinant(&matrix);
    if body.n >= 4 {
        let want = determinant_identity_rhs(basis, body, p);
        if det != want {
            return Err(Error::Internal(format!(
                "system determinant {} differs from p^4 (x2-x1)^4 det = {}",
                to_f64(&det),
                to_f64(&want)
            )));
        }
    } else if det.is_zero() {
        return Err(Error::Internal("reduced system is singular".into()));
    }
    let theta = solve(&matrix, &rhs).ok_or_else(|| Error::Internal("singular system".into()))?;
    debug_assert_eq!(mat_vec(&matrix, &theta), rhs);
    Ok(ThetaSystem {
        matrix,
        rhs,
        det,
        theta,
    })
}

/// `s_j = floor(theta_j)`, then the first `s_j` with `p` not dividing
/// `a_(j,0)` is incremented if `p` divides `sum s_j a_(j,0)`.
pub fn round_to_eisenstein(theta: &[Rational], basis: &SmallBasis, p: u64) -> Result<Vec<BigInt>> {
    let mut s: Vec<BigInt> = theta.iter().map(floor).collect();
    let pb = BigInt::from(p);
    let a0 = |s: &[BigInt]| {
        s.iter()
            .zip(&basis.coeffs)
            .fold(BigInt::zero(), |acc, (sj, c)| acc + sj * c[0])
    };
    if a0(&s).is_multiple_of(&pb) {
        let j = basis
            .coeffs
            .iter()
            .position(|c| !BigInt::from(c[0]).is_multiple_of(&pb))
            .ok_or_else(|| Error::Internal(format!("{p} divides every constant coefficient")))?;
        s[j] += 1;
    }
    Ok(s)
}

/// `t^n + p sum_j s_j P_j`.
pub fn assemble_polynomial(n: usize, p: u64, s: &[BigInt], basis: &SmallBasis) -> IntPolynomial {
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    for (sj, row) in s.iter().zip(&basis.coeffs) {
        for (k, &a) in row.iter().enumerate() {
            c[k] += BigInt::from(p) * sj * a;
        }
    }
    IntPolynomial::new(c)
}

/// One verified bound: `lower <= value <= upper` (or `value < upper` when
/// `strict`).
#[derive(Clone, Debug, PartialEq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub value: f64,
    pub lower: Option<f64>,
    pub upper: f64,
    pub passed: bool,
}

fn sandwich(name: &'static str, v: &Rational, lo: &Rational, hi: &Rational) -> BoundCheck {
    BoundCheck {
        name,
        value: to_f64(v),
        lower: Some(to_f64(lo)),
        upper: to_f64(hi),
        passed: lo <= v && v <= hi,
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub poly: IntPolynomial,
    pub prime: u64,
    pub s: Vec<BigInt>,
    pub theta: Vec<Rational>,
    pub basis: SmallBasis,
    /// The `delta` that succeeded and the number of attempts used.
    pub delta: Rational,
    pub attempts: usize,
    /// Real roots nearest to `x1` and `x2`.
    pub roots: [RootInterval; 2],
    pub checks: Vec<BoundCheck>,
}

impl ConstructionResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failing(&self) -> Option<&'static str> {
        self.checks.iter().find(|c| !c.passed).map(|c| c.name)
    }
}

/// Ceiling for the height of the output: the four lowest coefficients are
/// bounded through the Hermite interpolation system at the target, the rest
/// by the zeroing equations.
pub fn height_ceiling(body: &ConvexBodySpec, p: u64, tau: &Rational) -> Rational {
    let n = body.n;
    let pf = p as f64;
    let tf = to_f64(tau);
    let q = body.q as f64;
    let nf = n as f64;
    let upper_mid = pf * nf * tf * q;
    let coeff_bound = |k: usize| if k == n { 1.0 } else { upper_mid };
    let mut bounds = Vec::with_capacity(4);
    let mut rows: Matrix = Vec::with_capacity(4);
    for (i, x) in body.xs().into_iter().enumerate() {
        let xf = to_f64(x).abs();
        let value = pf * (2.0 * nf + 1.0) * tf * to_f64(&body.value_scale(i));
        let deriv = (pf + 2.0 * pf * nf * tf) * q;
        let tail_v: f64 = (4..=n).map(|k| xf.powi(k as i32) * coeff_bound(k)).sum();
        let tail_d: f64 = (4..=n)
            .map(|k| k as f64 * xf.powi(k as i32 - 1) * coeff_bound(k))
            .sum();
        bounds.push(value + tail_v);
        bounds.push(deriv + tail_d);
        rows.push((0..4).map(|k| pow(x, k)).collect());
        rows.push(
            (0..4)
                .map(|k| {
                    if k == 0 {
                        rat(0)
                    } else {
                        rat(k as i64) * pow(x, k - 1)
                    }
                })
                .collect(),
        );
    }
    let mut c11q: f64 = 0.0;
    // Row k of the inverse: solve M^T y = e_k.
    let mt: Matrix = (0..4)
        .map(|r| (0..4).map(|c| rows[c][r].clone()).collect())
        .collect();
    for k in 0..4 {
        let mut e = vec![rat(0); 4];
        e[k] = rat(1);
        let y = solve(&mt, &e).expect("Hermite system is regular for x1 != x2");
        let s: f64 = y
            .iter()
            .zip(&bounds)
            .map(|(v, b)| to_f64(v).abs() * b)
            .sum();
        c11q = c11q.max(s);
    }
    from_f64(c11q.max(upper_mid) * (1.0 + 1e-9)).expect("finite")
}

/// Real root of `P` in `(x - r, x + r)` closest to `x`, if any.
fn nearest_real_root(roots: &[RootInterval], x: &Rational, r: &Rational) -> Option<RootInterval> {
    let lo = x - r;
    let hi = x + r;
    let eps = Rational::new(BigInt::one(), BigInt::one() << 80u32);
    roots
        .iter()
        .filter(|a| {
            a.cmp_rational(&lo) == Ordering::Greater && a.cmp_rational(&hi) == Ordering::Less
        })
        .map(|a| a.refine(&eps))
        .min_by(|a, b| {
            let da = (a.lo() - x).abs();
            let db = (b.lo() - x).abs();
            da.cmp(&db)
        })
}

fn verify(
    body: &ConvexBodySpec,
    basis: &SmallBasis,
    p: u64,
    poly: &IntPolynomial,
) -> Result<(Vec<BoundCheck>, [RootInterval; 2])> {
    let n = body.n;
    let pr = rat(p as i64);
    let q = rat(body.q as i64);
    let tau = &basis.tau;
    let nr = rat(n as i64);
    let dp = poly.derivative()?;
    let mut checks = vec![BoundCheck {
        name: "eisenstein",
        value: p as f64,
        lower: None,
        upper: p as f64,
        passed: poly.eisenstein_check(p)?,
    }];
    let names = [
        ("value-x1", "derivative-x1", "root-proximity-x1"),
        ("value-x2", "derivative-x2", "root-proximity-x2"),
    ];
    let roots = isolate_real_roots(poly)?;
    let mut nearest: Vec<RootInterval> = Vec::with_capacity(2);
    let mut proximity = Vec::with_capacity(2);
    for (i, x) in body.xs().into_iter().enumerate() {
        let s = body.value_scale(i);
        let v = poly.evaluate(x)?.abs();
        let lo = &pr * tau * &s;
        let hi = &pr * (rat(2) * &nr + rat(1)) * tau * &s;
        checks.push(sandwich(names[i].0, &v, &lo, &hi));
        let d = dp.evaluate(x)?.abs();
        let lo = &pr * &q;
        let hi = (&pr + rat(2) * &pr * &nr * tau) * &q;
        checks.push(sandwich(names[i].1, &d, &lo, &hi));

        let u = if i == 0 { &body.u1 } else { &body.u2 };
        let c12 = &nr * (rat(2) * &nr + rat(1)) * tau;
        let r = c12 * from_f64(body.h * (body.q as f64).powf(-to_f64(u) - 1.0))?;
        let found = nearest_real_root(&roots, x, &r);
        let (value, passed) = match &found {
            Some(a) => (to_f64(&(a.lo() - x).abs()), true),
            None => (f64::INFINITY, false),
        };
        proximity.push(BoundCheck {
            name: names[i].2,
            value,
            lower: None,
            upper: to_f64(&r),
            passed,
        });
        nearest.push(
            found.unwrap_or_else(|| roots.first().cloned().unwrap_or_else(|| dummy_root(poly))),
        );
    }
    let ceiling = height_ceiling(body, p, tau);
    let h = Rational::from_integer(poly.height()?);
    checks.push(BoundCheck {
        name: "height",
        value: to_f64(&h),
        lower: None,
        upper: to_f64(&ceiling),
        passed: h < ceiling,
    });
    checks.extend(proximity);
    let b = nearest.pop().expect("two");
    let a = nearest.pop().expect("two");
    Ok((checks, [a, b]))
}

/// Placeholder interval reported when a polynomial has no real root at all;
/// the proximity checks have already failed in that case.
fn dummy_root(poly: &IntPolynomial) -> RootInterval {
    let t = IntPolynomial::from_i64(&[0, 1]);
    let _ = poly;
    isolate_real_roots(&t).expect("t has a root").remove(0)
}

/// Parameters of [`construct_point`].
#[derive(Clone, Debug, PartialEq)]
pub struct ConstructParams {
    pub n: usize,
    pub q: u64,
    pub delta: Rational,
    /// Number of additional attempts, each halving `delta`.
    pub retries: usize,
    /// Overrides the default constant `h`.
    pub h: Option<f64>,
}

impl ConstructParams {
    pub fn new(n: usize, q: u64) -> Self {
        ConstructParams {
            n,
            q,
            delta: Rational::new(1.into(), 20.into()),
            retries: 4,
            h: None,
        }
    }
}

/// Runs one attempt at a fixed `delta`.
pub fn construct_once(body: &ConvexBodySpec, delta: &Rational) -> Result<ConstructionResult> {
    let basis = find_small_basis(body, delta)?;
    let p = select_prime(body.n, &basis.det)?;
    let sys = solve_theta(&basis, body, p)?;
    let s = round_to_eisenstein(&sys.theta, &basis, p)?;
    let poly = assemble_polynomial(body.n, p, &s, &basis);
    let (checks, roots) = verify(body, &basis, p, &poly)?;
    Ok(ConstructionResult {
        poly,
        prime: p,
        s,
        theta: sys.theta,
        basis,
        delta: delta.clone(),
        attempts: 1,
        roots,
        checks,
    })
}

/// A monic irreducible polynomial of degree `n` with real roots near `x1`
/// and `x2`, retrying with halved `delta` until every bound verifies.
pub fn construct_point(
    x1: &Rational,
    x2: &Rational,
    params: &ConstructParams,
) -> Result<ConstructionResult> {
    if x1 == x2 {
        return Err(Error::DegenerateTarget);
    }
    check_delta(&params.delta)?;
    let mut body = ConvexBodySpec::new(x1.clone(), x2.clone(), params.n, params.q)?;
    if let Some(h) = params.h {
        body = ConvexBodySpec::with_weights(
            x1.clone(),
            x2.clone(),
            params.n,
            params.q,
            body.u1,
            body.u2,
            h,
        )?;
    }
    let mut delta = params.delta.clone();
    let mut all_exceptional = true;
    let mut last_failure = String::new();
    for attempt in 1..=params.retries + 1 {
        match construct_once(&body, &delta) {
            Ok(mut r) => {
                r.attempts = attempt;
                if r.passed() {
                    return Ok(r);
                }
                all_exceptional = false;
                last_failure = r.failing().unwrap_or("unknown").to_string();
            }
            Err(Error::TargetInExceptionalSet(_)) => {}
            Err(Error::SlackExhausted(msg)) => {
                all_exceptional = false;
                last_failure = format!("slack-exhausted: {msg}");
            }
            Err(e) => return Err(e),
        }
        delta /= rat(2);
    }
    if all_exceptional {
        Err(Error::UnconstructibleTarget(params.retries + 1))
    } else {
        Err(Error::ConstructionFailed(last_failure))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn primes() {
        assert_eq!(select_prime(3, &BigInt::from(1)).unwrap(), 7);
        assert_eq!(select_prime(2, &BigInt::from(1)).unwrap(), 3);
        assert_eq!(select_prime(4, &BigInt::from(-1)).unwrap(), 29);
        assert_eq!(select_prime(3, &BigInt::from(7)).unwrap(), 11);
    }

    #[test]
    fn degenerate_target() {
        assert_eq!(
            ConvexBodySpec::new(rat(1), rat(1), 3, 100),
            Err(Error::DegenerateTarget)
        );
        let p = ConstructParams::new(3, 1000);
        assert!(matches!(
            construct_point(&rat(2), &rat(2), &p),
            Err(Error::DegenerateTarget)
        ));
    }

    #[test]
    fn rounding_contract() {
        let body = ConvexBodySpec::new(ratio(11, 10), ratio(23, 10), 3, 1000).unwrap();
        let basis = SmallBasis::from_coeffs(
            &body,
            vec![vec![7, 0, 0], vec![1, 1, 0], vec![0, 0, 1]],
            rat(400),
        )
        .unwrap();
        let theta = vec![rat(2), ratio(5, 2), ratio(-1, 3)];
        let s = round_to_eisenstein(&theta, &basis, 7).unwrap();
        // floor gives (2, 2, -1) with a0 = 16, not divisible by 7.
        assert_eq!(s, vec![BigInt::from(2), BigInt::from(2), BigInt::from(-1)]);
        let theta = vec![rat(0), ratio(7, 2), rat(0)];
        let s = round_to_eisenstein(&theta, &basis, 7).unwrap();
        // floor gives a0 = 3; fine. Force divisibility: theta_2 = 0.
        assert_eq!(s[1], BigInt::from(3));
        let s = round_to_eisenstein(&[rat(1), rat(0), rat(0)], &basis, 7).unwrap();
        // a0 = 7 is divisible; the first index with 7 not dividing a_(j,0) is 1.
        assert_eq!(s, vec![BigInt::from(1), BigInt::from(1), BigInt::from(0)]);
    }

    #[test]
    fn cubic_example() {
        let p = ConstructParams::new(3, 1000);
        let r = construct_point(&ratio(11, 10), &ratio(23, 10), &p).unwrap();
        assert!(r.passed(), "{:?}", r.checks);
        assert!(r.prime == 7 || r.prime == 11);
        assert!(r.poly.is_monic() && r.poly.degree() == Some(3));
        assert!(r.poly.is_irreducible().unwrap());
    }

    #[test]
    fn determinant_identity_quartic() {
        let body = ConvexBodySpec::new(ratio(3, 2), ratio(5, 2), 4, 1000).unwrap();
        let basis = SmallBasis::from_coeffs(
            &body,
            vec![
                vec![1, 2, 0, 1],
                vec![0, 1, 3, 0],
                vec![2, 0, 1, 1],
                vec![1, 1, 1, -1],
            ],
            rat(8000),
        )
        .unwrap();
        let (m, _) = assemble_system(&basis, &body, 29);
        assert_eq!(determinant(&m), determinant_identity_rhs(&basis, &body, 29));
    }
}
