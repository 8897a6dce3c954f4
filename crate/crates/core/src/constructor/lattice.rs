//! Floating-point lattice reduction and short-vector enumeration. The
//! integer coordinates are tracked exactly; every use of a vector found here
//! is re-verified in exact arithmetic by the caller.

use crate::error::{Error, Result};

/// A lattice vector: integer coordinates and its image under the embedding.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeVector {
    pub coords: Vec<i64>,
    pub image: Vec<f64>,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gram_schmidt(basis: &[LatticeVector]) -> (Vec<Vec<f64>>, Vec<Vec<f64>>, Vec<f64>) {
    let n = basis.len();
    let mut star: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut mu = vec![vec![0.0; n]; n];
    let mut norms = vec![0.0; n];
    for i in 0..n {
        let mut v = basis[i].image.clone();
        for j in 0..i {
            mu[i][j] = dot(&basis[i].image, &star[j]) / norms[j];
            for (x, s) in v.iter_mut().zip(&star[j]) {
                *x -= mu[i][j] * s;
            }
        }
        norms[i] = dot(&v, &v);
        star.push(v);
    }
    (star, mu, norms)
}

fn sub_multiple(a: &LatticeVector, b: &LatticeVector, k: i64) -> Result<LatticeVector> {
    let coords = a
        .coords
        .iter()
        .zip(&b.coords)
        .map(|(x, y)| y.checked_mul(k).and_then(|t| x.checked_sub(t)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Internal("lattice coordinate overflow".into()))?;
    let image = a
        .image
        .iter()
        .zip(&b.image)
        .map(|(x, y)| x - k as f64 * y)
        .collect();
    Ok(LatticeVector { coords, image })
}

/// LLL reduction with parameter 3/4 of the columns of `embedding` (the images
/// of the unit vectors).
pub fn lll(embedding: &[Vec<f64>]) -> Result<Vec<LatticeVector>> {
    let n = embedding.len();
    let mut b: Vec<LatticeVector> = embedding
        .iter()
        .enumerate()
        .map(|(j, img)| {
            let mut coords = vec![0; n];
            coords[j] = 1;
            LatticeVector {
                coords,
                image: img.clone(),
            }
        })
        .collect();
    let mut k = 1;
    let mut steps = 0;
    while k < n {
        steps += 1;
        if steps > 100_000 {
            return Err(Error::Internal(
                "lattice reduction did not terminate".into(),
            ));
        }
        for j in (0..k).rev() {
            let (_, mu, _) = gram_schmidt(&b);
            let r = mu[k][j].round();
            if r != 0.0 {
                if !r.is_finite() || r.abs() > 1e15 {
                    return Err(Error::Internal("lattice reduction lost precision".into()));
                }
                b[k] = sub_multiple(&b[k], &b[j], r as i64)?;
            }
        }
        let (_, mu, norms) = gram_schmidt(&b);
        if norms[k] >= (0.75 - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1] {
            k += 1;
        } else {
            b.swap(k, k - 1);
            k = (k - 1).max(1);
        }
    }
    Ok(b)
}

/// Calls `visit` on every nonzero lattice vector of Euclidean norm at most
/// `radius` (up to a node budget). `visit` returns `true` to stop early.
/// Returns `false` if the node budget ran out.
pub fn enumerate_short(
    basis: &[LatticeVector],
    radius: f64,
    node_budget: u64,
    mut visit: impl FnMut(&LatticeVector) -> bool,
) -> Result<bool> {
    let n = basis.len();
    let (_, mu, norms) = gram_schmidt(basis);
    if norms.iter().any(|&x| !(x > 0.0)) {
        return Err(Error::Internal("degenerate lattice".into()));
    }
    let r2 = radius * radius * (1.0 + 1e-9) + 1e-300;
    let mut c = vec![0i64; n];
    let mut nodes = 0u64;

    struct Ctx<'a> {
        mu: &'a [Vec<f64>],
        norms: &'a [f64],
        basis: &'a [LatticeVector],
        r2: f64,
        budget: u64,
    }

    fn rec(
        ctx: &Ctx,
        i: usize,
        partial: f64,
        c: &mut [i64],
        nodes: &mut u64,
        visit: &mut dyn FnMut(&LatticeVector) -> bool,
    ) -> Result<Option<bool>> {
        let n = c.len();
        let center: f64 = -(i + 1..n).map(|j| ctx.mu[j][i] * c[j] as f64).sum::<f64>();
        let room = (ctx.r2 - partial) / ctx.norms[i];
        if room < 0.0 {
            return Ok(None);
        }
        let span = room.sqrt();
        let lo = (center - span).ceil() as i64;
        let hi = (center + span).floor() as i64;
        for v in lo..=hi {
            *nodes += 1;
            if *nodes > ctx.budget {
                return Ok(Some(false));
            }
            c[i] = v;
            let d = v as f64 - center;
            let p = partial + ctx.norms[i] * d * d;
            if i == 0 {
                if c.iter().all(|&x| x == 0) {
                    continue;
                }
                let mut w = LatticeVector {
                    coords: vec![0; ctx.basis[0].coords.len()],
                    image: vec![0.0; ctx.basis[0].image.len()],
                };
                for (k, &ck) in c.iter().enumerate() {
                    if ck != 0 {
                        w = sub_multiple(&w, &ctx.basis[k], -ck)?;
                    }
                }
                if visit(&w) {
                    return Ok(Some(true));
                }
            } else if let Some(stop) = rec(ctx, i - 1, p, c, nodes, visit)? {
                return Ok(Some(stop));
            }
        }
        c[i] = 0;
        Ok(None)
    }

    let ctx = Ctx {
        mu: &mu,
        norms: &norms,
        basis,
        r2,
        budget: node_budget,
    };
    match rec(&ctx, n - 1, 0.0, &mut c, &mut nodes, &mut visit)? {
        Some(false) => Ok(false),
        _ => Ok(true),
    }
}
