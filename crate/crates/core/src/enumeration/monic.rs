use crate::intpoly::IntPolynomial;

/// Number of monic polynomials of degree `n` with non-leading coefficients
/// in `[-q, q]`: `(2q + 1)^n`, saturating.
pub fn monic_count(n: usize, q: u64) -> u128 {
    (2 * q as u128 + 1).saturating_pow(n as u32)
}

/// Writes the lower coefficients `[a_0, ..., a_(len-1)]` of the `index`-th
/// vector in lexicographic order over `(a_(len-1), ..., a_0)`, each in `[-q, q]`.
pub(crate) fn decode_lower(mut index: u128, q: u64, out: &mut [i64]) {
    let base = 2 * q as u128 + 1;
    for c in out.iter_mut() {
        *c = (index % base) as i64 - q as i64;
        index /= base;
    }
}

/// Advances `lower` to the lexicographic successor; false on wrap-around.
pub(crate) fn step_lower(lower: &mut [i64], q: u64) -> bool {
    let q = q as i64;
    for c in lower.iter_mut() {
        if *c < q {
            *c += 1;
            return true;
        }
        *c = -q;
    }
    false
}

/// Iterator over every monic integer polynomial of degree exactly `n` with
/// all non-leading coefficients in `[-q, q]`, ordered lexicographically by
/// `(a_(n-1), ..., a_0)` ascending.
pub struct MonicEnumerator {
    lower: Vec<i64>,
    q: u64,
    done: bool,
}

impl Iterator for MonicEnumerator {
    type Item = IntPolynomial;

    fn next(&mut self) -> Option<IntPolynomial> {
        if self.done {
            return None;
        }
        let p = IntPolynomial::monic_from_lower(&self.lower);
        self.done = !step_lower(&mut self.lower, self.q);
        Some(p)
    }
}

pub fn enumerate_monic(n: usize, q: u64) -> MonicEnumerator {
    MonicEnumerator {
        lower: vec![-(q as i64); n],
        q,
        done: n == 0,
    }
}

/// Contiguous index blocks `[start, end)` covering `0..total`.
pub(crate) fn blocks(total: u128, shards: usize) -> Vec<(u128, u128)> {
    let shards = shards.max(1) as u128;
    let size = total.div_ceil(shards).max(1);
    let mut out = Vec::new();
    let mut start = 0;
    while start < total {
        let end = (start + size).min(total);
        out.push((start, end));
        start = end;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_monic(1, 1).count(), 3);
        assert_eq!(enumerate_monic(2, 1).count(), 9);
        assert_eq!(enumerate_monic(3, 10).count(), 9261);
        assert_eq!(monic_count(3, 10), 9261);
    }

    #[test]
    fn lexicographic_order() {
        let v: Vec<String> = enumerate_monic(1, 1).map(|p| p.to_string()).collect();
        assert_eq!(v, ["-1 1", "0 1", "1 1"]);
        let v: Vec<IntPolynomial> = enumerate_monic(2, 1).collect();
        assert_eq!(v[0].to_string(), "-1 -1 1");
        assert_eq!(v[1].to_string(), "0 -1 1");
        assert_eq!(v[3].to_string(), "-1 0 1");
        assert_eq!(v[8].to_string(), "1 1 1");
    }

    #[test]
    fn decode_matches_iteration() {
        let mut buf = [0i64; 3];
        for (i, p) in enumerate_monic(3, 2).enumerate() {
            decode_lower(i as u128, 2, &mut buf);
            assert_eq!(IntPolynomial::monic_from_lower(&buf), p);
        }
    }

    #[test]
    fn blocks_cover() {
        assert_eq!(blocks(10, 3), vec![(0, 4), (4, 8), (8, 10)]);
        assert_eq!(blocks(2, 8), vec![(0, 1), (1, 2)]);
        assert!(blocks(0, 4).is_empty());
    }
}
