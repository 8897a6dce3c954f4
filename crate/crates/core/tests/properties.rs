use algint::constructor::{construct_point, ConstructParams};
use algint::enumeration::{
    count_curve_strip, count_points_naive, count_points_rect_fast, strip_lattice_count,
    CensusOptions, Curve, CurveStrip, StripStrategy,
};
use algint::harness::fit_exponent;
use algint::rational::{rat, ratio, Rational};
use algint::region::{Rectangle, Region};
use algint::special::{flat_census, l_condition_census, lambda_ladder, SpecialSquareParams};
use proptest::prelude::*;

fn opts(shards: usize) -> CensusOptions {
    CensusOptions {
        shards,
        ..CensusOptions::default()
    }
}

/// Rectangle `[a, a + w) x [b, b + v)` on a grid of eighths.
fn rect_strategy() -> impl Strategy<Value = Rectangle> {
    (-24i64..24, 1i64..16, -24i64..24, 1i64..16).prop_filter_map("midpoint", |(a, w, b, v)| {
        let r = Rectangle::from_bounds(ratio(a, 8), ratio(a + w, 8), ratio(b, 8), ratio(b + v, 8))
            .ok()?;
        r.check_fast_midpoint().ok()?;
        Some(r)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fast_matches_naive(r in rect_strategy(), n in 2usize..=3, q in 1u64..=7) {
        let naive = count_points_naive(n, q, &Region::Rect(r.clone()), &opts(3)).unwrap();
        let fast = count_points_rect_fast(n, q, &r, &opts(5)).unwrap();
        prop_assert_eq!((naive.count, naive.diagonal, naive.polys), (fast.count, fast.diagonal, fast.polys));
    }

    #[test]
    fn shard_count_is_irrelevant(r in rect_strategy(), shards in 1usize..40) {
        let a = count_points_rect_fast(3, 6, &r, &opts(1)).unwrap();
        let b = count_points_rect_fast(3, 6, &r, &opts(shards)).unwrap();
        prop_assert_eq!((a.count, a.polys), (b.count, b.polys));
    }

    #[test]
    fn half_open_tiles_add_up(a in -16i64..16, w in 2i64..12, b in -16i64..16, v in 1i64..12, cut in 1i64..12) {
        let cut = cut % w;
        prop_assume!(cut > 0);
        let q = 5;
        let whole = Rectangle::from_bounds(ratio(a, 4), ratio(a + w, 4), ratio(b, 4), ratio(b + v, 4)).unwrap();
        let left = Rectangle::from_bounds(ratio(a, 4), ratio(a + cut, 4), ratio(b, 4), ratio(b + v, 4)).unwrap();
        let right = Rectangle::from_bounds(ratio(a + cut, 4), ratio(a + w, 4), ratio(b, 4), ratio(b + v, 4)).unwrap();
        let count = |r: Rectangle| count_points_naive(3, q, &Region::Rect(r), &opts(4)).unwrap().count;
        let total = count(whole);
        prop_assert_eq!(total, count(left) + count(right));
    }

    #[test]
    fn strip_count_matches_brute_force_and_bound(
        d1 in -20i64..20, d2 in -20i64..20, k1 in 4i64..40, k2 in 4i64..40, o1 in -30i64..30, o2 in -30i64..30,
    ) {
        prop_assume!(d1 != d2);
        // Scaled by 12: |3 b1 D + 12 b0 + 4 O| <= 3 K.
        let mut brute = 0u64;
        for b1 in -800i64..=800 {
            for b0 in -4000i64..=4000 {
                if (3 * b1 * d1 + 12 * b0 + 4 * o1).abs() <= 3 * k1 && (3 * b1 * d2 + 12 * b0 + 4 * o2).abs() <= 3 * k2 {
                    brute += 1;
                }
            }
        }
        let (d1, d2) = (ratio(d1, 4), ratio(d2, 4));
        let (k1, k2) = (ratio(k1, 4), ratio(k2, 4));
        let (o1, o2) = (ratio(o1, 3), ratio(o2, 3));
        let s = strip_lattice_count((&d1, &d2), (&k1, &k2), (&o1, &o2)).unwrap();
        prop_assert_eq!(s.count, brute);
        let eps = if d1 > d2 { &d1 - &d2 } else { &d2 - &d1 };
        let one = rat(1);
        let side = if eps > one { eps } else { one };
        if k1 >= side && k2 >= side {
            prop_assert!(Rational::from_integer(s.count.into()) <= s.bound);
        }
    }

    #[test]
    fn ladder_is_nonincreasing(num in 51i64..99) {
        let l = lambda_ladder(&ratio(num, 100)).unwrap();
        prop_assert_eq!(l.lambda(1), rat(1));
        prop_assert_eq!(l.lambda(l.l_max + 3), rat(0));
        for k in 1..=l.l_max + 3 {
            prop_assert!(l.lambda(k + 1) <= l.lambda(k));
        }
    }

    #[test]
    fn power_laws_are_recovered(e in 0.5f64..4.0, c in 100.0f64..5000.0) {
        let pts: Vec<(u64, u64)> = [100u64, 400, 1600, 6400]
            .iter()
            .map(|&q| (q, (c * (q as f64).powf(e)).round() as u64))
            .collect();
        let f = fit_exponent(&pts).unwrap();
        prop_assert!((f.slope - e).abs() < 1e-3);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn shrinking_a_rectangle_never_adds_points(r in rect_strategy(), s in 1i64..8) {
        let inner = Rectangle::new(r.d1.clone(), r.d2.clone(), &r.w1 * ratio(s, 8), &r.w2 * ratio(s, 8)).unwrap();
        let outer = count_points_naive(3, 5, &Region::Rect(r), &opts(4)).unwrap();
        let inner = count_points_naive(3, 5, &Region::Rect(inner), &opts(4)).unwrap();
        prop_assert!(inner.count <= outer.count);
    }

    #[test]
    fn banded_census_matches_flat(d1 in -12i64..12, d2 in -12i64..12, wide in any::<bool>(), q in 4u64..=12) {
        prop_assume!(d1 != d2);
        let gamma = if wide { ratio(3, 5) } else { ratio(3, 4) };
        let (d1, d2) = (ratio(d1, 4), ratio(d2, 4));
        let rect = Rectangle::parametric(d1.clone(), d2.clone(), q, if wide { 0.6 } else { 0.75 }, if wide { 0.6 } else { 0.75 }, 1.0).unwrap();
        let params = SpecialSquareParams::new(gamma, q, algint::rational::to_f64(&d1), algint::rational::to_f64(&d2))
            .unwrap()
            .with_delta(0.3)
            .unwrap();
        let flat = flat_census(&rect, 0.5, 0.5, &params).unwrap();
        for l in 1..=params.levels() {
            let c = l_condition_census(&rect, l, 0.5, 0.5, &params).unwrap();
            prop_assert_eq!(c.count, flat[l - 1]);
            prop_assert!(c.exact_count <= c.count);
        }
    }

    #[test]
    fn constructions_verify(a in 0i64..1000, b in 0i64..1000) {
        let x1 = ratio(1000 + a, 1000);
        let x2 = ratio(2000 + b, 1000);
        prop_assume!(&x2 - &x1 >= ratio(1, 2));
        if let Ok(r) = construct_point(&x1, &x2, &ConstructParams::new(3, 1000)) {
            prop_assert!(r.passed());
            prop_assert!(r.poly.is_irreducible().unwrap());
            prop_assert!(r.poly.eisenstein_check(r.prime).unwrap());
        }
    }
}

#[test]
fn strip_strategies_agree() {
    let s = CurveStrip::new(Curve::cubic(), ratio(-3, 4), ratio(1, 2), 0.4, 1.0).unwrap();
    for q in [6u64, 9] {
        let a = count_curve_strip(3, q, &s, StripStrategy::Naive, &opts(4)).unwrap();
        let b = count_curve_strip(3, q, &s, StripStrategy::Tiled, &opts(4)).unwrap();
        assert_eq!(
            (a.count, a.diagonal, a.polys),
            (b.count, b.diagonal, b.polys)
        );
        assert!(a.count > 0);
    }
}

#[test]
fn square_strip_distinct_counts_increase() {
    let s = CurveStrip::new(Curve::square(), ratio(11, 10), ratio(19, 10), 0.5, 1.0).unwrap();
    let distinct: Vec<u64> = [40u64, 80, 160]
        .iter()
        .map(|&q| {
            let r = count_curve_strip(3, q, &s, StripStrategy::Tiled, &opts(8)).unwrap();
            r.count - r.diagonal
        })
        .collect();
    assert!(
        distinct[0] > 0 && distinct.windows(2).all(|w| w[0] < w[1]),
        "{distinct:?}"
    );
}
