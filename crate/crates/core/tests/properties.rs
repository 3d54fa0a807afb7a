use grunbaum::bodies::{dilate, translate, Body, CutSpec, Direction};
use grunbaum::{constants, json, measure, oracle, verify};
use proptest::prelude::*;

fn profile(n: usize, knots: usize, seed: u64) -> Body {
    Body::Profile(oracle::random_profile(n, knots, seed).unwrap())
}

fn polytope(n: usize, points: usize, seed: u64) -> Body {
    Body::Polytope(oracle::random_polytope(n, points, seed).unwrap())
}

/// α in `(-1, n)` from a unit draw.
fn alpha_in_range(n: usize, u: f64) -> f64 {
    -0.999 + (n as f64 + 0.998) * u
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn constants_are_ordered(n in 2usize..=8, u in 0.0f64..1.0) {
        let alpha = alpha_in_range(n, u);
        let b = constants::bounds(alpha, n, 1e-9).unwrap();
        prop_assert!(b.c1 >= 0.0 && b.c1 <= b.c2.value + 1e-12);
        prop_assert!(b.c2.value <= 1.0);
        prop_assert!((0.0..=1.0).contains(&b.d));
    }

    #[test]
    fn profile_ratios_are_dilation_invariant(
        n in 2usize..=5, knots in 2usize..=8, seed in any::<u64>(), u in 0.0f64..1.0,
        f in prop::sample::select(vec![0.5, 2.0, 10.0]),
    ) {
        let body = profile(n, knots, seed);
        let cut = CutSpec::new(Direction::axis(n, 0).unwrap(), alpha_in_range(n, u)).unwrap();
        let big = dilate(&body, f).unwrap();
        let a = verify::cut_ratio(&body, &cut).unwrap();
        let b = verify::cut_ratio(&big, &cut).unwrap();
        prop_assert!((a - b).abs() <= 1e-10, "{} vs {}", a, b);
        let a = verify::section_ratio(&body, &cut).unwrap();
        let b = verify::section_ratio(&big, &cut).unwrap();
        prop_assert!((a - b).abs() <= 1e-10, "{} vs {}", a, b);
    }

    #[test]
    fn cut_ratio_is_monotone_in_alpha(n in 2usize..=5, knots in 2usize..=8, seed in any::<u64>()) {
        let body = profile(n, knots, seed);
        let dir = Direction::axis(n, 0).unwrap();
        let mut prev = f64::INFINITY;
        for i in 0..33 {
            let alpha = alpha_in_range(n, i as f64 / 32.0);
            let r = verify::cut_ratio(&body, &CutSpec::new(dir.clone(), alpha).unwrap()).unwrap();
            prop_assert!(r <= prev + 1e-12);
            prev = r;
        }
    }

    #[test]
    fn profile_bounds_hold(n in 2usize..=5, knots in 2usize..=8, seed in any::<u64>(), u in 0.0f64..1.0) {
        let body = profile(n, knots, seed);
        let cut = CutSpec::new(Direction::axis(n, 0).unwrap(), alpha_in_range(n, u)).unwrap();
        prop_assert!(verify::check_theorem4(&body, &cut, 1e-9).unwrap().pass);
        prop_assert!(verify::check_theorem5(&body, &cut, 1e-9).unwrap().pass);
    }

    #[test]
    fn profile_json_round_trips(n in 2usize..=6, knots in 2usize..=8, seed in any::<u64>()) {
        let body = profile(n, knots, seed);
        let text = json::body_to_json(&body).unwrap();
        let back = json::parse_body(&text).unwrap();
        prop_assert_eq!(json::body_to_json(&back).unwrap(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polytope_cut_ratio_ignores_translation(
        n in 2usize..=3, points in 4usize..=12, seed in any::<u64>(), u in 0.0f64..1.0,
        shift in prop::collection::vec(-5.0f64..5.0, 3),
    ) {
        let body = polytope(n, points, seed);
        let dir = oracle::random_direction(n, seed ^ 1).unwrap();
        let cut = CutSpec::new(dir, alpha_in_range(n, u)).unwrap();
        let moved = translate(&body, &shift[..n]).unwrap();
        let a = verify::cut_ratio(&body, &cut).unwrap();
        let b = verify::cut_ratio(&moved, &cut).unwrap();
        prop_assert!((a - b).abs() <= 1e-9, "{} vs {}", a, b);
    }

    #[test]
    fn polytope_symmetral_preserves_ratios(n in 2usize..=3, points in 4usize..=12, seed in any::<u64>(), u in 0.0f64..1.0) {
        let body = polytope(n, points, seed);
        let dir = oracle::random_direction(n, seed ^ 2).unwrap();
        let alpha = alpha_in_range(n, u);
        let sym = measure::schwarz_symmetral(&body, &dir).unwrap();
        let axis = Direction::axis(n, 0).unwrap();
        let a = verify::cut_ratio(&body, &CutSpec::new(dir, alpha).unwrap()).unwrap();
        let b = verify::cut_ratio(&sym, &CutSpec::new(axis, alpha).unwrap()).unwrap();
        prop_assert!((a - b).abs() <= 1e-9, "{} vs {}", a, b);
    }

    #[test]
    fn polytope_volume_matches_slabs(n in 2usize..=3, points in 4usize..=12, seed in any::<u64>()) {
        let body = polytope(n, points, seed);
        let dir = oracle::random_direction(n, seed ^ 3).unwrap();
        let curve = measure::section_curve(&body, &dir).unwrap();
        let v = measure::volume(&body);
        prop_assert!((curve.volume() - v).abs() <= 1e-12 * v.max(1.0));
        let g: f64 = measure::centroid(&body).iter().zip(dir.coords()).map(|(a, b)| a * b).sum();
        prop_assert!((curve.centroid() - g).abs() <= 1e-11);
    }

    #[test]
    fn root_concavity_holds_on_polytopes(n in 2usize..=3, points in 4usize..=12, seed in any::<u64>()) {
        let body = polytope(n, points, seed);
        let dir = oracle::random_direction(n, seed ^ 4).unwrap();
        for which in [verify::ConcavityTarget::Section, verify::ConcavityTarget::CutVolume] {
            let r = verify::check_concavity(&body, &dir, which, 129, 1e-9).unwrap();
            prop_assert!(r.pass, "{:?}: {}", which, r.measured);
        }
    }
}
