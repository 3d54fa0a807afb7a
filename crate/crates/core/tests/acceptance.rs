//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use grunbaum::bodies::{dilate, AnalyticProfile, Body, CutSpec, Direction};
use grunbaum::verify::{self, FuzzConfig, FuzzReport, Quantity};
use grunbaum::{constants, extremal, measure, oracle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Closed forms written out independently of the library.

fn pow(x: f64, k: usize) -> f64 {
    x.powi(k as i32)
}

fn c1_formula(a: f64, n: usize) -> f64 {
    let nf = n as f64;
    if a <= 0.0 {
        pow((nf - a) / (nf + 1.0), n)
    } else if a < 1.0 / nf {
        pow(nf / (nf + 1.0), n) * pow(a + 1.0, n - 1) * (1.0 - a * nf)
    } else {
        0.0
    }
}

fn c2_formula_nonpositive(a: f64, n: usize) -> f64 {
    let nf = n as f64;
    1.0 - pow(nf * (a + 1.0) / (nf + 1.0), n)
}

fn c2_formula_n2(a: f64) -> f64 {
    if a < 1.0 {
        (5.0 - 3.0 * a) / (9.0 * (a + 1.0))
    } else {
        (2.0 - a) * (2.0 - a) / 9.0
    }
}

fn d_formula(a: f64, n: usize) -> f64 {
    let nf = n as f64;
    if a <= 0.0 {
        pow(nf * (a + 1.0) / (nf + 1.0), n - 1)
    } else if a <= 1.0 / nf {
        pow((nf - a) / (nf + 1.0), n - 1)
    } else {
        0.0
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn cut(n: usize, a: f64) -> CutSpec {
    CutSpec::new(Direction::axis(n, 0).unwrap(), a).unwrap()
}

/// `count` midpoints of equal subintervals of `(lo, hi)`.
fn spread(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|k| lo + (hi - lo) * (k as f64 + 0.5) / count as f64)
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0f64;
    let mut worst_formula = 0.0f64;
    for _ in 0..64 {
        let a = rng.random_range(0.01..1.99);
        let numeric = constants::c2_numeric(a, 2, constants::DEFAULT_C2_TOL).unwrap().value;
        let closed = constants::c2_closed_n2(a).unwrap();
        worst = worst.max((numeric - closed).abs());
        worst_formula = worst_formula.max((closed - c2_formula_n2(a)).abs());
    }
    let elapsed = start.elapsed();
    outcome(
        worst <= 1e-6 && worst_formula <= 1e-14 && elapsed < Duration::from_secs(10),
        format!("max |numeric - closed| = {worst:.2e} over 64 alphas in {elapsed:.2?}"),
    )
}

fn criterion_2() -> Outcome {
    let mut worst = 0.0f64;
    for n in 2..=6 {
        let nf = n as f64;
        let c2 = constants::c2(1e-6, n, constants::DEFAULT_C2_TOL).unwrap().value;
        worst = worst.max((c2 - (1.0 - pow(nf / (nf + 1.0), n))).abs());
        for a in [-1e-6, 1e-6] {
            let d = constants::d_const(a, n).unwrap();
            worst = worst.max((d - pow(nf / (nf + 1.0), n - 1)).abs());
        }
    }
    outcome(worst <= 1e-4, format!("max jump at alpha = 0 is {worst:.2e} for n = 2..6"))
}

fn criterion_3() -> Outcome {
    let mut worst_lower = 0.0f64;
    let mut worst_upper = 0.0f64;
    let mut worst_t5 = 0.0f64;
    for n in 2..=4 {
        let nf = n as f64;
        for a in spread(-1.0, 0.0, 16).into_iter().chain(spread(0.0, 1.0 / nf, 16)) {
            let body = Body::Profile(extremal::lower_extremizer(a, n).unwrap());
            let r = verify::cut_ratio(&body, &cut(n, a)).unwrap();
            worst_lower = worst_lower.max((r - c1_formula(a, n)).abs());
        }
        for a in spread(-1.0, 0.0, 16).into_iter().chain(spread(0.0, nf, 16)) {
            let body = Body::Profile(extremal::upper_extremizer(a, n, constants::DEFAULT_C2_TOL).unwrap());
            let r = verify::cut_ratio(&body, &cut(n, a)).unwrap();
            let target = if a <= 0.0 {
                c2_formula_nonpositive(a, n)
            } else if n == 2 {
                c2_formula_n2(a)
            } else {
                constants::c2(a, n, constants::DEFAULT_C2_TOL).unwrap().value
            };
            worst_upper = worst_upper.max((r - target).abs());
        }
        for a in spread(-1.0, 0.0, 16).into_iter().chain(spread(0.0, 1.0 / nf, 16)) {
            let body = Body::Profile(extremal::theorem5_equality_cone(a, n).unwrap());
            let r = verify::section_ratio(&body, &cut(n, a)).unwrap();
            worst_t5 = worst_t5.max((r - d_formula(a, n)).abs());
        }
    }
    let g2 = verify::cut_ratio(&Body::Profile(extremal::grunbaum_cone(2).unwrap()), &cut(2, 0.0)).unwrap();
    let g3 = verify::cut_ratio(&Body::Profile(extremal::grunbaum_cone(3).unwrap()), &cut(3, 0.0)).unwrap();
    let u = Body::Profile(extremal::upper_extremizer(1.0, 2, constants::DEFAULT_C2_TOL).unwrap());
    let u1 = verify::cut_ratio(&u, &cut(2, 1.0)).unwrap();
    let spots = (g2 - 4.0 / 9.0).abs().max((g3 - 27.0 / 64.0).abs()) <= 1e-12 && (u1 - 1.0 / 9.0).abs() <= 1e-6;
    outcome(
        worst_lower <= 1e-8 && worst_upper <= 1e-6 && worst_t5 <= 1e-8 && spots,
        format!(
            "lower {worst_lower:.1e}, upper {worst_upper:.1e}, section {worst_t5:.1e}; \
             spots 4/9 {g2:.15}, 27/64 {g3:.15}, 1/9 {u1:.12}"
        ),
    )
}

fn fuzz_config() -> FuzzConfig {
    FuzzConfig {
        profile_dims: vec![2, 3, 4, 5],
        polytope_dims: vec![2, 3],
        profiles_per_dim: 125,
        polytopes_per_dim: 250,
        alphas_per_body: 3,
        mc_samples: 100_000,
        seed: 20_261_017,
        tol: verify::EXACT_TOL,
    }
}

fn summarize(report: &FuzzReport, quantities: &[Quantity]) -> (usize, usize) {
    report
        .summaries
        .iter()
        .filter(|s| quantities.contains(&s.quantity))
        .fold((0, 0), |(t, p), s| (t + s.total, p + s.passed))
}

fn criterion_4(report: &FuzzReport, elapsed: Duration) -> Outcome {
    let (total, passed) = summarize(report, &[Quantity::CutRatio, Quantity::SectionRatio, Quantity::SupportRatio]);
    let bodies: std::collections::BTreeSet<&str> = report
        .reports
        .iter()
        .map(|r| r.context.body.split(' ').next().unwrap_or(""))
        .collect();
    let mut detail = format!("{passed}/{total} checks on {} bodies in {elapsed:.1?}", bodies.len());
    for f in report.failures().iter().filter(|r| r.quantity != Quantity::ConcavityA && r.quantity != Quantity::ConcavityV).take(3) {
        detail.push_str(&format!("; failed {:?} {} seed {:?}", f.quantity, f.context.body, f.context.seed));
    }
    outcome(
        total > 0 && passed == total && bodies.len() == 1000 && elapsed < Duration::from_secs(300),
        detail,
    )
}

fn criterion_5(report: &FuzzReport) -> Outcome {
    let (total, passed) = summarize(report, &[Quantity::ConcavityA, Quantity::ConcavityV]);
    let corrupted = Body::Profile(AnalyticProfile::new_unchecked(3, vec![(0.0, 0.0), (0.5, 0.2), (1.0, 1.0)]));
    let e = Direction::axis(3, 0).unwrap();
    let control = verify::check_concavity(&corrupted, &e, verify::ConcavityTarget::Section, 257, verify::EXACT_TOL)
        .unwrap();
    outcome(
        total == 2000 && passed == total && !control.pass,
        format!(
            "{passed}/{total} concavity checks pass; corrupted profile violation {:.3e} rejected: {}",
            control.measured, !control.pass
        ),
    )
}

fn criterion_6() -> Outcome {
    let trials = 500u64;
    let mut good = 0u64;
    let mut cone_ok = false;
    for i in 0..trials {
        let seed = oracle::mix_seed(6, i);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (body, dir) = match i % 4 {
            0 if i == 0 => (
                Body::Profile(AnalyticProfile::new(3, vec![(0.0, 1.0), (1.0, 0.0)]).unwrap()),
                Direction::axis(3, 0).unwrap(),
            ),
            0 | 1 => {
                let n = rng.random_range(2..=5);
                let p = oracle::random_profile(n, rng.random_range(2..=8), seed).unwrap();
                (Body::Profile(p), Direction::axis(n, 0).unwrap())
            }
            _ => {
                let n = rng.random_range(2..=3);
                let p = oracle::random_polytope(n, rng.random_range(n + 1..=n + 10), seed).unwrap();
                (Body::Polytope(p), oracle::random_direction(n, seed ^ 7).unwrap())
            }
        };
        let curve = measure::section_curve(&body, &dir).unwrap();
        let t = curve.t_min() + (curve.t_max() - curve.t_min()) * rng.random_range(0.05..0.95);
        let rows = verify::oracle_comparison(&body, &dir, t, 1_000_000, seed).unwrap();
        if i == 0 {
            cone_ok = (rows[0].exact - std::f64::consts::PI / 3.0).abs() < 1e-15 && rows[0].within;
        }
        good += u64::from(rows.iter().all(|r| r.within));
    }
    let share = good as f64 / trials as f64;
    outcome(
        share >= 0.99 && cone_ok,
        format!("{good}/{trials} trials within 4 sigma at 1e6 samples; unit cone volume pi/3 matched: {cone_ok}"),
    )
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0f64;
    let mut inside = true;
    for _ in 0..100 {
        let n = rng.random_range(2..=10);
        let nf = n as f64;
        let a = rng.random_range(0.0..1.0 / nf);
        if a == 0.0 {
            continue;
        }
        let b = constants::beta0(a, n).unwrap();
        inside &= (b - (nf + 1.0) * a / (a + 1.0)).abs() < 1e-15;
        inside &= b > 0.0 && b < (a + 1.0) / (2.0 - (nf - 1.0) * a);
        let psi = constants::psi(b, a, n).unwrap();
        worst = worst.max((psi - c1_formula(a, n)).abs());
    }
    outcome(
        worst <= 1e-12 && inside,
        format!("max |psi(beta0) - C1| = {worst:.2e}; beta0 inside its interval: {inside}"),
    )
}

fn criterion_8(config: &FuzzConfig, symmetral: (usize, usize)) -> Outcome {
    let cases = verify::fuzz_corpus(config).unwrap();
    let mut worst = 0.0f64;
    for case in &cases {
        for &a in &case.alphas {
            let c = CutSpec::new(case.direction.clone(), a).unwrap();
            let r = verify::cut_ratio(&case.body, &c).unwrap();
            let s = verify::section_ratio(&case.body, &c).unwrap();
            for f in [0.5, 2.0, 10.0] {
                let big = dilate(&case.body, f).unwrap();
                worst = worst.max((verify::cut_ratio(&big, &c).unwrap() - r).abs());
                worst = worst.max((verify::section_ratio(&big, &c).unwrap() - s).abs());
            }
        }
    }
    let (total, passed) = symmetral;
    outcome(
        worst <= 1e-9 && total > 0 && passed == total,
        format!(
            "dilation drift {worst:.2e} over {} bodies; symmetral consistency {passed}/{total}",
            cases.len()
        ),
    )
}

fn main() -> ExitCode {
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();
    let mut record = |k: u32, name: &'static str, o: Outcome| {
        println!("criterion {k} {}: {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        results.push((k, name, o));
    };

    record(1, "n=2 closed-form agreement", criterion_1());
    record(2, "branch continuity", criterion_2());
    record(3, "sharpness", criterion_3());

    let config = fuzz_config();
    let start = Instant::now();
    let report = verify::fuzz_suite(&config).expect("fuzz corpus runs");
    let elapsed = start.elapsed();
    record(4, "fuzz validity", criterion_4(&report, elapsed));
    record(5, "concavity suites", criterion_5(&report));
    record(6, "oracle agreement", criterion_6());
    record(7, "psi/beta0 identity", criterion_7());
    let symmetral = summarize(&report, &[Quantity::SymmetralConsistency]);
    record(8, "invariances", criterion_8(&config, symmetral));

    if results.iter().all(|(_, _, o)| o.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
