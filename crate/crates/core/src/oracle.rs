//! Hit-or-miss Monte Carlo estimators and seeded random body generators.
//!
//! The estimators only use point membership, never the slicing code, so
//! they are an independent check on [`crate::measure`].
//!
//! Samples are drawn in fixed blocks of [`BLOCK`] points. Block `b` uses a
//! ChaCha8 generator keyed by the seed with stream number `b`, and block
//! results are combined in block order. Estimates are therefore
//! bit-identical for any number of worker threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bodies::{AnalyticProfile, Body, Direction, Polytope};
use crate::error::{Error, Result};
use crate::measure;

/// Name of the generator recorded in reports.
pub const RNG_NAME: &str = "ChaCha8";

/// Smallest accepted sample count.
pub const MIN_SAMPLES: u64 = 1000;

/// Points per independently seeded block.
pub const BLOCK: u64 = 1 << 14;

/// A Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

impl McEstimate {
    /// `|value - exact| ≤ k · std_error`.
    pub fn agrees_with(&self, exact: f64, k: f64) -> bool {
        (self.value - exact).abs() <= k * self.std_error
    }
}

/// Raw counts from one sampling pass.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SampleTally {
    pub samples: u64,
    pub hits: u64,
    pub cut_hits: u64,
    /// `Σ ⟨x, ξ⟩` over hits.
    pub sum_h: f64,
    /// `Σ ⟨x, ξ⟩²` over hits.
    pub sum_h2: f64,
    pub box_volume: f64,
}

impl SampleTally {
    fn merge(mut self, o: &SampleTally) -> Self {
        self.samples += o.samples;
        self.hits += o.hits;
        self.cut_hits += o.cut_hits;
        self.sum_h += o.sum_h;
        self.sum_h2 += o.sum_h2;
        self
    }

    fn fraction_estimate(&self, count: u64, seed: u64) -> McEstimate {
        let p = count as f64 / self.samples as f64;
        McEstimate {
            value: self.box_volume * p,
            std_error: self.box_volume * binomial_std_error(count, self.samples),
            samples: self.samples,
            seed,
        }
    }

    pub fn volume(&self, seed: u64) -> McEstimate {
        self.fraction_estimate(self.hits, seed)
    }

    pub fn cut_volume(&self, seed: u64) -> McEstimate {
        self.fraction_estimate(self.cut_hits, seed)
    }

    /// Mean of `⟨x, ξ⟩` over accepted points.
    pub fn centroid(&self, seed: u64) -> McEstimate {
        let k = self.hits.max(1) as f64;
        let mean = self.sum_h / k;
        let var = if self.hits > 1 {
            ((self.sum_h2 - k * mean * mean) / (k - 1.0)).max(0.0)
        } else {
            f64::INFINITY
        };
        McEstimate {
            value: mean,
            std_error: (var / k).sqrt(),
            samples: self.samples,
            seed,
        }
    }

    /// `cut_hits / hits`, a direct estimate of the cut-off fraction.
    pub fn cut_fraction(&self, seed: u64) -> McEstimate {
        let q = self.cut_hits as f64 / self.hits.max(1) as f64;
        McEstimate {
            value: q,
            std_error: binomial_std_error(self.cut_hits, self.hits),
            samples: self.samples,
            seed,
        }
    }
}

/// Standard error of `count / trials` from the Agresti-Coull proportion
/// `(count + 2) / (trials + 4)`, which stays positive when `count` is `0` or
/// `trials`.
pub fn binomial_std_error(count: u64, trials: u64) -> f64 {
    let t = trials as f64 + 4.0;
    let p = (count as f64 + 2.0) / t;
    (p * (1.0 - p) / t).sqrt()
}

/// Membership test plus the tight axis-aligned bounding box.
type Membership<'a> = Box<dyn Fn(&[f64]) -> bool + Sync + 'a>;

struct Sampler<'a> {
    lo: Vec<f64>,
    hi: Vec<f64>,
    inside: Membership<'a>,
}

fn sampler(body: &Body) -> Result<Sampler<'_>> {
    let (lo, hi, inside): (Vec<f64>, Vec<f64>, Membership<'_>) = match body {
        Body::Polytope(p) => {
            let (lo, hi) = p.bounding_box();
            (lo, hi, Box::new(move |x: &[f64]| p.contains(x, 0.0)))
        }
        Body::Profile(p) => {
            let r = p.knots().iter().fold(0.0f64, |m, k| m.max(k.1));
            let (lo, hi) = revolution_box(p.dim(), p.t_min(), p.t_max(), r);
            let f = move |x: &[f64]| {
                let r = p.radius_at(x[0]);
                x[1..].iter().map(|y| y * y).sum::<f64>() <= r * r && x[0] >= p.t_min() && x[0] <= p.t_max()
            };
            (lo, hi, Box::new(f))
        }
        Body::Numeric(p) => {
            let axis = Direction::axis(p.dim(), 0)?;
            let (_, a) = measure::max_section(body, &axis)?;
            let r = (a / crate::bodies::unit_ball_volume(p.dim() - 1)).powf(1.0 / (p.dim() as f64 - 1.0));
            // Small slack for the quadrature-free radius bound.
            let (lo, hi) = revolution_box(p.dim(), p.t_min(), p.t_max(), r * (1.0 + 1e-9));
            let f = move |x: &[f64]| {
                let r = p.radius_at(x[0]);
                x[1..].iter().map(|y| y * y).sum::<f64>() <= r * r && x[0] >= p.t_min() && x[0] <= p.t_max()
            };
            (lo, hi, Box::new(f))
        }
    };
    if lo.iter().zip(&hi).any(|(a, b)| !(b > a)) {
        return Err(Error::OutOfRange {
            name: "bounding box width",
            value: 0.0,
            expected: "a bounding box with positive volume",
        });
    }
    Ok(Sampler { lo, hi, inside })
}

fn revolution_box(dim: usize, t0: f64, t1: f64, r: f64) -> (Vec<f64>, Vec<f64>) {
    let mut lo = vec![-r; dim];
    let mut hi = vec![r; dim];
    lo[0] = t0;
    hi[0] = t1;
    (lo, hi)
}

fn check_samples(samples: u64) -> Result<()> {
    if samples < MIN_SAMPLES {
        return Err(Error::OutOfRange {
            name: "samples",
            value: samples as f64,
            expected: "at least 1000 samples",
        });
    }
    Ok(())
}

/// One sampling pass collecting volume, cut and centroid statistics for the
/// cut `⟨x, ξ⟩ ≥ t`.
pub fn sample(body: &Body, dir: &Direction, t: f64, samples: u64, seed: u64) -> Result<SampleTally> {
    check_samples(samples)?;
    if dir.dim() != body.dim() {
        return Err(Error::DimensionMismatch {
            expected: body.dim(),
            found: dir.dim(),
        });
    }
    let s = sampler(body)?;
    let box_volume: f64 = s.lo.iter().zip(&s.hi).map(|(a, b)| b - a).product();
    let blocks = samples.div_ceil(BLOCK);
    let tallies: Vec<SampleTally> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let count = BLOCK.min(samples - b * BLOCK);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let mut x = vec![0.0; body.dim()];
            let mut tally = SampleTally::default();
            for _ in 0..count {
                for (d, xd) in x.iter_mut().enumerate() {
                    *xd = rng.random_range(s.lo[d]..s.hi[d]);
                }
                if (s.inside)(&x) {
                    let h = dir.dot(&x);
                    tally.hits += 1;
                    tally.sum_h += h;
                    tally.sum_h2 += h * h;
                    if h >= t {
                        tally.cut_hits += 1;
                    }
                }
            }
            tally.samples = count;
            tally
        })
        .collect();
    let total = tallies.iter().fold(SampleTally::default(), |acc, t| acc.merge(t));
    Ok(SampleTally { box_volume, ..total })
}

/// `|K|` by hit-or-miss over the bounding box.
pub fn mc_volume(body: &Body, samples: u64, seed: u64) -> Result<McEstimate> {
    let axis = Direction::axis(body.dim(), 0)?;
    Ok(sample(body, &axis, f64::INFINITY, samples, seed)?.volume(seed))
}

/// `V_{K,ξ}(t)` by hit-or-miss.
pub fn mc_cut_volume(body: &Body, dir: &Direction, t: f64, samples: u64, seed: u64) -> Result<McEstimate> {
    Ok(sample(body, dir, t, samples, seed)?.cut_volume(seed))
}

/// `⟨g(K), ξ⟩` as the mean height of accepted points.
pub fn mc_centroid_coordinate(body: &Body, dir: &Direction, samples: u64, seed: u64) -> Result<McEstimate> {
    Ok(sample(body, dir, f64::INFINITY, samples, seed)?.centroid(seed))
}

/// SplitMix64 finalizer; derives independent child seeds.
pub fn mix_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn unit_ball_point(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    loop {
        let x: Vec<f64> = (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect();
        let r2: f64 = x.iter().map(|v| v * v).sum();
        if r2 <= 1.0 && r2 > 0.0 {
            return x;
        }
    }
}

/// A uniformly random unit vector.
pub fn random_direction(dim: usize, seed: u64) -> Result<Direction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Direction::new(unit_ball_point(&mut rng, dim.max(1)))
}

/// Convex hull of `num_points` uniform points in the unit ball, keeping only
/// extreme points. Degenerate draws are rejected and redrawn, at most 100
/// times.
pub fn random_polytope(n: usize, num_points: usize, seed: u64) -> Result<Polytope> {
    if n != 2 && n != 3 {
        return Err(Error::InvalidDimension(n));
    }
    if num_points < n + 1 {
        return Err(Error::OutOfRange {
            name: "num_points",
            value: num_points as f64,
            expected: "num_points >= n + 1",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let min_volume = 1e-6 * crate::bodies::unit_ball_volume(n);
    let mut last_err = None;
    for _ in 0..100 {
        let pts: Vec<Vec<f64>> = (0..num_points).map(|_| unit_ball_point(&mut rng, n)).collect();
        match Polytope::new(n, pts) {
            Ok(p) if p.simplex_volume() > min_volume => {
                let verts = p.hull_vertices().iter().map(|&i| p.vertices()[i].clone()).collect();
                return Polytope::new(n, verts);
            }
            Ok(_) => {}
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or(Error::InvalidBody(vec![crate::bodies::Diagnostic::ZeroVolume])))
}

/// A random concave piecewise-linear profile with `num_knots` knots.
///
/// Slopes are drawn uniformly and sorted strictly decreasing, which makes
/// the radius concave; a linear correction then places the end radii at
/// independently drawn non-negative values (zero with probability 0.3).
pub fn random_profile(n: usize, num_knots: usize, seed: u64) -> Result<AnalyticProfile> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    if num_knots < 2 {
        return Err(Error::OutOfRange {
            name: "num_knots",
            value: num_knots as f64,
            expected: "num_knots >= 2",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let length = rng.random_range(0.5..2.0);
    let offset = rng.random_range(-1.0..1.0);
    let steps: Vec<f64> = (1..num_knots).map(|_| rng.random_range(0.2..1.0)).collect();
    let total: f64 = steps.iter().sum();
    let mut ts = vec![offset];
    for s in &steps {
        ts.push(ts[ts.len() - 1] + length * s / total);
    }

    let mut slopes: Vec<f64> = (1..num_knots).map(|_| rng.random_range(-3.0..3.0)).collect();
    slopes.sort_by(|a, b| b.total_cmp(a));
    slopes.dedup();
    while slopes.len() < num_knots - 1 {
        let last = slopes[slopes.len() - 1];
        slopes.push(last - 0.1);
    }
    let mut raw = vec![0.0];
    for k in 0..num_knots - 1 {
        raw.push(raw[k] + slopes[k] * (ts[k + 1] - ts[k]));
    }
    // Bulge above the chord, rescaled to a random height.
    let (t0, t1) = (ts[0], ts[num_knots - 1]);
    let chord = |t: f64, a: f64, b: f64| a + (b - a) * (t - t0) / (t1 - t0);
    let bulge: Vec<f64> = ts
        .iter()
        .zip(&raw)
        .map(|(&t, &r)| (r - chord(t, raw[0], raw[num_knots - 1])).max(0.0))
        .collect();
    let peak = bulge.iter().fold(0.0f64, |m, &b| m.max(b));
    let height = rng.random_range(0.2..1.5);
    let gain = if peak > 0.0 { height / peak } else { 0.0 };

    let end = |rng: &mut ChaCha8Rng| {
        if rng.random_bool(0.3) {
            0.0
        } else {
            rng.random_range(0.0..1.0)
        }
    };
    let mut e0 = end(&mut rng);
    let e1 = end(&mut rng);
    if e0 == 0.0 && e1 == 0.0 && num_knots == 2 {
        e0 = rng.random_range(0.2..1.0);
    }
    let knots: Vec<(f64, f64)> = ts
        .iter()
        .zip(&bulge)
        .map(|(&t, &b)| (t, (chord(t, e0, e1) + gain * b).max(0.0)))
        .collect();
    AnalyticProfile::new(n, knots)
}
