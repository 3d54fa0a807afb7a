//! Measurement functionals along a direction `ξ`.
//!
//! Every body is reduced to its parallel section function
//! `A(t) = |K ∩ (ξ⊥ + tξ)|` through a [`SectionCurve`]; volume, cut-off
//! volume `V(t) = ∫_t^∞ A`, the centroid height and the maximal section all
//! come from that curve.
//!
//! Polytopes are sliced exactly. Between consecutive vertex heights the
//! section is the slice of a fixed combinatorial prism, so `A` is a
//! polynomial of degree at most `n - 1 ≤ 2` there. Each slab stores that
//! polynomial, fitted from three exact interior slices, and integrals over
//! slabs are taken in closed form.

use std::sync::Arc;

use crate::bodies::{AnalyticProfile, Body, Direction, NumericProfile, Polytope};
use crate::error::{Error, Result};
use crate::hull::{self, P2, P3};
use crate::optimize;

/// Relative slack for the leftmost-maximizer tie-break.
pub const ARGMAX_REL_TOL: f64 = 1e-12;

/// Worst midpoint-concavity violation `(f(x₋) + f(x₊))/2 - f(x)` over
/// `points` uniformly spaced points strictly inside `(a, b)`.
///
/// Non-positive for concave `f`. Returns `0.0` when fewer than three points
/// are requested.
pub fn grid_concavity_violation<F>(f: F, a: f64, b: f64, points: usize) -> f64
where
    F: Fn(f64) -> f64,
{
    if points < 3 || !(b > a) {
        return 0.0;
    }
    let h = (b - a) / (points + 1) as f64;
    let ys: Vec<f64> = (1..=points).map(|i| f(a + h * i as f64)).collect();
    ys.windows(3)
        .map(|w| 0.5 * (w[0] + w[2]) - w[1])
        .fold(f64::NEG_INFINITY, f64::max)
}

/// One slab `[t0, t1]` with `A(t0 + w(s + 1/2)) = a + b s + c s²`,
/// `s ∈ [-1/2, 1/2]`.
#[derive(Debug, Clone, Copy)]
struct Slab {
    t0: f64,
    t1: f64,
    a: f64,
    b: f64,
    c: f64,
}

impl Slab {
    fn width(&self) -> f64 {
        self.t1 - self.t0
    }

    fn eval_s(&self, s: f64) -> f64 {
        (self.a + s * (self.b + s * self.c)).max(0.0)
    }

    fn s_of(&self, t: f64) -> f64 {
        ((t - self.t0) / self.width() - 0.5).clamp(-0.5, 0.5)
    }

    /// `∫ A` from `s0` to the top of the slab.
    fn mass_from(&self, s0: f64) -> f64 {
        let w = self.width();
        w * (self.a * (0.5 - s0)
            + self.b * (0.25 - s0 * s0) / 2.0
            + self.c * (0.125 - s0 * s0 * s0) / 3.0)
    }

    /// `∫ t A(t) dt` over the whole slab.
    fn moment(&self) -> f64 {
        let w = self.width();
        let tm = self.t0 + 0.5 * w;
        let i0 = self.a + self.c / 12.0;
        let i1 = self.b / 12.0;
        w * (tm * i0 + w * i1)
    }
}

#[derive(Debug, Clone)]
enum Curve {
    Profile(AnalyticProfile),
    Numeric(NumericProfile),
    Slabs {
        poly: Polytope,
        dir: Direction,
        slabs: Vec<Slab>,
    },
}

/// The parallel section function of a body along a direction.
///
/// Heights are `t = ⟨x, ξ⟩`, so the support is `[-h_K(-ξ), h_K(ξ)]`.
#[derive(Debug, Clone)]
pub struct SectionCurve {
    curve: Curve,
    dim: usize,
    t_min: f64,
    t_max: f64,
}

/// Builds the section curve of `body` along `dir`.
///
/// Bodies of revolution only admit `dir = ±e_1`.
pub fn section_curve(body: &Body, dir: &Direction) -> Result<SectionCurve> {
    check_dim(body, dir)?;
    let curve = match body {
        Body::Profile(p) => Curve::Profile(orient_profile(p, dir)?),
        Body::Numeric(p) => Curve::Numeric(orient_numeric(p, dir)?),
        Body::Polytope(p) => Curve::Slabs {
            slabs: build_slabs(p, dir),
            poly: p.clone(),
            dir: dir.clone(),
        },
    };
    let (t_min, t_max) = match &curve {
        Curve::Profile(p) => (p.t_min(), p.t_max()),
        Curve::Numeric(p) => (p.t_min(), p.t_max()),
        Curve::Slabs { poly, dir, .. } => {
            let hs = poly.vertices().iter().map(|v| dir.dot(v));
            hs.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), h| (lo.min(h), hi.max(h)))
        }
    };
    Ok(SectionCurve {
        curve,
        dim: body.dim(),
        t_min,
        t_max,
    })
}

fn check_dim(body: &Body, dir: &Direction) -> Result<()> {
    if body.dim() != dir.dim() {
        return Err(Error::DimensionMismatch {
            expected: body.dim(),
            found: dir.dim(),
        });
    }
    Ok(())
}

fn orient_profile(p: &AnalyticProfile, dir: &Direction) -> Result<AnalyticProfile> {
    match dir.axial_sign() {
        Some(s) if s > 0.0 => Ok(p.clone()),
        Some(_) => Ok(p.reflected()),
        None => Err(Error::OffAxisDirection),
    }
}

fn orient_numeric(p: &NumericProfile, dir: &Direction) -> Result<NumericProfile> {
    match dir.axial_sign() {
        Some(s) if s > 0.0 => Ok(p.clone()),
        Some(_) => Ok(p.reflected()),
        None => Err(Error::OffAxisDirection),
    }
}

impl SectionCurve {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn t_min(&self) -> f64 {
        self.t_min
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    /// Heights where `A` may lose smoothness, including both support ends.
    pub fn breakpoints(&self) -> Vec<f64> {
        match &self.curve {
            Curve::Profile(p) => p.knots().iter().map(|k| k.0).collect(),
            Curve::Numeric(p) => p.breakpoints().to_vec(),
            Curve::Slabs { slabs, .. } => {
                let mut v: Vec<f64> = slabs.iter().map(|s| s.t0).collect();
                v.push(self.t_max);
                v
            }
        }
    }

    /// `A(t)`; zero outside the support.
    pub fn area(&self, t: f64) -> f64 {
        if t < self.t_min || t > self.t_max {
            return 0.0;
        }
        match &self.curve {
            Curve::Profile(p) => p.area_at(t),
            Curve::Numeric(p) => p.area_at(t),
            Curve::Slabs { poly, dir, .. } => slice_measure(poly, dir, t),
        }
    }

    pub fn volume(&self) -> f64 {
        match &self.curve {
            Curve::Profile(p) => p.volume(),
            Curve::Numeric(p) => p.volume(),
            Curve::Slabs { slabs, .. } => slabs.iter().map(|s| s.mass_from(-0.5)).sum(),
        }
    }

    /// `V(t) = ∫_t^∞ A(s) ds`.
    pub fn cut_volume(&self, t: f64) -> f64 {
        if t >= self.t_max {
            return 0.0;
        }
        match &self.curve {
            Curve::Profile(p) => p.cut_volume(t),
            Curve::Numeric(p) => p.cut_volume(t),
            Curve::Slabs { slabs, .. } => slabs
                .iter()
                .filter(|s| s.t1 > t)
                .map(|s| s.mass_from(if t > s.t0 { s.s_of(t) } else { -0.5 }))
                .sum(),
        }
    }

    /// `∫ t A(t) dt`.
    pub fn first_moment(&self) -> f64 {
        match &self.curve {
            Curve::Profile(p) => p.first_moment(),
            Curve::Numeric(p) => p.first_moment(),
            Curve::Slabs { slabs, .. } => slabs.iter().map(Slab::moment).sum(),
        }
    }

    /// Height of the centroid, `∫ t A / ∫ A`.
    pub fn centroid(&self) -> f64 {
        self.first_moment() / self.volume()
    }

    /// Leftmost maximizer `t0` of `A` and the maximal area `A(t0)`.
    pub fn max_section(&self) -> (f64, f64) {
        match &self.curve {
            Curve::Profile(p) => {
                let r_max = p.knots().iter().fold(0.0f64, |m, k| m.max(k.1));
                let k = p
                    .knots()
                    .iter()
                    .find(|k| k.1 >= r_max * (1.0 - ARGMAX_REL_TOL))
                    .expect("non-empty knots");
                (k.0, p.area_at(k.0))
            }
            Curve::Numeric(p) => numeric_max_section(p),
            Curve::Slabs { slabs, .. } => {
                let mut cands: Vec<(f64, f64)> = Vec::new();
                for s in slabs {
                    cands.push((s.t0, s.eval_s(-0.5)));
                    cands.push((s.t1, s.eval_s(0.5)));
                    if s.c < 0.0 {
                        let v = -s.b / (2.0 * s.c);
                        if v.abs() < 0.5 {
                            cands.push((s.t0 + s.width() * (v + 0.5), s.eval_s(v)));
                        }
                    }
                }
                leftmost_max(cands)
            }
        }
    }

    /// The Schwarz symmetral as a profile body, when exactly representable.
    fn symmetral(&self) -> Result<Body> {
        match &self.curve {
            Curve::Profile(p) => Ok(Body::Profile(p.clone())),
            Curve::Numeric(p) => Ok(Body::Numeric(p.clone())),
            Curve::Slabs { slabs, .. } if self.dim == 2 => {
                // Chord lengths are piecewise linear; ω_1 = 2.
                let mut knots: Vec<(f64, f64)> =
                    slabs.iter().map(|s| (s.t0, 0.5 * s.eval_s(-0.5))).collect();
                let last = slabs.last().expect("at least one slab");
                knots.push((last.t1, 0.5 * last.eval_s(0.5)));
                Ok(Body::Profile(AnalyticProfile::new(2, knots)?))
            }
            Curve::Slabs { slabs, .. } => {
                let table = Arc::new(slabs.clone());
                let bp: Vec<f64> = table.iter().map(|s| s.t0).collect();
                let area = move |t: f64| slab_area(&table, t);
                Ok(Body::Numeric(NumericProfile::new(
                    self.dim,
                    (self.t_min, self.t_max),
                    Arc::new(area),
                    bp,
                )?))
            }
        }
    }
}

fn slab_area(slabs: &[Slab], t: f64) -> f64 {
    let k = slabs.partition_point(|s| s.t1 < t);
    match slabs.get(k) {
        Some(s) if t >= s.t0 => s.eval_s(s.s_of(t)),
        _ => 0.0,
    }
}

fn leftmost_max(mut cands: Vec<(f64, f64)>) -> (f64, f64) {
    cands.sort_by(|p, q| p.0.total_cmp(&q.0));
    let best = cands.iter().fold(0.0f64, |m, c| m.max(c.1));
    *cands
        .iter()
        .find(|c| c.1 >= best * (1.0 - ARGMAX_REL_TOL))
        .expect("non-empty candidates")
}

fn numeric_max_section(p: &NumericProfile) -> (f64, f64) {
    let root = 1.0 / (p.dim() as f64 - 1.0);
    let f = |t: f64| p.area_at(t).max(0.0).powf(root);
    let (lo, hi) = (p.t_min(), p.t_max());
    let (x, v) = optimize::golden_section_max(f, lo, hi, 1e-13 * (hi - lo));
    // Left end of the near-optimal plateau.
    let level = v - 1e-12 * v.max(1.0);
    let (mut a, mut b) = (lo, x);
    if f(a) >= level {
        return (a, p.area_at(a));
    }
    while b - a > 1e-14 * (hi - lo) {
        let m = 0.5 * (a + b);
        if f(m) >= level {
            b = m;
        } else {
            a = m;
        }
    }
    (b, p.area_at(b))
}

// ---------------------------------------------------------------------------
// Polytope slicing
// ---------------------------------------------------------------------------

fn coord_scale(poly: &Polytope) -> f64 {
    poly.vertices()
        .iter()
        .flat_map(|v| v.iter())
        .fold(0.0f64, |m, x| m.max(x.abs()))
        .max(f64::MIN_POSITIVE)
}

/// Points of the polytope boundary skeleton lying on `⟨x, ξ⟩ = t`.
fn plane_points(poly: &Polytope, dir: &Direction, t: f64) -> Vec<Vec<f64>> {
    let eps = 1e-13 * coord_scale(poly);
    let verts = poly.vertices();
    let heights: Vec<f64> = verts.iter().map(|v| dir.dot(v)).collect();
    let mut pts = Vec::new();
    for &i in &poly.hull_vertices() {
        if (heights[i] - t).abs() <= eps {
            pts.push(verts[i].clone());
        }
    }
    for &(i, j) in poly.edges() {
        let (hi, hj) = (heights[i] - t, heights[j] - t);
        if (hi > eps && hj < -eps) || (hi < -eps && hj > eps) {
            let u = hi / (hi - hj);
            pts.push(verts[i].iter().zip(&verts[j]).map(|(a, b)| a + u * (b - a)).collect());
        }
    }
    pts
}

/// Orthonormal basis of `ξ⊥` in `R^3`.
fn plane_basis(xi: &[f64]) -> (P3, P3) {
    let x: P3 = [xi[0], xi[1], xi[2]];
    let k = (0..3).min_by(|&a, &b| x[a].abs().total_cmp(&x[b].abs())).unwrap_or(0);
    let mut e = [0.0; 3];
    e[k] = 1.0;
    let d = hull::dot3(e, x);
    let mut u = [e[0] - d * x[0], e[1] - d * x[1], e[2] - d * x[2]];
    let len = hull::dot3(u, u).sqrt();
    u = [u[0] / len, u[1] / len, u[2] / len];
    (u, hull::cross3(x, u))
}

/// Exact `(n-1)`-measure of the slice at height `t`.
fn slice_measure(poly: &Polytope, dir: &Direction, t: f64) -> f64 {
    let pts = plane_points(poly, dir, t);
    if pts.is_empty() {
        return 0.0;
    }
    let xi = dir.coords();
    if poly.dim() == 2 {
        let w = [-xi[1], xi[0]];
        let (lo, hi) = pts.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
            let s = w[0] * p[0] + w[1] * p[1];
            (lo.min(s), hi.max(s))
        });
        hi - lo
    } else {
        let (u, v) = plane_basis(xi);
        let flat: Vec<P2> = pts
            .iter()
            .map(|p| {
                let q = [p[0], p[1], p[2]];
                [hull::dot3(q, u), hull::dot3(q, v)]
            })
            .collect();
        hull::convex_area_2d(&flat)
    }
}

fn build_slabs(poly: &Polytope, dir: &Direction) -> Vec<Slab> {
    let mut hs: Vec<f64> = poly.hull_vertices().iter().map(|&i| dir.dot(&poly.vertices()[i])).collect();
    hs.sort_by(f64::total_cmp);
    hs.dedup();
    hs.windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| {
            let (t0, t1) = (w[0], w[1]);
            let at = |s: f64| slice_measure(poly, dir, t0 + (t1 - t0) * (s + 0.5));
            let (y1, y2, y3) = (at(-0.25), at(0.0), at(0.25));
            Slab {
                t0,
                t1,
                a: y2,
                b: 2.0 * (y3 - y1),
                c: 8.0 * (y1 + y3 - 2.0 * y2),
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Public functionals
// ---------------------------------------------------------------------------

/// Support function `h_K(ξ) = max ⟨x, ξ⟩`.
pub fn support(body: &Body, dir: &Direction) -> Result<f64> {
    check_dim(body, dir)?;
    match body {
        Body::Polytope(p) => Ok(p
            .vertices()
            .iter()
            .map(|v| dir.dot(v))
            .fold(f64::NEG_INFINITY, f64::max)),
        _ => Ok(section_curve(body, dir)?.t_max()),
    }
}

/// `A_{K,ξ}(t)`.
pub fn section_area(body: &Body, dir: &Direction, t: f64) -> Result<f64> {
    Ok(section_curve(body, dir)?.area(t))
}

/// `V_{K,ξ}(t)`, the volume of `{x ∈ K : ⟨x, ξ⟩ ≥ t}`.
pub fn cut_volume(body: &Body, dir: &Direction, t: f64) -> Result<f64> {
    Ok(section_curve(body, dir)?.cut_volume(t))
}

/// `|K|`.
pub fn volume(body: &Body) -> f64 {
    match body {
        Body::Polytope(p) => p.simplex_volume(),
        Body::Profile(p) => p.volume(),
        Body::Numeric(p) => p.volume(),
    }
}

/// `⟨g(K), ξ⟩`.
pub fn centroid_coordinate(body: &Body, dir: &Direction) -> Result<f64> {
    Ok(section_curve(body, dir)?.centroid())
}

/// `g(K)`. Profile bodies have their centroid on the first axis.
pub fn centroid(body: &Body) -> Vec<f64> {
    match body {
        Body::Polytope(p) => p.simplex_centroid().to_vec(),
        Body::Profile(p) => axis_point(p.dim(), p.first_moment() / p.volume()),
        Body::Numeric(p) => axis_point(p.dim(), p.first_moment() / p.volume()),
    }
}

fn axis_point(dim: usize, t: f64) -> Vec<f64> {
    let mut x = vec![0.0; dim];
    x[0] = t;
    x
}

/// The Schwarz symmetral `S_ξK`, written in the coordinate `t = ⟨x, ξ⟩`.
///
/// A planar polygon yields an exact [`AnalyticProfile`]; a 3-D polytope
/// yields a [`NumericProfile`] whose area is the exact piecewise quadratic
/// section function. A profile body along `±e_1` yields itself or its
/// mirror image.
pub fn schwarz_symmetral(body: &Body, dir: &Direction) -> Result<Body> {
    section_curve(body, dir)?.symmetral()
}

/// Leftmost maximizer of `A_{K,ξ}` and the maximal section area.
pub fn max_section(body: &Body, dir: &Direction) -> Result<(f64, f64)> {
    Ok(section_curve(body, dir)?.max_section())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{translate, Polytope};
    use std::f64::consts::PI;

    fn square() -> Body {
        Body::Polytope(
            Polytope::new(
                2,
                vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]],
            )
            .unwrap(),
        )
    }

    fn cube() -> Body {
        let mut v = Vec::new();
        for x in [0.0, 1.0] {
            for y in [0.0, 1.0] {
                for z in [0.0, 1.0] {
                    v.push(vec![x, y, z]);
                }
            }
        }
        Body::Polytope(Polytope::new(3, v).unwrap())
    }

    fn triangle() -> Body {
        Body::Polytope(Polytope::new(2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap())
    }

    fn cone(n: usize) -> Body {
        Body::Profile(AnalyticProfile::new(n, vec![(0.0, 1.0), (1.0, 0.0)]).unwrap())
    }

    fn e(n: usize, i: usize) -> Direction {
        Direction::axis(n, i).unwrap()
    }

    #[test]
    fn support_examples() {
        let sq = Body::Polytope(
            Polytope::new(
                2,
                vec![vec![-1.0, -1.0], vec![1.0, -1.0], vec![1.0, 1.0], vec![-1.0, 1.0]],
            )
            .unwrap(),
        );
        assert_eq!(support(&sq, &e(2, 0)).unwrap(), 1.0);
        let d = Direction::new(vec![1.0, 1.0]).unwrap();
        assert!((support(&triangle(), &d).unwrap() - 0.5f64.sqrt()).abs() < 1e-15);
        let c = Body::Profile(AnalyticProfile::new(2, vec![(-1.0 / 3.0, 1.0), (2.0 / 3.0, 0.0)]).unwrap());
        assert!((support(&c, &e(2, 0)).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert!((support(&c, &e(2, 0).neg()).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(support(&c, &e(2, 1)), Err(Error::OffAxisDirection));
    }

    #[test]
    fn section_area_examples() {
        assert!((section_area(&square(), &e(2, 1), 0.5).unwrap() - 1.0).abs() < 1e-15);
        assert!((section_area(&cone(3), &e(3, 0), 0.5).unwrap() - PI / 4.0).abs() < 1e-15);
        assert_eq!(section_area(&cube(), &e(3, 2), 1.5).unwrap(), 0.0);
        assert_eq!(section_area(&cube(), &e(3, 2), -0.1).unwrap(), 0.0);
        assert!((section_area(&cube(), &e(3, 2), 0.0).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn oblique_cube_slice_is_a_hexagon() {
        // The plane x+y+z = 3/2 cuts the unit cube in a regular hexagon of
        // side √2/2, area (3√3/2)(1/2).
        let d = Direction::new(vec![1.0, 1.0, 1.0]).unwrap();
        let t = 1.5 / 3f64.sqrt();
        let a = section_area(&cube(), &d, t).unwrap();
        assert!((a - 0.75 * 3f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn cut_volume_examples() {
        assert!((cut_volume(&square(), &e(2, 1), 0.25).unwrap() - 0.75).abs() < 1e-15);
        assert!((cut_volume(&cone(3), &e(3, 0), 0.0).unwrap() - PI / 3.0).abs() < 1e-15);
        assert_eq!(cut_volume(&cube(), &e(3, 0), 1.0).unwrap(), 0.0);
        assert_eq!(cut_volume(&cone(3), &e(3, 0), 2.0).unwrap(), 0.0);
    }

    #[test]
    fn oblique_cube_cut_volume_matches_corner_tetrahedron() {
        let d = Direction::new(vec![1.0, 1.0, 1.0]).unwrap();
        // {x+y+z ≥ 2} is a corner simplex of volume 1/6.
        let v = cut_volume(&cube(), &d, 2.0 / 3f64.sqrt()).unwrap();
        assert!((v - 1.0 / 6.0).abs() < 1e-14);
        let c = section_curve(&cube(), &d).unwrap();
        assert!((c.volume() - 1.0).abs() < 1e-14);
        assert!((c.centroid() - 1.5 / 3f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn volume_examples() {
        assert!((volume(&cube()) - 1.0).abs() < 1e-15);
        assert!((volume(&triangle()) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn centroid_examples() {
        assert!((centroid_coordinate(&cone(3), &e(3, 0)).unwrap() - 0.25).abs() < 1e-15);
        assert!((centroid_coordinate(&cone(2), &e(2, 0)).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        let sym = Body::Profile(AnalyticProfile::new(3, vec![(-1.0, 0.5), (0.0, 1.0), (1.0, 0.5)]).unwrap());
        assert!(centroid_coordinate(&sym, &e(3, 0)).unwrap().abs() < 1e-15);
        let g = centroid(&triangle());
        assert!((g[0] - 1.0 / 3.0).abs() < 1e-15 && (g[1] - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(centroid(&cone(3))[1..], [0.0, 0.0]);
        for x in centroid(&cube()) {
            assert!((x - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn slab_and_simplex_centroids_agree() {
        let d = Direction::new(vec![0.3, -0.2, 0.9]).unwrap();
        let body = Body::Polytope(
            Polytope::new(
                3,
                vec![
                    vec![0.0, 0.0, 0.0],
                    vec![2.0, 0.1, 0.0],
                    vec![0.3, 1.5, 0.2],
                    vec![0.1, 0.4, 1.1],
                    vec![1.0, 1.0, 1.0],
                ],
            )
            .unwrap(),
        );
        let curve = section_curve(&body, &d).unwrap();
        let g = centroid(&body);
        assert!((curve.centroid() - d.dot(&g)).abs() < 1e-13);
        assert!((curve.volume() - volume(&body)).abs() < 1e-13);
    }

    #[test]
    fn symmetral_examples() {
        let d = Direction::new(vec![0.4, 1.0]).unwrap();
        let poly = Body::Polytope(
            Polytope::new(
                2,
                vec![vec![0.0, 0.0], vec![2.0, 0.3], vec![1.1, 1.4], vec![-0.5, 0.9]],
            )
            .unwrap(),
        );
        let Body::Profile(s) = schwarz_symmetral(&poly, &d).unwrap() else { panic!() };
        for k in 0..=20 {
            let t = s.t_min() + (s.t_max() - s.t_min()) * k as f64 / 20.0;
            let a = section_area(&poly, &d, t).unwrap();
            assert!((s.area_at(t) - a).abs() < 1e-12);
        }
        assert!((s.t_max() - support(&poly, &d).unwrap()).abs() < 1e-15);
        assert!((s.t_min() + support(&poly, &d.neg()).unwrap()).abs() < 1e-15);

        let c = cone(3);
        let Body::Profile(same) = schwarz_symmetral(&c, &e(3, 0)).unwrap() else { panic!() };
        let Body::Profile(orig) = c else { panic!() };
        assert_eq!(same, orig);

        let Body::Numeric(n) = schwarz_symmetral(&cube(), &e(3, 2)).unwrap() else { panic!() };
        assert_eq!((n.t_min(), n.t_max()), (0.0, 1.0));
        for t in [0.0, 0.3, 0.77, 1.0] {
            assert!((n.area_at(t) - 1.0).abs() < 1e-15);
        }
        assert!((n.volume() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn max_section_examples() {
        let (t0, a) = max_section(&cone(3), &e(3, 0)).unwrap();
        assert_eq!(t0, 0.0);
        assert!((a - PI).abs() < 1e-15);

        // Double cone with base at 0.6 and unit volume in the plane.
        let dc = Body::Profile(AnalyticProfile::new(2, vec![(0.0, 0.0), (0.6, 1.0), (1.0, 0.0)]).unwrap());
        let (t0, a) = max_section(&dc, &e(2, 0)).unwrap();
        assert_eq!((t0, a), (0.6, 2.0));

        let (t0, a) = max_section(&cube(), &e(3, 2)).unwrap();
        assert_eq!(t0, 0.0);
        assert!((a - 1.0).abs() < 1e-15);

        let Body::Numeric(n) = schwarz_symmetral(&cube(), &e(3, 2)).unwrap() else { panic!() };
        let (t0, a) = max_section(&Body::Numeric(n), &e(3, 0)).unwrap();
        assert!(t0.abs() < 1e-10);
        assert!((a - 1.0).abs() < 1e-15);
    }

    #[test]
    fn max_section_of_octahedron_is_the_equator() {
        let mut v = Vec::new();
        for i in 0..3 {
            for s in [-1.0, 1.0] {
                let mut p = vec![0.0; 3];
                p[i] = s;
                v.push(p);
            }
        }
        let oct = Body::Polytope(Polytope::new(3, v).unwrap());
        let (t0, a) = max_section(&oct, &e(3, 2)).unwrap();
        assert!(t0.abs() < 1e-15);
        assert!((a - 2.0).abs() < 1e-14);
        // Oblique direction: maximum strictly inside a slab.
        let d = Direction::new(vec![0.2, 0.1, 1.0]).unwrap();
        let (t0, a) = max_section(&oct, &d).unwrap();
        let probe = |t: f64| section_area(&oct, &d, t).unwrap();
        assert!((probe(t0) - a).abs() < 1e-13);
        assert!(probe(t0 + 1e-4) <= a + 1e-13 && probe(t0 - 1e-4) <= a + 1e-13);
    }

    #[test]
    fn grid_violation_signs() {
        assert!(grid_concavity_violation(|x| -x * x, 0.0, 1.0, 257) < 0.0);
        assert!(grid_concavity_violation(|x| x * x, 0.0, 1.0, 257) > 0.0);
        assert!(grid_concavity_violation(|x| 2.0 * x, 0.0, 1.0, 257).abs() < 1e-15);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        assert!(matches!(
            section_area(&cube(), &e(2, 0), 0.0),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn centered_cube_sections_are_symmetric() {
        let cube = translate(&cube(), &[-0.5, -0.5, -0.5]).unwrap();
        let d = Direction::new(vec![1.0, 0.5, 0.2]).unwrap();
        let h = support(&cube, &d).unwrap();
        for i in 0..=400 {
            let t = -h + 2.0 * h * i as f64 / 400.0;
            let a = section_area(&cube, &d, t).unwrap();
            let b = section_area(&cube, &d, -t).unwrap();
            assert!((a - b).abs() < 1e-12, "t={t}: {a} vs {b}");
        }
    }
}
