//! Convex bodies and the affine operations the inequalities need.
//!
//! Three representations are supported:
//!
//! - [`Polytope`]: the convex hull of a vertex list in dimension 2 or 3,
//!   sliced exactly.
//! - [`AnalyticProfile`]: a body of revolution about the first coordinate
//!   axis whose section radius is piecewise linear and concave. Every
//!   extremal body is of this form, as is the Schwarz symmetral of any
//!   planar polygon.
//! - [`NumericProfile`]: a body of revolution given only through its
//!   section-area function, used for symmetrals of 3-D polytopes whose
//!   radius is not piecewise linear.
//!
//! All values are immutable after construction; every operation returns a
//! new body.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hull::{self, Hull3, P2, P3};
use crate::quadrature::{self, DEFAULT_TOL};

/// Tolerance on `|ξ| = 1` for a [`Direction`].
pub const UNIT_TOL: f64 = 1e-12;

/// Tolerance on the concavity of a profile's radius.
pub const CONCAVITY_TOL: f64 = 1e-10;

/// Grid size used when checking sampled invariants of a [`NumericProfile`].
pub const NUMERIC_GRID: usize = 257;

/// Volume of the unit Euclidean ball in `R^d`, `π^{d/2} / Γ(d/2 + 1)`.
///
/// Evaluated by the exact two-step recurrence `ω_d = 2π/d · ω_{d-2}` from
/// `ω_0 = 1` and `ω_1 = 2`.
pub fn unit_ball_volume(d: usize) -> f64 {
    let mut w = if d.is_multiple_of(2) { 1.0 } else { 2.0 };
    let mut k = if d.is_multiple_of(2) { 2 } else { 3 };
    while k <= d {
        w *= 2.0 * std::f64::consts::PI / k as f64;
        k += 2;
    }
    w
}

/// A unit vector selecting the slicing axis `ξ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Direction {
    coords: Vec<f64>,
}

impl Direction {
    /// Normalizes `coords`. Fails on zero, non-finite, or 1-D input.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidDimension(coords.len()));
        }
        let norm = coords.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::DegenerateDirection);
        }
        Ok(Self {
            coords: coords.into_iter().map(|x| x / norm).collect(),
        })
    }

    /// The `index`-th standard basis vector of `R^dim`.
    pub fn axis(dim: usize, index: usize) -> Result<Self> {
        if dim < 2 || index >= dim {
            return Err(Error::InvalidDimension(dim));
        }
        let mut coords = vec![0.0; dim];
        coords[index] = 1.0;
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn neg(&self) -> Self {
        Self {
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }

    pub fn dot(&self, x: &[f64]) -> f64 {
        self.coords.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// `Some(+1.0)` or `Some(-1.0)` when this is `±e_1`.
    pub(crate) fn axial_sign(&self) -> Option<f64> {
        let off_axis = self.coords[1..].iter().map(|x| x * x).sum::<f64>().sqrt();
        if off_axis > UNIT_TOL {
            return None;
        }
        if (self.coords[0] - 1.0).abs() <= UNIT_TOL {
            Some(1.0)
        } else if (self.coords[0] + 1.0).abs() <= UNIT_TOL {
            Some(-1.0)
        } else {
            None
        }
    }
}

/// A violated body invariant, as reported by [`validate`].
#[derive(Debug, Clone, PartialEq)]
pub enum Diagnostic {
    UnsupportedDimension { dim: usize },
    WrongCoordinateCount { index: usize, expected: usize, found: usize },
    NonFinite { index: usize },
    TooFewPoints { required: usize, found: usize },
    NotFullDimensional { rank: usize, dim: usize },
    KnotsNotIncreasing { index: usize },
    NegativeRadius { index: usize, radius: f64 },
    ZeroInteriorRadius { index: usize },
    NotConcave { index: usize, deficit: f64 },
    NegativeArea { t: f64, area: f64 },
    SampledNotConcave { violation: f64 },
    EmptySupport { t_min: f64, t_max: f64 },
    ZeroVolume,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnsupportedDimension { dim } => write!(f, "unsupported dimension {dim}"),
            Self::WrongCoordinateCount { index, expected, found } => {
                write!(f, "point {index} has {found} coordinates, expected {expected}")
            }
            Self::NonFinite { index } => write!(f, "point {index} has a non-finite coordinate"),
            Self::TooFewPoints { required, found } => {
                write!(f, "need at least {required} points, found {found}")
            }
            Self::NotFullDimensional { rank, dim } => {
                write!(f, "points span rank {rank} < {dim}: body is not full-dimensional")
            }
            Self::KnotsNotIncreasing { index } => {
                write!(f, "knot heights not strictly increasing at knot {index}")
            }
            Self::NegativeRadius { index, radius } => {
                write!(f, "knot {index} has negative radius {radius}")
            }
            Self::ZeroInteriorRadius { index } => write!(f, "interior knot {index} has zero radius"),
            Self::NotConcave { index, deficit } => {
                write!(f, "radius not concave at knot {index} (below chord by {deficit:e})")
            }
            Self::NegativeArea { t, area } => write!(f, "section area {area} < 0 at t = {t}"),
            Self::SampledNotConcave { violation } => write!(
                f,
                "sampled area^(1/(n-1)) is not concave (violation {violation:e})"
            ),
            Self::EmptySupport { t_min, t_max } => {
                write!(f, "support [{t_min}, {t_max}] is empty or not finite")
            }
            Self::ZeroVolume => write!(f, "body has zero volume"),
        }
    }
}

fn into_result<T>(value: T, diags: Vec<Diagnostic>) -> Result<T> {
    if diags.is_empty() {
        Ok(value)
    } else {
        Err(Error::InvalidBody(diags))
    }
}

// ---------------------------------------------------------------------------
// Polytope
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
enum Shape {
    /// Counter-clockwise hull indices.
    Polygon(Vec<usize>),
    Polyhedron(Hull3),
}

/// The convex hull of a finite point set in `R^2` or `R^3`.
#[derive(Debug, Clone)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vec<f64>>,
    shape: Shape,
    /// Outward half-spaces `n · x ≤ c`, padded to three coordinates.
    halfspaces: Vec<(P3, f64)>,
    edges: Vec<(usize, usize)>,
    volume: f64,
    centroid: Vec<f64>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Polytope {
    pub fn new(dim: usize, vertices: Vec<Vec<f64>>) -> Result<Self> {
        let diags = polytope_diagnostics(dim, &vertices);
        if !diags.is_empty() {
            return Err(Error::InvalidBody(diags));
        }
        Self::build(dim, vertices).ok_or_else(|| {
            Error::InvalidBody(vec![Diagnostic::NotFullDimensional { rank: dim - 1, dim }])
        })
    }

    fn build(dim: usize, vertices: Vec<Vec<f64>>) -> Option<Self> {
        match dim {
            2 => {
                let pts: Vec<P2> = vertices.iter().map(|v| [v[0], v[1]]).collect();
                let ccw = hull::hull_2d(&pts);
                if ccw.len() < 3 {
                    return None;
                }
                let ring: Vec<P2> = ccw.iter().map(|&i| pts[i]).collect();
                let (area, c) = hull::polygon_area_centroid(&ring);
                let mut halfspaces = Vec::with_capacity(ccw.len());
                let mut edges = Vec::with_capacity(ccw.len());
                for k in 0..ccw.len() {
                    let a = pts[ccw[k]];
                    let b = pts[ccw[(k + 1) % ccw.len()]];
                    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
                    let len = (dx * dx + dy * dy).sqrt();
                    let n = [dy / len, -dx / len, 0.0];
                    halfspaces.push((n, n[0] * a[0] + n[1] * a[1]));
                    edges.push((ccw[k], ccw[(k + 1) % ccw.len()]));
                }
                Some(Self {
                    dim,
                    shape: Shape::Polygon(ccw),
                    halfspaces,
                    edges,
                    volume: area,
                    centroid: c.to_vec(),
                    vertices,
                })
            }
            3 => {
                let pts: Vec<P3> = vertices.iter().map(|v| [v[0], v[1], v[2]]).collect();
                let h = hull::hull_3d(&pts)?;
                let (vol, c) = hull::polyhedron_volume_centroid(&pts, &h);
                if !(vol > 0.0) {
                    return None;
                }
                Some(Self {
                    dim,
                    halfspaces: h.planes.clone(),
                    edges: h.edges.clone(),
                    shape: Shape::Polyhedron(h),
                    volume: vol,
                    centroid: c.to_vec(),
                    vertices,
                })
            }
            _ => None,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    /// Indices of the vertices that are extreme points of the hull.
    pub fn hull_vertices(&self) -> Vec<usize> {
        match &self.shape {
            Shape::Polygon(ccw) => {
                let mut v = ccw.clone();
                v.sort_unstable();
                v
            }
            Shape::Polyhedron(h) => h.vertices.clone(),
        }
    }

    /// Hull edges as vertex index pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Volume from the exact simplex decomposition of the hull.
    pub fn simplex_volume(&self) -> f64 {
        self.volume
    }

    /// Centroid from the exact simplex decomposition of the hull.
    pub fn simplex_centroid(&self) -> &[f64] {
        &self.centroid
    }

    /// Membership with an absolute slack of `tol`.
    pub fn contains(&self, x: &[f64], tol: f64) -> bool {
        let p = [x[0], x[1], if self.dim == 3 { x[2] } else { 0.0 }];
        self.halfspaces
            .iter()
            .all(|(n, c)| n[0] * p[0] + n[1] * p[1] + n[2] * p[2] <= c + tol)
    }

    /// Axis-aligned bounding box `(min, max)`.
    pub fn bounding_box(&self) -> (Vec<f64>, Vec<f64>) {
        let mut lo = vec![f64::INFINITY; self.dim];
        let mut hi = vec![f64::NEG_INFINITY; self.dim];
        for v in &self.vertices {
            for d in 0..self.dim {
                lo[d] = lo[d].min(v[d]);
                hi[d] = hi[d].max(v[d]);
            }
        }
        (lo, hi)
    }

    fn map_vertices(&self, f: impl Fn(&[f64]) -> Vec<f64>) -> Self {
        let vertices = self.vertices.iter().map(|v| f(v)).collect();
        Self::build(self.dim, vertices).expect("affine image of a full-dimensional polytope")
    }

    pub fn translated(&self, shift: &[f64]) -> Result<Self> {
        if shift.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: shift.len(),
            });
        }
        Ok(self.map_vertices(|v| v.iter().zip(shift).map(|(a, b)| a + b).collect()))
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        check_factor(factor)?;
        Ok(self.map_vertices(|v| v.iter().map(|a| a * factor).collect()))
    }
}

fn polytope_diagnostics(dim: usize, vertices: &[Vec<f64>]) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    if dim != 2 && dim != 3 {
        diags.push(Diagnostic::UnsupportedDimension { dim });
        return diags;
    }
    for (index, v) in vertices.iter().enumerate() {
        if v.len() != dim {
            diags.push(Diagnostic::WrongCoordinateCount {
                index,
                expected: dim,
                found: v.len(),
            });
        } else if v.iter().any(|x| !x.is_finite()) {
            diags.push(Diagnostic::NonFinite { index });
        }
    }
    if !diags.is_empty() {
        return diags;
    }
    if vertices.len() < dim + 1 {
        diags.push(Diagnostic::TooFewPoints {
            required: dim + 1,
            found: vertices.len(),
        });
        return diags;
    }
    let rank = affine_rank(vertices);
    if rank < dim {
        diags.push(Diagnostic::NotFullDimensional { rank, dim });
    }
    diags
}

/// Rank of `{v_i - v_0}` by Gaussian elimination with partial pivoting.
fn affine_rank(vertices: &[Vec<f64>]) -> usize {
    let dim = vertices[0].len();
    let mut rows: Vec<Vec<f64>> = vertices[1..]
        .iter()
        .map(|v| v.iter().zip(&vertices[0]).map(|(a, b)| a - b).collect())
        .collect();
    let scale = rows
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |m, x| m.max(x.abs()));
    if scale == 0.0 {
        return 0;
    }
    let tol = 1e-10 * scale;
    let mut rank = 0;
    for col in 0..dim {
        let pivot = (rank..rows.len()).max_by(|&a, &b| rows[a][col].abs().total_cmp(&rows[b][col].abs()));
        let Some(p) = pivot else { break };
        if rows[p][col].abs() <= tol {
            continue;
        }
        rows.swap(rank, p);
        for r in rank + 1..rows.len() {
            let factor = rows[r][col] / rows[rank][col];
            let (top, bottom) = rows.split_at_mut(r);
            for (x, y) in bottom[0][col..dim].iter_mut().zip(&top[rank][col..dim]) {
                *x -= factor * y;
            }
        }
        rank += 1;
    }
    rank
}

fn check_factor(factor: f64) -> Result<()> {
    if factor > 0.0 && factor.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveFactor(factor))
    }
}

// ---------------------------------------------------------------------------
// AnalyticProfile
// ---------------------------------------------------------------------------

/// A body of revolution about the first coordinate axis with a piecewise
/// linear, concave section radius.
///
/// The section at height `t` is an `(n-1)`-ball of radius `r(t)`, so its
/// area is `ω_{n-1} r(t)^{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticProfile {
    dim: usize,
    knots: Vec<(f64, f64)>,
}

impl AnalyticProfile {
    pub fn new(dim: usize, knots: Vec<(f64, f64)>) -> Result<Self> {
        let p = Self { dim, knots };
        let diags = p.diagnostics();
        into_result(p, diags)
    }

    /// Builds a profile without checking invariants. Use [`validate`] to
    /// inspect such a value; measurements on it are only meaningful when it
    /// happens to be valid.
    pub fn new_unchecked(dim: usize, knots: Vec<(f64, f64)>) -> Self {
        Self { dim, knots }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    pub fn t_min(&self) -> f64 {
        self.knots[0].0
    }

    pub fn t_max(&self) -> f64 {
        self.knots[self.knots.len() - 1].0
    }

    /// `ω_{n-1}`, the measure of the unit section ball.
    pub fn section_unit(&self) -> f64 {
        unit_ball_volume(self.dim - 1)
    }

    /// Radius at height `t`; zero outside the support.
    pub fn radius_at(&self, t: f64) -> f64 {
        if t < self.t_min() || t > self.t_max() {
            return 0.0;
        }
        let k = self.segment_of(t);
        let (t0, r0) = self.knots[k];
        let (t1, r1) = self.knots[k + 1];
        lerp(r0, r1, (t - t0) / (t1 - t0))
    }

    pub fn area_at(&self, t: f64) -> f64 {
        let r = self.radius_at(t);
        self.section_unit() * r.powi(self.dim as i32 - 1)
    }

    /// Index `k` of the segment `[t_k, t_{k+1}]` containing `t` (clamped).
    fn segment_of(&self, t: f64) -> usize {
        let n = self.knots.len();
        let idx = self.knots.partition_point(|&(tk, _)| tk <= t);
        idx.saturating_sub(1).min(n - 2)
    }

    pub fn volume(&self) -> f64 {
        self.knots
            .windows(2)
            .map(|w| segment_integrals(w[0], w[1], self.dim).0)
            .sum::<f64>()
            * self.section_unit()
    }

    /// `∫ t A(t) dt`.
    pub fn first_moment(&self) -> f64 {
        self.knots
            .windows(2)
            .map(|w| segment_integrals(w[0], w[1], self.dim).1)
            .sum::<f64>()
            * self.section_unit()
    }

    /// Volume of the part with axial coordinate `≥ t`, in closed form.
    pub fn cut_volume(&self, t: f64) -> f64 {
        if t >= self.t_max() {
            return 0.0;
        }
        if t <= self.t_min() {
            return self.volume();
        }
        let k = self.segment_of(t);
        let start = (t, self.radius_at(t));
        let mut mass = segment_integrals(start, self.knots[k + 1], self.dim).0;
        for w in self.knots[k + 1..].windows(2) {
            mass += segment_integrals(w[0], w[1], self.dim).0;
        }
        mass * self.section_unit()
    }

    pub fn shifted(&self, dt: f64) -> Self {
        Self {
            dim: self.dim,
            knots: self.knots.iter().map(|&(t, r)| (t + dt, r)).collect(),
        }
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        check_factor(factor)?;
        Ok(Self {
            dim: self.dim,
            knots: self.knots.iter().map(|&(t, r)| (t * factor, r * factor)).collect(),
        })
    }

    /// Mirror image under `t ↦ -t`.
    pub fn reflected(&self) -> Self {
        Self {
            dim: self.dim,
            knots: self.knots.iter().rev().map(|&(t, r)| (-t, r)).collect(),
        }
    }

    pub fn diagnostics(&self) -> Vec<Diagnostic> {
        let mut diags = Vec::new();
        if self.dim < 2 {
            diags.push(Diagnostic::UnsupportedDimension { dim: self.dim });
        }
        if self.knots.len() < 2 {
            diags.push(Diagnostic::TooFewPoints {
                required: 2,
                found: self.knots.len(),
            });
            return diags;
        }
        for (index, &(t, r)) in self.knots.iter().enumerate() {
            if !t.is_finite() || !r.is_finite() {
                diags.push(Diagnostic::NonFinite { index });
            }
        }
        if !diags.is_empty() {
            return diags;
        }
        let last = self.knots.len() - 1;
        for (index, w) in self.knots.windows(2).enumerate() {
            if !(w[1].0 > w[0].0) {
                diags.push(Diagnostic::KnotsNotIncreasing { index: index + 1 });
            }
        }
        for (index, &(_, radius)) in self.knots.iter().enumerate() {
            if radius < 0.0 {
                diags.push(Diagnostic::NegativeRadius { index, radius });
            } else if radius == 0.0 && index != 0 && index != last {
                diags.push(Diagnostic::ZeroInteriorRadius { index });
            }
        }
        if !diags.is_empty() {
            return diags;
        }
        let r_max = self.knots.iter().fold(0.0f64, |m, k| m.max(k.1));
        let tol = CONCAVITY_TOL * r_max.max(1.0);
        for index in 1..last {
            let (t0, r0) = self.knots[index - 1];
            let (t1, r1) = self.knots[index];
            let (t2, r2) = self.knots[index + 1];
            let chord = lerp(r0, r2, (t1 - t0) / (t2 - t0));
            let deficit = chord - r1;
            if deficit > tol {
                diags.push(Diagnostic::NotConcave { index, deficit });
            }
        }
        if r_max == 0.0 {
            diags.push(Diagnostic::ZeroVolume);
        }
        diags
    }
}

#[inline]
fn lerp(a: f64, b: f64, u: f64) -> f64 {
    a + (b - a) * u
}

/// `(∫ r^{n-1}, ∫ t r^{n-1})` over one linear piece, without the `ω` factor.
///
/// With `r` interpolating `r0 → r1` on `[t0, t1]`, expanding in the
/// Bernstein basis leaves only non-negative terms:
/// `∫ r^{n-1} = h/n Σ_j r0^{n-1-j} r1^j` and
/// `∫ u r^{n-1} du = 1/(n(n+1)) Σ_j (j+1) r0^{n-1-j} r1^j`.
pub(crate) fn segment_integrals(a: (f64, f64), b: (f64, f64), dim: usize) -> (f64, f64) {
    let (t0, r0) = a;
    let (t1, r1) = b;
    let h = t1 - t0;
    let m = dim - 1;
    let mut plain = 0.0;
    let mut weighted = 0.0;
    let mut p0 = 1.0;
    let mut powers0 = vec![0.0; m + 1];
    for slot in powers0.iter_mut() {
        *slot = p0;
        p0 *= r0;
    }
    let mut p1 = 1.0;
    for j in 0..=m {
        let term = powers0[m - j] * p1;
        plain += term;
        weighted += (j + 1) as f64 * term;
        p1 *= r1;
    }
    let n = dim as f64;
    let mass = h * plain / n;
    let moment = h * (t0 * plain / n + h * weighted / (n * (n + 1.0)));
    (mass, moment)
}

// ---------------------------------------------------------------------------
// NumericProfile
// ---------------------------------------------------------------------------

/// Section-area function of a body of revolution.
pub type AreaFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A body of revolution given by its section-area function `A(t)` on a
/// support interval. Integrals use breakpoint-aware adaptive quadrature.
#[derive(Clone)]
pub struct NumericProfile {
    dim: usize,
    t_min: f64,
    t_max: f64,
    area: AreaFn,
    breakpoints: Vec<f64>,
}

impl fmt::Debug for NumericProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericProfile")
            .field("dim", &self.dim)
            .field("support", &(self.t_min, self.t_max))
            .field("breakpoints", &self.breakpoints)
            .finish_non_exhaustive()
    }
}

impl NumericProfile {
    /// `breakpoints` are sorted, clipped to the support, and the support
    /// endpoints are added.
    pub fn new(dim: usize, support: (f64, f64), area: AreaFn, breakpoints: Vec<f64>) -> Result<Self> {
        let p = Self::new_unchecked(dim, support, area, breakpoints);
        let diags = p.diagnostics();
        into_result(p, diags)
    }

    pub fn new_unchecked(dim: usize, support: (f64, f64), area: AreaFn, breakpoints: Vec<f64>) -> Self {
        let (t_min, t_max) = support;
        let mut bp: Vec<f64> = breakpoints
            .into_iter()
            .filter(|&x| x > t_min && x < t_max)
            .collect();
        bp.push(t_min);
        bp.push(t_max);
        bp.sort_by(f64::total_cmp);
        bp.dedup();
        Self {
            dim,
            t_min,
            t_max,
            area,
            breakpoints: bp,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn t_min(&self) -> f64 {
        self.t_min
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn area_at(&self, t: f64) -> f64 {
        if t < self.t_min || t > self.t_max {
            0.0
        } else {
            (self.area)(t)
        }
    }

    pub fn radius_at(&self, t: f64) -> f64 {
        let a = self.area_at(t).max(0.0);
        (a / unit_ball_volume(self.dim - 1)).powf(1.0 / (self.dim as f64 - 1.0))
    }

    fn integrate(&self, from: f64, g: impl Fn(f64) -> f64) -> f64 {
        let a = from.max(self.t_min);
        quadrature::integrate_piecewise(
            |t| g(t) * (self.area)(t),
            a,
            self.t_max,
            &self.breakpoints,
            DEFAULT_TOL,
        )
    }

    pub fn volume(&self) -> f64 {
        self.integrate(self.t_min, |_| 1.0)
    }

    pub fn first_moment(&self) -> f64 {
        self.integrate(self.t_min, |t| t)
    }

    pub fn cut_volume(&self, t: f64) -> f64 {
        if t >= self.t_max {
            0.0
        } else {
            self.integrate(t, |_| 1.0)
        }
    }

    pub fn shifted(&self, dt: f64) -> Self {
        let inner = Arc::clone(&self.area);
        Self {
            dim: self.dim,
            t_min: self.t_min + dt,
            t_max: self.t_max + dt,
            area: Arc::new(move |t| inner(t - dt)),
            breakpoints: self.breakpoints.iter().map(|b| b + dt).collect(),
        }
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        check_factor(factor)?;
        let inner = Arc::clone(&self.area);
        let gain = factor.powi(self.dim as i32 - 1);
        Ok(Self {
            dim: self.dim,
            t_min: self.t_min * factor,
            t_max: self.t_max * factor,
            area: Arc::new(move |t| gain * inner(t / factor)),
            breakpoints: self.breakpoints.iter().map(|b| b * factor).collect(),
        })
    }

    pub fn reflected(&self) -> Self {
        let inner = Arc::clone(&self.area);
        Self {
            dim: self.dim,
            t_min: -self.t_max,
            t_max: -self.t_min,
            area: Arc::new(move |t| inner(-t)),
            breakpoints: self.breakpoints.iter().rev().map(|b| -b).collect(),
        }
    }

    pub fn diagnostics(&self) -> Vec<Diagnostic> {
        let mut diags = Vec::new();
        if self.dim < 2 {
            diags.push(Diagnostic::UnsupportedDimension { dim: self.dim });
            return diags;
        }
        if !(self.t_min.is_finite() && self.t_max.is_finite() && self.t_min < self.t_max) {
            diags.push(Diagnostic::EmptySupport {
                t_min: self.t_min,
                t_max: self.t_max,
            });
            return diags;
        }
        let n = NUMERIC_GRID;
        let width = self.t_max - self.t_min;
        for i in 0..n {
            let t = self.t_min + width * i as f64 / (n - 1) as f64;
            let a = (self.area)(t);
            if !(a >= 0.0) {
                diags.push(Diagnostic::NegativeArea { t, area: a });
                return diags;
            }
        }
        let root = 1.0 / (self.dim as f64 - 1.0);
        let violation = crate::measure::grid_concavity_violation(
            |t| (self.area)(t).max(0.0).powf(root),
            self.t_min,
            self.t_max,
            n,
        );
        let scale = (0..n)
            .map(|i| (self.area)(self.t_min + width * i as f64 / (n - 1) as f64).powf(root))
            .fold(1.0f64, f64::max);
        if violation > 1e-9 * scale {
            diags.push(Diagnostic::SampledNotConcave { violation });
        }
        if !(self.volume() > 0.0) {
            diags.push(Diagnostic::ZeroVolume);
        }
        diags
    }
}

// ---------------------------------------------------------------------------
// Body and cuts
// ---------------------------------------------------------------------------

/// Any supported convex body.
#[derive(Debug, Clone)]
pub enum Body {
    Polytope(Polytope),
    Profile(AnalyticProfile),
    Numeric(NumericProfile),
}

impl Body {
    pub fn dim(&self) -> usize {
        match self {
            Body::Polytope(p) => p.dim(),
            Body::Profile(p) => p.dim(),
            Body::Numeric(p) => p.dim(),
        }
    }

    /// Short human-readable descriptor used in reports.
    pub fn describe(&self) -> String {
        match self {
            Body::Polytope(p) => format!("polytope(dim={}, vertices={})", p.dim(), p.vertices().len()),
            Body::Profile(p) => format!("profile(dim={}, knots={})", p.dim(), p.knots().len()),
            Body::Numeric(p) => format!(
                "numeric-profile(dim={}, support=[{}, {}])",
                p.dim(),
                p.t_min(),
                p.t_max()
            ),
        }
    }
}

impl From<Polytope> for Body {
    fn from(p: Polytope) -> Self {
        Body::Polytope(p)
    }
}

impl From<AnalyticProfile> for Body {
    fn from(p: AnalyticProfile) -> Self {
        Body::Profile(p)
    }
}

impl From<NumericProfile> for Body {
    fn from(p: NumericProfile) -> Self {
        Body::Numeric(p)
    }
}

/// The pair `(ξ, α)` defining the cut at signed height `α · h_K(-ξ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CutSpec {
    direction: Direction,
    alpha: f64,
}

impl CutSpec {
    /// Requires `-1 < alpha < n` where `n` is the dimension of `direction`.
    pub fn new(direction: Direction, alpha: f64) -> Result<Self> {
        let n = direction.dim() as f64;
        if !(alpha > -1.0 && alpha < n) {
            return Err(Error::AlphaOutOfRange { alpha, lo: -1.0, hi: n });
        }
        Ok(Self { direction, alpha })
    }

    pub fn direction(&self) -> &Direction {
        &self.direction
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Translate by `vector`. Bodies of revolution accept only axial vectors
/// `(s, 0, ..., 0)`.
pub fn translate(body: &Body, vector: &[f64]) -> Result<Body> {
    if vector.len() != body.dim() {
        return Err(Error::DimensionMismatch {
            expected: body.dim(),
            found: vector.len(),
        });
    }
    match body {
        Body::Polytope(p) => Ok(Body::Polytope(p.translated(vector)?)),
        Body::Profile(_) | Body::Numeric(_) if vector[1..].iter().any(|&x| x != 0.0) => {
            Err(Error::NonAxialTranslation)
        }
        Body::Profile(p) => Ok(Body::Profile(p.shifted(vector[0]))),
        Body::Numeric(p) => Ok(Body::Numeric(p.shifted(vector[0]))),
    }
}

/// Dilate about the origin by `factor > 0`.
pub fn dilate(body: &Body, factor: f64) -> Result<Body> {
    match body {
        Body::Polytope(p) => Ok(Body::Polytope(p.scaled(factor)?)),
        Body::Profile(p) => Ok(Body::Profile(p.scaled(factor)?)),
        Body::Numeric(p) => Ok(Body::Numeric(p.scaled(factor)?)),
    }
}

/// Every violated invariant; empty iff the body is valid.
pub fn validate(body: &Body) -> Vec<Diagnostic> {
    match body {
        Body::Polytope(p) => polytope_diagnostics(p.dim, &p.vertices),
        Body::Profile(p) => p.diagnostics(),
        Body::Numeric(p) => p.diagnostics(),
    }
}

/// Invariant check for a raw vertex list, before a [`Polytope`] exists.
pub fn validate_vertices(dim: usize, vertices: &[Vec<f64>]) -> Vec<Diagnostic> {
    polytope_diagnostics(dim, vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn triangle() -> Polytope {
        Polytope::new(2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap()
    }

    fn cone3() -> AnalyticProfile {
        AnalyticProfile::new(3, vec![(0.0, 1.0), (1.0, 0.0)]).unwrap()
    }

    #[test]
    fn unit_ball_volumes() {
        assert_eq!(unit_ball_volume(0), 1.0);
        assert_eq!(unit_ball_volume(1), 2.0);
        assert!((unit_ball_volume(2) - PI).abs() < 1e-15);
        assert!((unit_ball_volume(3) - 4.0 * PI / 3.0).abs() < 1e-14);
        assert!((unit_ball_volume(4) - PI * PI / 2.0).abs() < 1e-14);
        assert!((unit_ball_volume(5) - 8.0 * PI * PI / 15.0).abs() < 1e-14);
    }

    #[test]
    fn direction_normalizes_and_rejects_zero() {
        let d = Direction::new(vec![3.0, 4.0]).unwrap();
        assert!((d.coords()[0] - 0.6).abs() < 1e-15);
        assert_eq!(Direction::new(vec![0.0, 0.0]), Err(Error::DegenerateDirection));
        assert!(Direction::new(vec![1.0]).is_err());
        assert_eq!(Direction::axis(3, 0).unwrap().axial_sign(), Some(1.0));
        assert_eq!(Direction::axis(3, 0).unwrap().neg().axial_sign(), Some(-1.0));
        assert_eq!(Direction::axis(3, 1).unwrap().axial_sign(), None);
    }

    #[test]
    fn translate_triangle() {
        let t = translate(&Body::Polytope(triangle()), &[1.0, 1.0]).unwrap();
        let Body::Polytope(p) = t else { panic!() };
        assert_eq!(p.vertices(), &[vec![1.0, 1.0], vec![2.0, 1.0], vec![1.0, 2.0]]);
    }

    #[test]
    fn translate_profile_axially() {
        let p = AnalyticProfile::new(2, vec![(0.0, 1.0), (1.0, 0.0)]).unwrap();
        let Body::Profile(q) = translate(&Body::Profile(p), &[-2.0 / 3.0, 0.0]).unwrap() else {
            panic!()
        };
        let expect = [(-2.0 / 3.0, 1.0), (1.0 / 3.0, 0.0)];
        for (k, e) in q.knots().iter().zip(expect) {
            assert!((k.0 - e.0).abs() < 1e-15 && k.1 == e.1);
        }
    }

    #[test]
    fn translate_by_zero_is_identity() {
        let Body::Polytope(p) = translate(&Body::Polytope(triangle()), &[0.0, 0.0]).unwrap() else {
            panic!()
        };
        assert_eq!(p, triangle());
    }

    #[test]
    fn translate_errors() {
        assert!(matches!(
            translate(&Body::Polytope(triangle()), &[1.0, 0.0, 0.0]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert_eq!(
            translate(&Body::Profile(cone3()), &[0.0, 1.0, 0.0]).unwrap_err(),
            Error::NonAxialTranslation
        );
    }

    #[test]
    fn dilate_square_and_cone() {
        let sq = Polytope::new(
            2,
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]],
        )
        .unwrap();
        let Body::Polytope(big) = dilate(&Body::Polytope(sq.clone()), 2.0).unwrap() else { panic!() };
        assert!((big.simplex_volume() - 4.0).abs() < 1e-14);
        let Body::Polytope(same) = dilate(&Body::Polytope(sq.clone()), 1.0).unwrap() else { panic!() };
        assert_eq!(same, sq);

        let half = cone3().scaled(0.5).unwrap();
        // ω ∫_0^{1/2} (1/2 - s)^2 ds = π/24.
        assert!((half.volume() - PI / 24.0).abs() < 1e-15);
        assert!(matches!(dilate(&Body::Profile(cone3()), 0.0), Err(Error::NonPositiveFactor(_))));
        assert!(matches!(dilate(&Body::Profile(cone3()), -1.0), Err(Error::NonPositiveFactor(_))));
    }

    #[test]
    fn validate_reports_non_concave_profile() {
        let p = AnalyticProfile::new_unchecked(3, vec![(0.0, 0.0), (0.5, 0.2), (1.0, 1.0)]);
        let d = validate(&Body::Profile(p));
        assert!(matches!(d.as_slice(), [Diagnostic::NotConcave { index: 1, .. }]));
    }

    #[test]
    fn validate_reports_collinear_polygon() {
        let d = validate_vertices(2, &[vec![0.0, 0.0], vec![1.0, 1.0], vec![2.0, 2.0]]);
        assert_eq!(d, vec![Diagnostic::NotFullDimensional { rank: 1, dim: 2 }]);
        assert!(Polytope::new(2, vec![vec![0.0, 0.0], vec![1.0, 1.0], vec![2.0, 2.0]]).is_err());
    }

    #[test]
    fn validate_other_profile_defects() {
        let p = AnalyticProfile::new_unchecked(3, vec![(0.0, 0.0), (1.0, 0.0)]);
        assert_eq!(p.diagnostics(), vec![Diagnostic::ZeroVolume]);
        let p = AnalyticProfile::new_unchecked(3, vec![(0.0, 1.0), (0.0, 1.0)]);
        assert!(matches!(p.diagnostics()[0], Diagnostic::KnotsNotIncreasing { index: 1 }));
        let p = AnalyticProfile::new_unchecked(3, vec![(0.0, 1.0), (0.5, 0.0), (1.0, 1.0)]);
        assert!(p.diagnostics().contains(&Diagnostic::ZeroInteriorRadius { index: 1 }));
        let p = AnalyticProfile::new_unchecked(3, vec![(0.0, -1.0), (1.0, 1.0)]);
        assert!(matches!(p.diagnostics()[0], Diagnostic::NegativeRadius { index: 0, .. }));
    }

    #[test]
    fn profile_closed_form_integrals() {
        let c = cone3();
        assert!((c.volume() - PI / 3.0).abs() < 1e-15);
        assert!((c.first_moment() / c.volume() - 0.25).abs() < 1e-15);
        assert!((c.area_at(0.5) - PI / 4.0).abs() < 1e-15);
        // ω ∫_{1/2}^1 (1-s)^2 ds = π/24.
        assert!((c.cut_volume(0.5) - PI / 24.0).abs() < 1e-15);
        assert_eq!(c.cut_volume(1.0), 0.0);
        assert!((c.cut_volume(-1.0) - PI / 3.0).abs() < 1e-15);
    }

    #[test]
    fn reflected_profile_mirrors() {
        let c = cone3();
        let r = c.reflected();
        assert_eq!(r.knots(), &[(-1.0, 0.0), (0.0, 1.0)]);
        assert!((r.first_moment() / r.volume() + 0.25).abs() < 1e-15);
    }

    #[test]
    fn numeric_profile_matches_analytic() {
        let c = cone3();
        let cc = c.clone();
        let num = NumericProfile::new(3, (0.0, 1.0), Arc::new(move |t| cc.area_at(t)), vec![]).unwrap();
        assert!((num.volume() - c.volume()).abs() < 1e-12);
        assert!((num.first_moment() - c.first_moment()).abs() < 1e-12);
        assert!((num.cut_volume(0.3) - c.cut_volume(0.3)).abs() < 1e-12);
        let s = num.shifted(1.0).scaled(2.0).unwrap().reflected();
        let c2 = c.shifted(1.0).scaled(2.0).unwrap().reflected();
        assert!((s.volume() - c2.volume()).abs() < 1e-11);
        assert!((s.cut_volume(-2.5) - c2.cut_volume(-2.5)).abs() < 1e-11);
    }

    #[test]
    fn numeric_profile_rejects_non_concave_area() {
        let bad = NumericProfile::new(3, (0.0, 1.0), Arc::new(|t: f64| t * t * t * t), vec![]);
        assert!(matches!(bad, Err(Error::InvalidBody(_))));
    }

    #[test]
    fn cut_spec_range() {
        let d = Direction::axis(2, 0).unwrap();
        assert!(CutSpec::new(d.clone(), -1.0).is_err());
        assert!(CutSpec::new(d.clone(), 2.0).is_err());
        assert!(CutSpec::new(d, 1.99).is_ok());
    }
}
