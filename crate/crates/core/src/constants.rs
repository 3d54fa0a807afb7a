//! The sharp constants `C1`, `C2`, `D` and their auxiliary functions.
//!
//! The upper constant for `α > 0` is `c(α, n) = sup φ(z)`, where `φ(z)` is
//! the fraction of a truncated cone cut off by its `α`-hyperplane and `z`
//! ranges over `(-∞, -1] ∪ [0, ∞)`. A truncated cone on heights `[0, 1]`
//! with radius `|z| → |z + 1|` is a cone at `z = 0` and `z = -1` and a
//! cylinder as `|z| → ∞`.
//!
//! Both `G_L` and `φ` are evaluated in the compact parameter
//! `s = |z + 1| / (|z| + |z + 1|) ∈ [0, 1]`, i.e. with end radii `1 - s` and
//! `s`. In that form every integral is a sum of non-negative Bernstein
//! terms, so there is no cancellation anywhere on the domain, including
//! near the cylinder `s = 1/2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::optimize;

/// Uniform grid on `s ∈ [0, 1]` scanned before refinement.
pub const C2_GRID: usize = 4097;

/// Argument tolerance for the golden-section refinement of `sup φ`.
pub const C2_XTOL: f64 = 1e-12;

/// Default value tolerance for [`c2`].
pub const DEFAULT_C2_TOL: f64 = 1e-9;

fn check(alpha: f64, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let hi = n as f64;
    if !(alpha > -1.0 && alpha < hi) {
        return Err(Error::AlphaOutOfRange { alpha, lo: -1.0, hi });
    }
    Ok(())
}

/// `(n/(n+1))^n`, Grünbaum's lower bound at the centroid.
pub fn grunbaum_bound(n: usize) -> f64 {
    let n = n as f64;
    (n / (n + 1.0)).powf(n)
}

/// `(n/(n+1))^(n-1)`, the centroid-section bound relative to the maximal
/// section.
pub fn makai_martini_bound(n: usize) -> f64 {
    let n = n as f64;
    (n / (n + 1.0)).powf(n - 1.0)
}

/// Sharp lower bound `C1(α, n)` on `|K ∩ H_α⁺| / |K|`.
pub fn c1(alpha: f64, n: usize) -> Result<f64> {
    check(alpha, n)?;
    let nf = n as f64;
    Ok(if alpha <= 0.0 {
        ((nf - alpha) / (nf + 1.0)).powi(n as i32)
    } else if alpha < 1.0 / nf {
        (nf / (nf + 1.0)).powi(n as i32) * (alpha + 1.0).powi(n as i32 - 1) * (1.0 - alpha * nf)
    } else {
        0.0
    })
}

/// Sharp lower bound `D(α, n)` on `|K ∩ H_α| / max_t |K ∩ (ξ⊥ + tξ)|`.
pub fn d_const(alpha: f64, n: usize) -> Result<f64> {
    check(alpha, n)?;
    let nf = n as f64;
    let m = n as i32 - 1;
    Ok(if alpha <= 0.0 {
        (nf * (alpha + 1.0) / (nf + 1.0)).powi(m)
    } else if alpha <= 1.0 / nf {
        ((nf - alpha) / (nf + 1.0)).powi(m)
    } else {
        0.0
    })
}

/// The minimizing double-cone apex split `β₀ = (n+1)α / (α+1)`.
pub fn beta0(alpha: f64, n: usize) -> Result<f64> {
    check(alpha, n)?;
    let nf = n as f64;
    if !(alpha > 0.0 && alpha < 1.0 / nf) {
        return Err(Error::OutOfRange {
            name: "alpha",
            value: alpha,
            expected: "0 < alpha < 1/n",
        });
    }
    Ok((nf + 1.0) * alpha / (alpha + 1.0))
}

/// Cut-off fraction `ψ(β)` of the unit-volume double cone with common base
/// at height `β`.
pub fn psi(beta: f64, alpha: f64, n: usize) -> Result<f64> {
    check(alpha, n)?;
    let nf = n as f64;
    if !(alpha > 0.0 && alpha < 1.0 / nf) {
        return Err(Error::OutOfRange {
            name: "alpha",
            value: alpha,
            expected: "0 < alpha < 1/n",
        });
    }
    if !(0.0..1.0).contains(&beta) {
        return Err(Error::OutOfRange {
            name: "beta",
            value: beta,
            expected: "0 <= beta < 1",
        });
    }
    let g = (alpha + 1.0) * (beta * (nf - 1.0) + 1.0) / (nf + 1.0);
    let split = (alpha + 1.0) / (2.0 - (nf - 1.0) * alpha);
    let m = n as i32 - 1;
    Ok(if beta <= split {
        (1.0 - g).powi(n as i32) / (1.0 - beta).powi(m)
    } else {
        1.0 - g.powi(n as i32) / beta.powi(m)
    })
}

/// `s` for a given `z`; rejects the gap `(-1, 0)`.
pub fn s_of_z(z: f64) -> Result<f64> {
    if z.is_nan() || (z > -1.0 && z < 0.0) {
        return Err(Error::ForbiddenZ(z));
    }
    if z.is_infinite() {
        return Ok(0.5);
    }
    let (r0, r1) = (z.abs(), (z + 1.0).abs());
    Ok(r1 / (r0 + r1))
}

/// `z = (1 - s) / (2s - 1)`; infinite at the cylinder `s = 1/2`.
pub fn z_of_s(s: f64) -> f64 {
    if s == 0.5 {
        f64::INFINITY
    } else {
        (1.0 - s) / (2.0 * s - 1.0)
    }
}

/// Homothety ratio `λ = s / (1 - s) = 1 + 1/z` of the top to the bottom
/// radius.
pub fn lambda_of_s(s: f64) -> f64 {
    if s >= 1.0 {
        f64::INFINITY
    } else {
        s / (1.0 - s)
    }
}

/// `Σ_k r0^(m-k) r1^k` and `Σ_k (k+1) r0^(m-k) r1^k` for `m = n - 1`.
fn bernstein_sums(r0: f64, r1: f64, n: usize) -> (f64, f64) {
    let m = n - 1;
    let mut p0 = vec![1.0; m + 1];
    for k in 1..=m {
        p0[k] = p0[k - 1] * r0;
    }
    let (mut plain, mut weighted, mut p1) = (0.0, 0.0, 1.0);
    for k in 0..=m {
        let term = p0[m - k] * p1;
        plain += term;
        weighted += (k + 1) as f64 * term;
        p1 *= r1;
    }
    (plain, weighted)
}

/// `G_L` as a function of `s`.
pub fn g_sub_l_s(s: f64, alpha: f64, n: usize) -> f64 {
    let (plain, weighted) = bernstein_sums(1.0 - s, s, n);
    (alpha + 1.0) * weighted / ((n as f64 + 1.0) * plain)
}

/// `φ` as a function of `s`, clamped to `1` when `G_L ≤ 0` and to `0` when
/// `G_L ≥ 1`.
pub fn phi_s(s: f64, alpha: f64, n: usize) -> f64 {
    let (r0, r1) = (1.0 - s, s);
    let (plain, weighted) = bernstein_sums(r0, r1, n);
    let g = (alpha + 1.0) * weighted / ((n as f64 + 1.0) * plain);
    if g >= 1.0 {
        return 0.0;
    }
    if g <= 0.0 {
        return 1.0;
    }
    let rg = r0 + (r1 - r0) * g;
    let (upper, _) = bernstein_sums(rg, r1, n);
    ((1.0 - g) * upper / plain).clamp(0.0, 1.0)
}

/// Scaled centroid height `G_L` of the truncated cone with parameter `z`.
pub fn g_sub_l(z: f64, alpha: f64, n: usize) -> Result<f64> {
    check(alpha, n)?;
    Ok(g_sub_l_s(s_of_z(z)?, alpha, n))
}

/// Cut-off fraction `φ(z)` of the truncated cone with parameter `z`.
pub fn phi(z: f64, alpha: f64, n: usize) -> Result<f64> {
    check(alpha, n)?;
    Ok(phi_s(s_of_z(z)?, alpha, n))
}

/// How a [`C2Result`] value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum C2Method {
    ClosedFormNegAlpha,
    ClosedFormN2,
    NumericSup,
}

impl C2Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::ClosedFormNegAlpha => "closed_form_neg_alpha",
            Self::ClosedFormN2 => "closed_form_n2",
            Self::NumericSup => "numeric_sup",
        }
    }
}

/// The upper constant together with the truncated cone that attains it.
#[derive(Debug, Clone, PartialEq)]
pub struct C2Result {
    pub value: f64,
    /// `z₀`; `0` for the cone with apex at the bottom.
    pub argmax_z: f64,
    /// `λ₀ = 1 + 1/z₀`; `+∞` for the cone with apex at the bottom.
    pub argmax_lambda: f64,
    pub argmax_s: f64,
    pub method: C2Method,
    /// `λ` of every maximizer whose value is within `tol` of `value`.
    pub near_optimal_lambdas: Vec<f64>,
}

fn from_s(value: f64, s: f64, method: C2Method, near: Vec<f64>) -> C2Result {
    C2Result {
        value,
        argmax_z: z_of_s(s),
        argmax_lambda: lambda_of_s(s),
        argmax_s: s,
        method,
        near_optimal_lambdas: near,
    }
}

/// `sup φ` over the compactified domain, without any closed-form shortcut.
///
/// Scans [`C2_GRID`] points in `s`, refines every competitive local
/// maximum by golden-section search to [`C2_XTOL`], and keeps the best.
pub fn c2_numeric(alpha: f64, n: usize, tol: f64) -> Result<C2Result> {
    check(alpha, n)?;
    let peaks = optimize::grid_global_max(|s| phi_s(s, alpha, n), 0.0, 1.0, C2_GRID, C2_XTOL, 1e-4);
    let best = peaks[0];
    let mut near: Vec<f64> = peaks
        .iter()
        .filter(|p| p.value >= best.value - tol)
        .map(|p| lambda_of_s(p.x))
        .collect();
    near.sort_by(f64::total_cmp);
    Ok(from_s(best.value, best.x, C2Method::NumericSup, near))
}

/// Sharp upper bound `C2(α, n)` on `|K ∩ H_α⁺| / |K|`.
///
/// For `α ≤ 0` this is `1 - (n(α+1)/(n+1))^n`, attained by the cone with
/// apex at the bottom. For `α > 0` it is the numeric supremum of `φ`; when
/// `n = 2` the value is the closed form and the numeric search only supplies
/// the maximizer.
pub fn c2(alpha: f64, n: usize, tol: f64) -> Result<C2Result> {
    check(alpha, n)?;
    if !(tol > 0.0) {
        return Err(Error::OutOfRange {
            name: "tol",
            value: tol,
            expected: "tol > 0",
        });
    }
    let nf = n as f64;
    if alpha <= 0.0 {
        let value = 1.0 - (nf * (alpha + 1.0) / (nf + 1.0)).powi(n as i32);
        return Ok(from_s(value, 1.0, C2Method::ClosedFormNegAlpha, Vec::new()));
    }
    let mut r = c2_numeric(alpha, n, tol)?;
    if n == 2 {
        r.value = c2_closed_n2(alpha)?;
        r.method = C2Method::ClosedFormN2;
    }
    Ok(r)
}

/// `c(α, 2)`: `(5 - 3α)/(9(α+1))` on `(0, 1)` and `(2 - α)²/9` on `[1, 2)`.
pub fn c2_closed_n2(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::AlphaOutOfRange { alpha, lo: 0.0, hi: 2.0 });
    }
    Ok(if alpha < 1.0 {
        (5.0 - 3.0 * alpha) / (9.0 * (alpha + 1.0))
    } else {
        (2.0 - alpha).powi(2) / 9.0
    })
}

/// All three constants at one `(α, n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsTriple {
    pub c1: f64,
    pub c2: C2Result,
    pub d: f64,
}

pub fn bounds(alpha: f64, n: usize, tol: f64) -> Result<BoundsTriple> {
    Ok(BoundsTriple {
        c1: c1(alpha, n)?,
        c2: c2(alpha, n, tol)?,
        d: d_const(alpha, n)?,
    })
}
