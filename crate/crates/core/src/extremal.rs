//! Bodies attaining the sharp constants.
//!
//! Every constructor returns a body of revolution about `e_1`. The
//! families are first laid out on heights `[0, 1]` (except the cones, whose
//! knots are already centered) and then translated so the centroid sits at
//! the origin. Using round sections loses nothing: all the ratios involved
//! only see section areas.

use crate::bodies::{unit_ball_volume, AnalyticProfile};
use crate::constants;
use crate::error::{Error, Result};

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidDimension(n))
    } else {
        Ok(())
    }
}

/// Translates a profile along its axis so that its centroid is at `0`.
pub fn center_profile(p: &AnalyticProfile) -> AnalyticProfile {
    p.shifted(-p.first_moment() / p.volume())
}

/// `conv(-ξ/(n+1) + B, n ξ/(n+1))`: base below, apex above, centroid at 0.
pub fn grunbaum_cone(n: usize) -> Result<AnalyticProfile> {
    check_n(n)?;
    let nf = n as f64;
    AnalyticProfile::new(n, vec![(-1.0 / (nf + 1.0), 1.0), (nf / (nf + 1.0), 0.0)])
}

/// `conv(-n ξ/(n+1), ξ/(n+1) + B)`: apex below, base above, centroid at 0.
pub fn reflected_grunbaum_cone(n: usize) -> Result<AnalyticProfile> {
    check_n(n)?;
    let nf = n as f64;
    AnalyticProfile::new(n, vec![(-nf / (nf + 1.0), 0.0), (1.0 / (nf + 1.0), 1.0)])
}

/// Frustum with unit bottom radius at height 0 and radius `lambda` at
/// height 1. Not centered.
pub fn truncated_cone(lambda: f64, n: usize) -> Result<AnalyticProfile> {
    check_n(n)?;
    if !(lambda >= 0.0 && lambda.is_finite()) {
        return Err(Error::OutOfRange {
            name: "lambda",
            value: lambda,
            expected: "finite lambda >= 0",
        });
    }
    AnalyticProfile::new(n, vec![(0.0, 1.0), (1.0, lambda)])
}

/// Radius whose `(n-1)`-ball has measure `n`.
fn unit_volume_base_radius(n: usize) -> f64 {
    (n as f64 / unit_ball_volume(n - 1)).powf(1.0 / (n as f64 - 1.0))
}

/// Two cones on `[0, β]` and `[β, 1]` sharing a base of measure `n` at
/// height `β`, so the total volume is `1`. Not centered.
pub fn double_cone(beta: f64, n: usize) -> Result<AnalyticProfile> {
    check_n(n)?;
    if !(0.0..1.0).contains(&beta) {
        return Err(Error::OutOfRange {
            name: "beta",
            value: beta,
            expected: "0 <= beta < 1",
        });
    }
    let r = unit_volume_base_radius(n);
    let knots = if beta == 0.0 {
        vec![(0.0, r), (1.0, 0.0)]
    } else {
        vec![(0.0, 0.0), (beta, r), (1.0, 0.0)]
    };
    AnalyticProfile::new(n, knots)
}

/// Centered body with `|K ∩ H_α⁺| / |K| = C1(α, n)` for `α < 1/n`.
pub fn lower_extremizer(alpha: f64, n: usize) -> Result<AnalyticProfile> {
    check_n(n)?;
    let nf = n as f64;
    if !(alpha > -1.0 && alpha < 1.0 / nf) {
        return Err(Error::AlphaOutOfRange { alpha, lo: -1.0, hi: 1.0 / nf });
    }
    if alpha <= 0.0 {
        return grunbaum_cone(n);
    }
    Ok(center_profile(&double_cone(constants::beta0(alpha, n)?, n)?))
}

/// Centered body with `|K ∩ H_α⁺| / |K| = C2(α, n)`.
///
/// For `α > 0` this is the truncated cone at the numeric maximizer of `φ`,
/// scaled so that its larger end radius is `1`.
pub fn upper_extremizer(alpha: f64, n: usize, tol: f64) -> Result<AnalyticProfile> {
    check_n(n)?;
    if alpha <= 0.0 {
        constants::c1(alpha, n)?;
        return reflected_grunbaum_cone(n);
    }
    let s = constants::c2(alpha, n, tol)?.argmax_s;
    let big = s.max(1.0 - s);
    let p = AnalyticProfile::new(n, vec![(0.0, (1.0 - s) / big), (1.0, s / big)])?;
    Ok(center_profile(&p))
}

/// Centered cone with `|K ∩ H_α| / max section = D(α, n)` for `α ≤ 1/n`:
/// base on the `ξ⁺` side for `α ≤ 0`, on the `ξ⁻` side otherwise.
pub fn theorem5_equality_cone(alpha: f64, n: usize) -> Result<AnalyticProfile> {
    check_n(n)?;
    let nf = n as f64;
    if !(alpha > -1.0 && alpha <= 1.0 / nf) {
        return Err(Error::AlphaOutOfRange { alpha, lo: -1.0, hi: 1.0 / nf });
    }
    if alpha <= 0.0 {
        reflected_grunbaum_cone(n)
    } else {
        grunbaum_cone(n)
    }
}
