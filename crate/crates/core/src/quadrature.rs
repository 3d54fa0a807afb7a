//! Adaptive Simpson quadrature for piecewise smooth integrands.
//!
//! The integrand is split at caller-supplied breakpoints, where it may lose
//! smoothness, and each smooth piece is refined independently. The absolute
//! tolerance is shared among pieces in proportion to their width.

/// Default absolute tolerance used by the measurement routines.
pub const DEFAULT_TOL: f64 = 1e-12;

const MAX_DEPTH: u32 = 48;

/// Integrate `f` over `[a, b]` with adaptive Simpson, splitting at every
/// breakpoint strictly inside the interval.
pub fn integrate_piecewise<F>(f: F, a: f64, b: f64, breakpoints: &[f64], tol: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    if !(b > a) {
        return 0.0;
    }
    let mut nodes = Vec::with_capacity(breakpoints.len() + 2);
    nodes.push(a);
    let mut inner: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|&x| x > a && x < b)
        .collect();
    inner.sort_by(f64::total_cmp);
    nodes.extend(inner);
    nodes.push(b);

    let width = b - a;
    nodes
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| adaptive_simpson(&f, w[0], w[1], tol * (w[1] - w[0]) / width))
        .sum()
}

/// Integrate a smooth `f` over `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F>(f: &F, a: f64, b: f64, tol: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    if !(b > a) {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    refine(f, a, b, fa, fm, fb, whole, tol.max(f64::MIN_POSITIVE), MAX_DEPTH)
}

#[inline]
fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn refine<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64
where
    F: Fn(f64) -> f64,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol || m <= a || m >= b {
        // Richardson extrapolation of the two-level estimate.
        return left + right + delta / 15.0;
    }
    refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}
