//! Univariate maximization: golden-section refinement of grid-bracketed peaks.

/// `1 / φ` where `φ` is the golden ratio.
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for a maximum of a unimodal `f` on `[a, b]`.
///
/// Stops when the bracket is narrower than `xtol`. Returns `(x, f(x))` for
/// the best point evaluated, which includes both endpoints.
pub fn golden_section_max<F>(f: F, a: f64, b: f64, xtol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let (mut lo, mut hi) = if a <= b { (a, b) } else { (b, a) };
    let mut best = (lo, f(lo));
    let fhi = f(hi);
    if fhi > best.1 {
        best = (hi, fhi);
    }

    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    // The bracket shrinks by a constant factor, so this terminates.
    for _ in 0..200 {
        if hi - lo <= xtol {
            break;
        }
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    for (x, fx) in [(x1, f1), (x2, f2)] {
        if fx > best.1 {
            best = (x, fx);
        }
    }
    let mid = 0.5 * (lo + hi);
    let fmid = f(mid);
    if fmid > best.1 {
        best = (mid, fmid);
    }
    best
}

/// A refined local maximum found by [`grid_global_max`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Peak {
    pub x: f64,
    pub value: f64,
}

/// Global maximization on `[a, b]`: scan `grid_points` uniform samples,
/// bracket every local maximum whose grid value is within `keep_within` of
/// the best grid value, and refine each with golden-section search.
///
/// Runs of equal values (plateaus) contribute one bracket at their left end.
/// Returns all refined peaks sorted by decreasing value; never empty.
pub fn grid_global_max<F>(
    f: F,
    a: f64,
    b: f64,
    grid_points: usize,
    xtol: f64,
    keep_within: f64,
) -> Vec<Peak>
where
    F: Fn(f64) -> f64,
{
    let n = grid_points.max(3);
    let step = (b - a) / (n - 1) as f64;
    let xs: Vec<f64> = (0..n)
        .map(|i| if i == n - 1 { b } else { a + step * i as f64 })
        .collect();
    let vs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let grid_best = vs.iter().copied().fold(f64::NEG_INFINITY, f64::max);

    let mut peaks = Vec::new();
    let mut i = 0;
    while i < n {
        // Extend over a plateau of equal values.
        let mut j = i;
        while j + 1 < n && vs[j + 1] == vs[i] {
            j += 1;
        }
        let left_ok = i == 0 || vs[i - 1] < vs[i];
        let right_ok = j == n - 1 || vs[j + 1] < vs[i];
        if left_ok && right_ok && vs[i] >= grid_best - keep_within {
            let lo = xs[i.saturating_sub(1)];
            let hi = xs[(j + 1).min(n - 1)];
            let (x, value) = golden_section_max(&f, lo, hi, xtol);
            // A plateau's leftmost grid point may beat the refined interior.
            let peak = if vs[i] >= value {
                Peak { x: xs[i], value: vs[i] }
            } else {
                Peak { x, value }
            };
            peaks.push(peak);
        }
        i = j + 1;
    }
    if peaks.is_empty() {
        let k = vs
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .map(|(k, _)| k)
            .unwrap_or(0);
        peaks.push(Peak { x: xs[k], value: vs[k] });
    }
    peaks.sort_by(|p, q| q.value.total_cmp(&p.value).then(p.x.total_cmp(&q.x)));
    peaks
}
