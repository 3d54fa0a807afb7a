//! Checking the inequalities on concrete bodies.
//!
//! Every check centers the body at its centroid, measures one quantity
//! along the requested direction and compares it with the applicable
//! bounds. The outcome is a [`VerifyReport`], whose `pass` flag always
//! equals `lower - tolerance ≤ measured ≤ upper + tolerance`, with missing
//! bounds treated as infinite.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bodies::{translate, Body, CutSpec, Direction, NUMERIC_GRID};
use crate::constants;
use crate::error::{Error, Result};
use crate::measure::{self, SectionCurve};
use crate::oracle::{self, McEstimate, RNG_NAME};

/// Default tolerance for exact backends.
pub const EXACT_TOL: f64 = 1e-9;

/// Standard errors allowed for Monte Carlo backends.
pub const MC_SIGMAS: f64 = 4.0;

/// Relative centering accuracy, `|⟨g, ξ⟩| ≤ CENTER_TOL · (h(ξ) + h(-ξ))`.
pub const CENTER_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    CutRatio,
    SectionRatio,
    SupportRatio,
    ConcavityA,
    ConcavityV,
    SymmetralConsistency,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Backend {
    Exact,
    MonteCarlo,
}

/// Where a measurement came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportContext {
    pub body: String,
    pub direction: Vec<f64>,
    pub alpha: Option<f64>,
    pub seed: Option<u64>,
    pub rng: Option<String>,
    /// `|⟨g, ξ⟩| / (h(ξ) + h(-ξ))` after centering.
    pub centering_residual: f64,
}

/// One measured quantity against its bounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub quantity: Quantity,
    pub measured: f64,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    pub tolerance: f64,
    pub backend: Backend,
    pub pass: bool,
    /// Whether `measured` meets a bound within `tolerance`.
    pub attains_bound: bool,
    pub context: ReportContext,
}

impl VerifyReport {
    pub fn new(
        quantity: Quantity,
        measured: f64,
        lower: Option<f64>,
        upper: Option<f64>,
        tolerance: f64,
        backend: Backend,
        context: ReportContext,
    ) -> Self {
        let above = lower.is_none_or(|l| measured >= l - tolerance);
        let below = upper.is_none_or(|u| measured <= u + tolerance);
        let near = |b: Option<f64>| b.is_some_and(|b| (measured - b).abs() <= tolerance);
        Self {
            quantity,
            measured,
            lower,
            upper,
            tolerance,
            backend,
            pass: above && below && measured.is_finite(),
            attains_bound: near(lower) || near(upper),
            context,
        }
    }

    /// Signed distance from `measured` to the nearest bound. Values in
    /// `[-tolerance, 0)` mean the bound is attained up to rounding.
    pub fn margin(&self) -> f64 {
        let lo = self.lower.map_or(f64::INFINITY, |l| self.measured - l);
        let hi = self.upper.map_or(f64::INFINITY, |u| u - self.measured);
        lo.min(hi)
    }
}

/// Translates `body` so that its centroid is at the origin.
pub fn center(body: &Body) -> Result<Body> {
    let g = measure::centroid(body);
    let shift: Vec<f64> = g.iter().map(|x| -x).collect();
    translate(body, &shift)
}

/// Centered section curve and its centering residual.
fn centered_curve(body: &Body, dir: &Direction) -> Result<(SectionCurve, f64)> {
    let curve = measure::section_curve(&center(body)?, dir)?;
    let width = curve.t_max() - curve.t_min();
    let residual = curve.centroid().abs() / width;
    Ok((curve, residual))
}

fn cut_height(curve: &SectionCurve, alpha: f64) -> f64 {
    alpha * -curve.t_min()
}

fn ratio_of(curve: &SectionCurve, alpha: f64) -> f64 {
    (curve.cut_volume(cut_height(curve, alpha)) / curve.volume()).clamp(0.0, 1.0)
}

fn section_ratio_of(curve: &SectionCurve, alpha: f64) -> f64 {
    let (_, max_area) = curve.max_section();
    (curve.area(cut_height(curve, alpha)) / max_area).clamp(0.0, 1.0)
}

/// `|K ∩ H_α⁺| / |K|` for `K` centered at its centroid.
pub fn cut_ratio(body: &Body, cut: &CutSpec) -> Result<f64> {
    check_cut_dim(body, cut)?;
    let (curve, _) = centered_curve(body, cut.direction())?;
    Ok(ratio_of(&curve, cut.alpha()))
}

/// `|K ∩ H_α| / max_t |K ∩ (ξ⊥ + tξ)|` for `K` centered at its centroid.
pub fn section_ratio(body: &Body, cut: &CutSpec) -> Result<f64> {
    check_cut_dim(body, cut)?;
    let (curve, _) = centered_curve(body, cut.direction())?;
    Ok(section_ratio_of(&curve, cut.alpha()))
}

fn check_cut_dim(body: &Body, cut: &CutSpec) -> Result<()> {
    if body.dim() != cut.direction().dim() {
        return Err(Error::DimensionMismatch {
            expected: body.dim(),
            found: cut.direction().dim(),
        });
    }
    Ok(())
}

fn context(body: &Body, dir: &Direction, alpha: Option<f64>, residual: f64) -> ReportContext {
    ReportContext {
        body: body.describe(),
        direction: dir.coords().to_vec(),
        alpha,
        seed: None,
        rng: None,
        centering_residual: residual,
    }
}

/// `C1(α, n) ≤ |K ∩ H_α⁺| / |K| ≤ C2(α, n)`.
pub fn check_theorem4(body: &Body, cut: &CutSpec, tol: f64) -> Result<VerifyReport> {
    check_cut_dim(body, cut)?;
    let (n, alpha) = (body.dim(), cut.alpha());
    let (curve, residual) = centered_curve(body, cut.direction())?;
    let c1 = constants::c1(alpha, n)?;
    let c2 = constants::c2(alpha, n, constants::DEFAULT_C2_TOL)?.value;
    Ok(VerifyReport::new(
        Quantity::CutRatio,
        ratio_of(&curve, alpha),
        Some(c1),
        Some(c2),
        tol,
        Backend::Exact,
        context(body, cut.direction(), Some(alpha), residual),
    ))
}

/// `|K ∩ H_α| ≥ D(α, n) · max_t |K ∩ (ξ⊥ + tξ)|`.
pub fn check_theorem5(body: &Body, cut: &CutSpec, tol: f64) -> Result<VerifyReport> {
    check_cut_dim(body, cut)?;
    let (n, alpha) = (body.dim(), cut.alpha());
    let (curve, residual) = centered_curve(body, cut.direction())?;
    Ok(VerifyReport::new(
        Quantity::SectionRatio,
        section_ratio_of(&curve, alpha),
        Some(constants::d_const(alpha, n)?),
        None,
        tol,
        Backend::Exact,
        context(body, cut.direction(), Some(alpha), residual),
    ))
}

/// The centroid cut: `(n/(n+1))^n ≤ |K ∩ ξ⁺| / |K| ≤ 1 - (n/(n+1))^n`.
pub fn check_grunbaum(body: &Body, dir: &Direction, tol: f64) -> Result<VerifyReport> {
    let (curve, residual) = centered_curve(body, dir)?;
    let g = constants::grunbaum_bound(body.dim());
    Ok(VerifyReport::new(
        Quantity::CutRatio,
        ratio_of(&curve, 0.0),
        Some(g),
        Some(1.0 - g),
        tol,
        Backend::Exact,
        context(body, dir, Some(0.0), residual),
    ))
}

/// `1/n ≤ h(-ξ) / h(ξ) ≤ n` for the centered body.
pub fn check_minkowski_radon(body: &Body, dir: &Direction, tol: f64) -> Result<VerifyReport> {
    let (curve, residual) = centered_curve(body, dir)?;
    let n = body.dim() as f64;
    Ok(VerifyReport::new(
        Quantity::SupportRatio,
        -curve.t_min() / curve.t_max(),
        Some(1.0 / n),
        Some(n),
        tol,
        Backend::Exact,
        context(body, dir, None, residual),
    ))
}

/// Which function [`check_concavity`] tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConcavityTarget {
    /// `A^(1/(n-1))`.
    Section,
    /// `V^(1/n)`.
    CutVolume,
}

/// Midpoint concavity on `grid_points` interior points of the support.
///
/// `measured` is the worst violation `(f(x₋) + f(x₊))/2 - f(x)`, which is
/// non-positive for a concave function; the upper bound is `0`.
pub fn check_concavity(
    body: &Body,
    dir: &Direction,
    which: ConcavityTarget,
    grid_points: usize,
    tol: f64,
) -> Result<VerifyReport> {
    let (curve, residual) = centered_curve(body, dir)?;
    let n = body.dim() as f64;
    let (lo, hi) = (curve.t_min(), curve.t_max());
    let (quantity, worst) = match which {
        ConcavityTarget::Section => (
            Quantity::ConcavityA,
            measure::grid_concavity_violation(|t| curve.area(t).powf(1.0 / (n - 1.0)), lo, hi, grid_points),
        ),
        ConcavityTarget::CutVolume => (
            Quantity::ConcavityV,
            measure::grid_concavity_violation(|t| curve.cut_volume(t).max(0.0).powf(1.0 / n), lo, hi, grid_points),
        ),
    };
    Ok(VerifyReport::new(
        quantity,
        worst,
        None,
        Some(0.0),
        tol,
        Backend::Exact,
        context(body, dir, None, residual),
    ))
}

/// Agreement between `K` and its Schwarz symmetral: the largest of the
/// relative volume difference and the differences of the cut and section
/// ratios at `α`.
pub fn check_symmetral(body: &Body, cut: &CutSpec, tol: f64) -> Result<VerifyReport> {
    check_cut_dim(body, cut)?;
    let dir = cut.direction();
    let alpha = cut.alpha();
    let (curve, residual) = centered_curve(body, dir)?;
    let sym = measure::schwarz_symmetral(body, dir)?;
    let axis = Direction::axis(body.dim(), 0)?;
    let (sym_curve, _) = centered_curve(&sym, &axis)?;
    let dv = (measure::volume(body) - measure::volume(&sym)).abs() / measure::volume(body);
    let dc = (ratio_of(&curve, alpha) - ratio_of(&sym_curve, alpha)).abs();
    let ds = (section_ratio_of(&curve, alpha) - section_ratio_of(&sym_curve, alpha)).abs();
    Ok(VerifyReport::new(
        Quantity::SymmetralConsistency,
        dv.max(dc).max(ds),
        None,
        Some(0.0),
        tol,
        Backend::Exact,
        context(body, dir, Some(alpha), residual),
    ))
}

/// Monte Carlo twin of [`check_theorem4`]: the cut-off fraction is
/// estimated as the share of sampled body points above the cut, and the
/// tolerance is [`MC_SIGMAS`] standard errors.
pub fn check_theorem4_mc(body: &Body, cut: &CutSpec, samples: u64, seed: u64) -> Result<VerifyReport> {
    check_cut_dim(body, cut)?;
    let (n, alpha) = (body.dim(), cut.alpha());
    let dir = cut.direction();
    let centered = center(body)?;
    let t = alpha * measure::support(&centered, &dir.neg())?;
    let est = oracle::sample(&centered, dir, t, samples, seed)?.cut_fraction(seed);
    let (_, residual) = centered_curve(body, dir)?;
    let mut ctx = context(body, dir, Some(alpha), residual);
    ctx.seed = Some(seed);
    ctx.rng = Some(RNG_NAME.to_string());
    Ok(VerifyReport::new(
        Quantity::CutRatio,
        est.value,
        Some(constants::c1(alpha, n)?),
        Some(constants::c2(alpha, n, constants::DEFAULT_C2_TOL)?.value),
        MC_SIGMAS * est.std_error,
        Backend::MonteCarlo,
        ctx,
    ))
}

/// An exact measurement and its Monte Carlo estimate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleComparison {
    pub quantity: String,
    pub exact: f64,
    pub estimate: McEstimate,
    pub within: bool,
}

/// Volume, `V(t)` and `⟨g, ξ⟩` computed exactly and by one Monte Carlo
/// pass; `within` is `|exact - estimate| ≤ 4σ`.
pub fn oracle_comparison(
    body: &Body,
    dir: &Direction,
    t: f64,
    samples: u64,
    seed: u64,
) -> Result<Vec<OracleComparison>> {
    let tally = oracle::sample(body, dir, t, samples, seed)?;
    let curve = measure::section_curve(body, dir)?;
    let rows = [
        ("volume", measure::volume(body), tally.volume(seed)),
        ("cut_volume", curve.cut_volume(t), tally.cut_volume(seed)),
        ("centroid", curve.centroid(), tally.centroid(seed)),
    ];
    Ok(rows
        .into_iter()
        .map(|(q, exact, estimate)| OracleComparison {
            quantity: q.to_string(),
            exact,
            estimate,
            within: estimate.agrees_with(exact, MC_SIGMAS),
        })
        .collect())
}

/// The checks run for a single body file: cut and section ratios at `α`,
/// the support ratio, both concavity checks, and optionally the Monte Carlo
/// twin of the cut ratio.
pub fn verify_body(body: &Body, cut: &CutSpec, tol: f64, mc_samples: u64, seed: u64) -> Result<Vec<VerifyReport>> {
    let dir = cut.direction();
    let mut out = vec![
        check_theorem4(body, cut, tol)?,
        check_theorem5(body, cut, tol)?,
        check_minkowski_radon(body, dir, tol)?,
        check_concavity(body, dir, ConcavityTarget::Section, NUMERIC_GRID, tol)?,
        check_concavity(body, dir, ConcavityTarget::CutVolume, NUMERIC_GRID, tol)?,
    ];
    if mc_samples > 0 {
        out.push(check_theorem4_mc(body, cut, mc_samples, seed)?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Fuzzing
// ---------------------------------------------------------------------------

/// Parameters of [`fuzz_suite`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub profile_dims: Vec<usize>,
    pub polytope_dims: Vec<usize>,
    pub profiles_per_dim: usize,
    pub polytopes_per_dim: usize,
    pub alphas_per_body: usize,
    /// Monte Carlo samples per polytope cut check; `0` disables them.
    pub mc_samples: u64,
    pub seed: u64,
    pub tol: f64,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            profile_dims: vec![2, 3, 4, 5],
            polytope_dims: vec![2, 3],
            profiles_per_dim: 25,
            polytopes_per_dim: 25,
            alphas_per_body: 3,
            mc_samples: 100_000,
            seed: 0x5EED,
            tol: EXACT_TOL,
        }
    }
}

impl FuzzConfig {
    /// No bodies at all.
    pub fn empty() -> Self {
        Self {
            profile_dims: Vec::new(),
            polytope_dims: Vec::new(),
            ..Self::default()
        }
    }
}

/// One generated body with its direction and cut levels.
#[derive(Debug, Clone)]
pub struct FuzzCase {
    pub id: String,
    pub seed: u64,
    pub body: Body,
    pub direction: Direction,
    pub alphas: Vec<f64>,
}

/// Margin keeping fuzzed `α` away from `-1` and `n`.
pub const ALPHA_EPS: f64 = 1e-3;

/// `count` values cycling through `(-1+ε, 0]`, `(0, 1/n]` and `(1/n, n-ε)`.
pub fn stratified_alphas(n: usize, count: usize, rng: &mut impl Rng) -> Vec<f64> {
    let nf = n as f64;
    let strata = [
        (-1.0 + ALPHA_EPS, 0.0),
        (0.0, 1.0 / nf),
        (1.0 / nf, nf - ALPHA_EPS),
    ];
    (0..count)
        .map(|j| {
            let (lo, hi) = strata[j % 3];
            // Map u ∈ [0, 1) onto the half-open stratum (lo, hi].
            let u: f64 = rng.random();
            let a = hi - (hi - lo) * u;
            if j % 3 == 2 { a.min(hi) } else { a }
        })
        .map(|a: f64| a.clamp(-1.0 + ALPHA_EPS, nf - ALPHA_EPS))
        .collect()
}

/// The bodies exercised by [`fuzz_suite`], in a fixed order.
pub fn fuzz_corpus(config: &FuzzConfig) -> Result<Vec<FuzzCase>> {
    let mut cases = Vec::new();
    for &n in &config.profile_dims {
        for i in 0..config.profiles_per_dim {
            let seed = oracle::mix_seed(config.seed, (1 << 40) | ((n as u64) << 32) | i as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let knots = rng.random_range(2..=8);
            let body = Body::Profile(oracle::random_profile(n, knots, oracle::mix_seed(seed, 1))?);
            let axis = Direction::axis(n, 0)?;
            let direction = if rng.random_bool(0.5) { axis } else { axis.neg() };
            let alphas = stratified_alphas(n, config.alphas_per_body, &mut rng);
            cases.push(FuzzCase {
                id: format!("profile-n{n}-{i:04}"),
                seed,
                body,
                direction,
                alphas,
            });
        }
    }
    for &n in &config.polytope_dims {
        for i in 0..config.polytopes_per_dim {
            let seed = oracle::mix_seed(config.seed, (2 << 40) | ((n as u64) << 32) | i as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let points = rng.random_range(n + 1..=n + 10);
            let body = Body::Polytope(oracle::random_polytope(n, points, oracle::mix_seed(seed, 1))?);
            let direction = oracle::random_direction(n, oracle::mix_seed(seed, 2))?;
            let alphas = stratified_alphas(n, config.alphas_per_body, &mut rng);
            cases.push(FuzzCase {
                id: format!("polytope-n{n}-{i:04}"),
                seed,
                body,
                direction,
                alphas,
            });
        }
    }
    Ok(cases)
}

/// Pass counts and worst margin for one `(quantity, backend)` pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuantitySummary {
    pub quantity: Quantity,
    pub backend: Backend,
    pub total: usize,
    pub passed: usize,
    pub worst_margin: f64,
}

/// All reports of a fuzz run, sorted by context key, plus per-quantity
/// summaries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub reports: Vec<VerifyReport>,
    pub summaries: Vec<QuantitySummary>,
}

impl FuzzReport {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    /// Failing reports; their context carries the reproduction seed.
    pub fn failures(&self) -> Vec<&VerifyReport> {
        self.reports.iter().filter(|r| !r.pass).collect()
    }
}

fn case_reports(case: &FuzzCase, config: &FuzzConfig) -> Result<Vec<VerifyReport>> {
    let tol = config.tol;
    let dir = &case.direction;
    let mut out = vec![
        check_grunbaum(&case.body, dir, tol)?,
        check_minkowski_radon(&case.body, dir, tol)?,
        check_concavity(&case.body, dir, ConcavityTarget::Section, NUMERIC_GRID, tol)?,
        check_concavity(&case.body, dir, ConcavityTarget::CutVolume, NUMERIC_GRID, tol)?,
    ];
    for (j, &alpha) in case.alphas.iter().enumerate() {
        let cut = CutSpec::new(dir.clone(), alpha)?;
        out.push(check_theorem4(&case.body, &cut, tol)?);
        out.push(check_theorem5(&case.body, &cut, tol)?);
        out.push(check_symmetral(&case.body, &cut, tol)?);
        if config.mc_samples > 0 && matches!(case.body, Body::Polytope(_)) {
            let seed = oracle::mix_seed(case.seed, 100 + j as u64);
            out.push(check_theorem4_mc(&case.body, &cut, config.mc_samples, seed)?);
        }
    }
    for r in &mut out {
        r.context.body = format!("{} {}", case.id, r.context.body);
        r.context.seed.get_or_insert(case.seed);
    }
    Ok(out)
}

/// Runs every check over the generated corpus.
///
/// Cases are evaluated in parallel; the result is sorted by
/// `(body, quantity, backend, alpha)` and does not depend on scheduling.
pub fn fuzz_suite(config: &FuzzConfig) -> Result<FuzzReport> {
    let cases = fuzz_corpus(config)?;
    let per_case: Vec<Result<Vec<VerifyReport>>> =
        cases.par_iter().map(|c| case_reports(c, config)).collect();
    let mut reports = Vec::new();
    for r in per_case {
        reports.extend(r?);
    }
    reports.sort_by(|a, b| {
        a.context
            .body
            .cmp(&b.context.body)
            .then(a.quantity.cmp(&b.quantity))
            .then(a.backend.cmp(&b.backend))
            .then(
                a.context
                    .alpha
                    .unwrap_or(f64::NEG_INFINITY)
                    .total_cmp(&b.context.alpha.unwrap_or(f64::NEG_INFINITY)),
            )
    });
    let mut groups: BTreeMap<(Quantity, Backend), QuantitySummary> = BTreeMap::new();
    for r in &reports {
        let s = groups.entry((r.quantity, r.backend)).or_insert(QuantitySummary {
            quantity: r.quantity,
            backend: r.backend,
            total: 0,
            passed: 0,
            worst_margin: f64::INFINITY,
        });
        s.total += 1;
        s.passed += usize::from(r.pass);
        s.worst_margin = s.worst_margin.min(r.margin());
    }
    Ok(FuzzReport {
        reports,
        summaries: groups.into_values().collect(),
    })
}
