//! Executable checks of the qualitative theory against solver output.
//!
//! Each check consumes a finished [`RunHistory`] and produces a
//! [`CheckRecord`] with a measured margin or residual:
//!
//! * `check_lemma31` — positivity, spatial monotonicity, and positivity of
//!   the discrete Caputo derivative at every node and accepted step
//!   (hypotheses: u0' >= 0 and u0'' >= 0);
//! * `check_global_existence` — for p <= 1 the solution is dominated by the
//!   upper-solution envelope `C E_{a,1}(K t^a) e^{L x^2}` with K = 4L^2+2L,
//!   and the envelope's boundary admissibility inequality holds;
//! * `check_mass_inequality` — for p > 1 the discrete Caputo derivative of
//!   the mass m(t) = integral of u dominates m^p (up to slack), and the
//!   identity against u(1,t)^p is reported as a residual;
//! * `check_bound_ordering` — a blow-up run crosses the threshold no later
//!   (up to slack) than both the scalar comparison solve with n0 = m(0) and
//!   the closed-form fractional bound time;
//! * `run_full_suite` — the canonical alpha x p grid, asserting the
//!   dichotomy: blow-up verdict exactly when p > 1.
//!
//! All comparison tolerances are named constants surfaced in the report
//! header; checks are pure functions of (history, config), so reruns yield
//! identical records.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
// the Float trait supplies f64 math in no_std builds; test builds resolve
// the inherent std methods instead and see it as unused
#[allow(unused_imports)]
use num_traits::Float;
use serde::Serialize;

use crate::blowup::{BlowUpReport, BlowUpVerdict};
use crate::fracode::{fractional_bound_time, l1_weights_raw, solve_fode_blowup, FodeConfig};
use crate::pdesolver::{
    build_quadratic_profile, localize_blowup, mass, run, validate_profile, InitialCondition,
    PdeError, RunHistory, SolverConfig, DEFAULT_X_CUT,
};
use crate::specfun::{mittag_leffler, MittagLefflerQuery, SpecFunError};

/// Mass inequality: discrete-Caputo(m) >= m^p within this relative slack.
pub const MASS_INEQUALITY_SLACK: f64 = 0.05;
/// Crossing-time ordering slack against the bound and the scalar solve.
pub const BOUND_ORDERING_SLACK: f64 = 0.02;
/// Pointwise envelope domination tolerance, relative to the envelope.
pub const ENVELOPE_REL_TOL: f64 = 1e-9;
/// Spatial monotonicity rounding tolerance, times the per-step maximum.
pub const SPATIAL_MONOTONICITY_TOL: f64 = 1e-12;
/// Discrete Caputo sign tolerance, times max(1, per-step maximum).
pub const CAPUTO_SIGN_TOL: f64 = 1e-7;
/// Interior supremum must stay below this fraction of the threshold.
pub const INTERIOR_SUP_FRACTION: f64 = 0.01;

/// Errors from the verification harness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    /// The check does not apply to this configuration (e.g. p > 1 for the
    /// global-existence envelope).
    NotApplicable,
    /// The run's initial profile lacks a required hypothesis.
    HypothesisNotMet,
    Solver(PdeError),
    SpecFun(SpecFunError),
}

impl core::fmt::Display for VerifyError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Self::NotApplicable => write!(f, "check not applicable to this configuration"),
            Self::HypothesisNotMet => {
                write!(f, "initial profile lacks a required hypothesis (u0' >= 0, u0'' >= 0)")
            }
            Self::Solver(e) => write!(f, "solver error: {e}"),
            Self::SpecFun(e) => write!(f, "special function error: {e}"),
        }
    }
}

impl core::error::Error for VerifyError {}

impl From<PdeError> for VerifyError {
    fn from(e: PdeError) -> Self {
        VerifyError::Solver(e)
    }
}

impl From<SpecFunError> for VerifyError {
    fn from(e: SpecFunError) -> Self {
        VerifyError::SpecFun(e)
    }
}

/// Parameters of the upper-solution envelope v(x,t) = C E_{a,1}(K t^a) e^{L x^2}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UpperSolutionParams {
    pub c: f64,
    pub l: f64,
    /// Derived rate K = 4 L^2 + 2 L (never set independently).
    pub k: f64,
    pub alpha: f64,
}

impl UpperSolutionParams {
    /// Builds the parameter triple; K is always computed from L.
    pub fn new(c: f64, l: f64, alpha: f64) -> Result<Self, VerifyError> {
        if !(c > 0.0 && l > 0.0 && alpha > 0.0 && alpha <= 1.0) {
            return Err(VerifyError::Solver(PdeError::Domain(
                "envelope needs C > 0, L > 0, alpha in (0,1]",
            )));
        }
        Ok(UpperSolutionParams {
            c,
            l,
            k: 4.0 * l * l + 2.0 * l,
            alpha,
        })
    }
}

/// Envelope value v(x, t) = C E_{alpha,1}(K t^alpha) e^{L x^2}.
pub fn upper_solution_envelope(
    params: &UpperSolutionParams,
    x: f64,
    t: f64,
) -> Result<f64, SpecFunError> {
    let z = params.k * t.powf(params.alpha);
    let e = mittag_leffler(MittagLefflerQuery::new(params.alpha, 1.0, z)?)?;
    Ok(params.c * e * (params.l * x * x).exp())
}

/// One named check with its measured margin or residual.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    /// Stable identifier, e.g. "positivity" or "mass-inequality".
    pub name: String,
    /// What the check asserts, in words.
    pub property: String,
    /// Fingerprint of the run the check consumed.
    pub config: String,
    pub passed: bool,
    /// Worst-case slack to the asserted inequality (sign convention: >= 0
    /// passes), when the check is inequality-shaped.
    pub margin: Option<f64>,
    /// Measured residual, when the check is identity-shaped.
    pub residual: Option<f64>,
    pub detail: Option<String>,
    /// Informational records are reported but never gate pass/fail.
    pub informational: bool,
}

impl CheckRecord {
    fn new(name: &str, property: &str, config: &str) -> Self {
        CheckRecord {
            name: name.to_string(),
            property: property.to_string(),
            config: config.to_string(),
            passed: false,
            margin: None,
            residual: None,
            detail: None,
            informational: false,
        }
    }
}

fn fingerprint(cfg: &SolverConfig) -> String {
    format!(
        "alpha={},p={},nx={},dt0={},cap={}",
        cfg.alpha, cfg.p, cfg.mesh.nx, cfg.dt0, cfg.growth_cap
    )
}

/// Discrete Caputo value of node series i at step n, using the L1 weights
/// for a < 1 and the backward difference at a = 1.
fn discrete_caputo_snapshot(
    alpha: f64,
    times: &[f64],
    history: &RunHistory,
    weights: &[f64],
    node: usize,
    n: usize,
) -> f64 {
    if alpha == 1.0 {
        let dt = times[n] - times[n - 1];
        (history.snapshot(n)[node] - history.snapshot(n - 1)[node]) / dt
    } else {
        weights
            .iter()
            .enumerate()
            .map(|(j, wj)| wj * (history.snapshot(j + 1)[node] - history.snapshot(j)[node]))
            .sum()
    }
}

/// Outcome of the three-part pointwise check (plus an informational
/// time-monotonicity record that is reported but never coupled to pass/fail).
#[derive(Debug, Clone, Serialize)]
pub struct PointwiseChecks {
    pub positivity: CheckRecord,
    pub spatial_monotonicity: CheckRecord,
    pub caputo_sign: CheckRecord,
    /// Informational: whether u was nondecreasing in t at every node. The
    /// sign of the discrete Caputo derivative does not by itself decide
    /// this for a < 1, so the two records stay independent.
    pub time_monotone_info: CheckRecord,
}

impl PointwiseChecks {
    pub fn all_passed(&self) -> bool {
        self.positivity.passed && self.spatial_monotonicity.passed && self.caputo_sign.passed
    }
}

/// Positivity, spatial monotonicity, and discrete Caputo positivity at every
/// node and accepted step.
///
/// Requires the run's profile to satisfy both shape hypotheses
/// (u0' >= 0 and u0'' >= 0); zero data yields a degenerate pass of (i).
pub fn check_lemma31(
    history: &RunHistory,
    cfg: &SolverConfig,
) -> Result<PointwiseChecks, VerifyError> {
    let profile = validate_profile(&cfg.ic, cfg.p, cfg.compat_tol);
    if !profile.lemma_hypotheses_hold() && !profile.exact_zero {
        return Err(VerifyError::HypothesisNotMet);
    }
    let fp = fingerprint(cfg);
    let nx = cfg.mesh.nx;
    let times = history.grid.times();
    let n_steps = history.len();

    // (i) strict positivity for t > 0
    let mut positivity = CheckRecord::new(
        "positivity",
        "u > 0 at every node of every accepted step with t > 0",
        &fp,
    );
    let mut min_val = f64::INFINITY;
    for n in 1..n_steps {
        for &v in history.snapshot(n) {
            min_val = min_val.min(v);
        }
    }
    if n_steps <= 1 {
        min_val = history.snapshot(0).iter().cloned().fold(f64::INFINITY, f64::min);
    }
    if profile.exact_zero {
        positivity.passed = true;
        positivity.detail = Some("degenerate pass: exact-zero data stays at zero".to_string());
        positivity.margin = Some(0.0);
    } else {
        positivity.passed = min_val > 0.0;
        positivity.margin = Some(min_val);
    }

    // (ii) nondecreasing in x, with a rounding allowance
    let mut monotone = CheckRecord::new(
        "spatial-monotonicity",
        "one-sided x-differences nonnegative at every node and step",
        &fp,
    );
    let mut worst = f64::INFINITY;
    for n in 0..n_steps {
        let snap = history.snapshot(n);
        let max_u = history.meta[n].max_value.abs().max(1e-300);
        for i in 0..nx - 1 {
            worst = worst.min((snap[i + 1] - snap[i]) / max_u);
        }
    }
    monotone.margin = Some(worst);
    monotone.passed = worst >= -SPATIAL_MONOTONICITY_TOL;

    // (iii) discrete Caputo positivity: the memory-weighted time difference,
    // not raw time-monotonicity
    let mut caputo = CheckRecord::new(
        "caputo-sign",
        "discrete Caputo derivative of u positive at every node and step",
        &fp,
    );
    let mut worst_caputo = f64::INFINITY;
    for n in 1..n_steps {
        let weights = if cfg.alpha == 1.0 {
            Vec::new()
        } else {
            l1_weights_raw(cfg.alpha, &times[..=n])
        };
        let tol_scale = history.meta[n].max_value.max(1.0);
        for i in 0..nx {
            let d = discrete_caputo_snapshot(cfg.alpha, times, history, &weights, i, n);
            worst_caputo = worst_caputo.min(d / tol_scale);
        }
    }
    caputo.margin = Some(worst_caputo);
    caputo.passed = profile.exact_zero || worst_caputo > -CAPUTO_SIGN_TOL;
    if profile.exact_zero {
        caputo.detail = Some("degenerate pass: zero data has zero Caputo derivative".to_string());
    }

    // informational only
    let mut time_info = CheckRecord::new(
        "time-monotonicity-info",
        "informational: u nondecreasing in t at every node",
        &fp,
    );
    time_info.informational = true;
    let mut worst_dt = f64::INFINITY;
    for n in 1..n_steps {
        let prev = history.snapshot(n - 1);
        let cur = history.snapshot(n);
        let scale = history.meta[n].max_value.max(1.0);
        for i in 0..nx {
            worst_dt = worst_dt.min((cur[i] - prev[i]) / scale);
        }
    }
    time_info.margin = Some(worst_dt);
    time_info.passed = worst_dt >= -CAPUTO_SIGN_TOL;

    Ok(PointwiseChecks {
        positivity,
        spatial_monotonicity: monotone,
        caputo_sign: caputo,
        time_monotone_info: time_info,
    })
}

/// For p <= 1: the run is dominated pointwise by the envelope with L = 1
/// (so K = 6) and C = max(1, max u0), and the envelope's boundary
/// admissibility inequality `2CL E e^L >= (C E e^L)^p` holds at every step.
///
/// The reported margin is `1 - max(u/v)`; it must be positive, and the
/// utilization max(u/v) must be nonincreasing in t (the envelope grows at
/// least as fast as the solution).
pub fn check_global_existence(
    history: &RunHistory,
    cfg: &SolverConfig,
) -> Result<CheckRecord, VerifyError> {
    if cfg.p > 1.0 {
        return Err(VerifyError::NotApplicable);
    }
    let fp = fingerprint(cfg);
    let mut record = CheckRecord::new(
        "global-existence-envelope",
        "u dominated by C E_{a,1}(6 t^a) e^{x^2}; boundary admissibility holds",
        &fp,
    );
    let max0 = history.snapshot(0).iter().cloned().fold(0.0_f64, f64::max);
    let params = UpperSolutionParams::new(max0.max(1.0), 1.0, cfg.alpha)?;
    let nx = cfg.mesh.nx;
    let exp_lx2: Vec<f64> = (0..nx)
        .map(|i| {
            let x = cfg.mesh.node(i);
            (params.l * x * x).exp()
        })
        .collect();
    let e_l = params.l.exp();

    let mut worst_util = 0.0_f64;
    let mut prev_util = f64::INFINITY;
    let mut utilization_monotone = true;
    let mut admissible = true;
    let mut dominated = true;
    for (n, &t) in history.grid.times().iter().enumerate() {
        let z = params.k * t.powf(params.alpha);
        let e = mittag_leffler(MittagLefflerQuery::new(params.alpha, 1.0, z)?)?;
        let snap = history.snapshot(n);
        let mut util = 0.0_f64;
        for i in 0..nx {
            let v = params.c * e * exp_lx2[i];
            if snap[i] > v * (1.0 + ENVELOPE_REL_TOL) {
                dominated = false;
            }
            util = util.max(snap[i] / v);
        }
        if util > prev_util * (1.0 + 1e-9) {
            utilization_monotone = false;
        }
        prev_util = util;
        worst_util = worst_util.max(util);
        // boundary admissibility: v_x(1,t) >= v(1,t)^p
        let lhs = 2.0 * params.c * params.l * e * e_l;
        let rhs = (params.c * e * e_l).powf(cfg.p);
        if lhs < rhs * (1.0 - 1e-12) {
            admissible = false;
        }
    }
    record.margin = Some(1.0 - worst_util);
    record.passed = dominated && admissible && utilization_monotone && worst_util < 1.0;
    if !utilization_monotone {
        record.detail = Some("envelope utilization increased along the run".to_string());
    } else if !admissible {
        record.detail = Some("boundary admissibility inequality failed".to_string());
    }
    Ok(record)
}

/// For p > 1: the discrete Caputo derivative of the mass series dominates
/// m^p (up to [`MASS_INEQUALITY_SLACK`]) at every pre-crossing step, and the
/// identity residual |D(m) - u(1,t)^p| / u(1,t)^p is reported.
pub fn check_mass_inequality(
    history: &RunHistory,
    cfg: &SolverConfig,
) -> Result<CheckRecord, VerifyError> {
    if cfg.p <= 1.0 {
        return Err(VerifyError::NotApplicable);
    }
    let fp = fingerprint(cfg);
    let mut record = CheckRecord::new(
        "mass-inequality",
        "discrete Caputo of the mass dominates mass^p before crossing",
        &fp,
    );
    let times = history.grid.times();
    let masses: Vec<f64> = history
        .snapshots()
        .iter()
        .map(|s| mass(s, &cfg.mesh))
        .collect();
    let mut worst_margin = f64::INFINITY;
    let mut max_residual = 0.0_f64;
    let mut any = false;
    for n in 1..history.len() {
        if history.meta[n].max_value >= cfg.threshold {
            break; // post-crossing steps excluded
        }
        any = true;
        let d = if cfg.alpha == 1.0 {
            (masses[n] - masses[n - 1]) / (times[n] - times[n - 1])
        } else {
            let w = l1_weights_raw(cfg.alpha, &times[..=n]);
            w.iter()
                .enumerate()
                .map(|(j, wj)| wj * (masses[j + 1] - masses[j]))
                .sum()
        };
        let mp = masses[n].powf(cfg.p);
        worst_margin = worst_margin.min(d / mp - (1.0 - MASS_INEQUALITY_SLACK));
        let boundary_flux = history.snapshot(n)[cfg.mesh.nx - 1].powf(cfg.p);
        max_residual = max_residual.max((d - boundary_flux).abs() / boundary_flux);
    }
    record.margin = Some(worst_margin);
    record.residual = Some(max_residual);
    record.passed = any && worst_margin >= 0.0;
    if !any {
        record.detail = Some("no pre-crossing steps to check".to_string());
    }
    Ok(record)
}

/// For a blow-up run: t_cross(PDE) is bounded (with slack) by both the
/// closed-form fractional bound time at l0 = mass(u0) and the crossing time
/// of the scalar comparison solve with n0 = l0.
pub fn check_bound_ordering(
    pde_report: &BlowUpReport,
    history: &RunHistory,
    cfg: &SolverConfig,
) -> Result<CheckRecord, VerifyError> {
    if cfg.p <= 1.0 || pde_report.verdict != BlowUpVerdict::Yes {
        return Err(VerifyError::NotApplicable);
    }
    let fp = fingerprint(cfg);
    let mut record = CheckRecord::new(
        "bound-ordering",
        "t_cross(PDE) <= t_cross(scalar comparison) <= fractional bound time",
        &fp,
    );
    let t_cross = pde_report.t_cross.expect("yes verdict carries t_cross");
    let l0 = mass(history.snapshot(0), &cfg.mesh);
    let bound = fractional_bound_time(cfg.alpha, cfg.p, l0)
        .map_err(|_| VerifyError::NotApplicable)?;

    let mut fode_cfg = FodeConfig::new(cfg.alpha, cfg.p, l0);
    fode_cfg.threshold = cfg.threshold;
    fode_cfg.growth_cap = cfg.growth_cap;
    fode_cfg.dt0 = cfg.dt0.min(1e-3);
    fode_cfg.dt_min = 1e-15;
    fode_cfg.horizon = bound * 2.0;
    let fode = solve_fode_blowup(&fode_cfg).map_err(|_| VerifyError::NotApplicable)?;
    let (_, fode_report) = fode;

    let vs_bound = bound * (1.0 + BOUND_ORDERING_SLACK) - t_cross;
    match fode_report.t_cross {
        Some(t_fode) => {
            let vs_fode = t_fode * (1.0 + BOUND_ORDERING_SLACK) - t_cross;
            record.margin = Some(vs_bound.min(vs_fode));
            record.passed = vs_bound >= 0.0 && vs_fode >= 0.0;
            record.detail = Some(format!(
                "t_cross={t_cross}, fode_cross={t_fode}, bound={bound}, l0={l0}"
            ));
        }
        None => {
            record.passed = false;
            record.detail = Some(format!(
                "scalar comparison solve did not cross (verdict {:?})",
                fode_report.verdict
            ));
        }
    }
    Ok(record)
}

/// Blow-up localization: the argmax sits at the right boundary at every
/// accepted step and the interior stays below a fraction of the threshold.
pub fn check_localization(
    history: &RunHistory,
    cfg: &SolverConfig,
) -> Result<CheckRecord, VerifyError> {
    let fp = fingerprint(cfg);
    let mut record = CheckRecord::new(
        "localization",
        "argmax always at x = 1; interior supremum (x <= 0.9) stays small",
        &fp,
    );
    let loc = localize_blowup(history, DEFAULT_X_CUT);
    record.margin = Some(INTERIOR_SUP_FRACTION * cfg.threshold - loc.interior_sup);
    record.passed =
        loc.argmax_always_rightmost && loc.interior_sup < INTERIOR_SUP_FRACTION * cfg.threshold;
    record.detail = Some(format!(
        "argmax_always_rightmost={}, interior_sup={}, x_cut={}",
        loc.argmax_always_rightmost, loc.interior_sup, loc.x_cut
    ));
    Ok(record)
}

/// Which canonical grid to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SuiteGrid {
    /// alpha in {0.3, 0.5, 0.7, 1.0} x p in {0.5, 1, 2, 3}.
    Default,
    /// alpha in {0.5, 1.0} x p in {1, 2} (fast smoke grid).
    Small,
}

/// One cell of the canonical grid.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteCase {
    pub alpha: f64,
    pub p: f64,
    /// Base value of the quadratic profile.
    pub a: f64,
    pub nx: usize,
    pub dt0: f64,
    pub growth_cap: f64,
    pub threshold: f64,
    pub horizon: f64,
}

/// Blow-up certificate level per (alpha, p) cell.
///
/// An implicit L1 step has no solution past `W ~ p u^(p-1) (2/h)`, and W can
/// only grow as fast as dt^(-alpha) with dt bounded below by the f64
/// resolution of t, so the attainable amplitude at desk scale falls steeply
/// as alpha decreases (and with it the sharpness of the certificate). These
/// levels sit at roughly half the measured ceiling of each cell at nx = 201.
pub fn suite_threshold(alpha: f64, p: f64) -> f64 {
    if p <= 1.0 {
        return 1e6; // never approached: these cells exist globally
    }
    match (alpha, p) {
        (a, _) if a >= 1.0 => {
            if p <= 2.0 {
                1e6
            } else {
                1e5
            }
        }
        (a, _) if a >= 0.7 => {
            if p <= 2.0 {
                1e6
            } else {
                5e2
            }
        }
        (a, _) if a >= 0.5 => {
            if p <= 2.0 {
                8e3
            } else {
                2e1
            }
        }
        _ => {
            if p <= 2.0 {
                3e1
            } else {
                3e0
            }
        }
    }
}

/// Canonical grid cells in deterministic (lexicographic) order.
pub fn suite_cases(grid: SuiteGrid) -> Vec<SuiteCase> {
    let (alphas, ps): (&[f64], &[f64]) = match grid {
        SuiteGrid::Default => (&[0.3, 0.5, 0.7, 1.0], &[0.5, 1.0, 2.0, 3.0]),
        SuiteGrid::Small => (&[0.5, 1.0], &[1.0, 2.0]),
    };
    let mut cases = Vec::new();
    for &alpha in alphas {
        for &p in ps {
            // p <= 1 cells exist globally: bounded horizon; p > 1 cells run
            // to blow-up within 1.5x the proven bound time at l0 = mass(u0).
            // Base values keep every profile compatible.
            let (a, horizon) = if p <= 1.0 {
                (0.5, 1.0)
            } else {
                let a = 0.1;
                let horizon = quadratic_profile_bound_time(alpha, p, a)
                    .map(|b| 1.5 * b)
                    .unwrap_or(100.0);
                (a, horizon)
            };
            cases.push(SuiteCase {
                alpha,
                p,
                a,
                nx: 201,
                dt0: 1e-3,
                growth_cap: 0.05,
                threshold: suite_threshold(alpha, p),
                horizon,
            });
        }
    }
    cases
}

/// Bound time of the cell's profile: fractional_bound_time at l0 = mass(u0).
fn quadratic_profile_bound_time(alpha: f64, p: f64, a: f64) -> Option<f64> {
    let ic = build_quadratic_profile(p, a).ok()?;
    let InitialCondition::Quadratic { a, b } = ic else {
        return None;
    };
    let l0 = a + b / 3.0;
    fractional_bound_time(alpha, p, l0).ok()
}

/// Results of one grid cell.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteEntry {
    /// Deterministic sort key.
    pub key: String,
    pub alpha: f64,
    pub p: f64,
    pub a: f64,
    pub threshold: f64,
    pub l0: Option<f64>,
    pub verdict: Option<BlowUpVerdict>,
    pub t_cross: Option<f64>,
    pub checks: Vec<CheckRecord>,
    pub error: Option<String>,
}

impl SuiteEntry {
    pub fn all_checks_passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.passed || c.informational)
    }
}

/// Runs one grid cell end to end: solve, then every applicable check.
/// Failures are recorded in the entry, never panicked.
pub fn run_suite_case(case: &SuiteCase) -> SuiteEntry {
    let key = format!("alpha={:.4},p={:.4},a={:.4}", case.alpha, case.p, case.a);
    let mut entry = SuiteEntry {
        key,
        alpha: case.alpha,
        p: case.p,
        a: case.a,
        threshold: case.threshold,
        l0: None,
        verdict: None,
        t_cross: None,
        checks: Vec::new(),
        error: None,
    };

    let ic = match build_quadratic_profile(case.p, case.a) {
        Ok(ic) => ic,
        Err(e) => {
            entry.error = Some(e.to_string());
            return entry;
        }
    };
    let mut cfg = match SolverConfig::new(case.alpha, case.p, ic, case.nx, case.horizon) {
        Ok(cfg) => cfg,
        Err(e) => {
            entry.error = Some(e.to_string());
            return entry;
        }
    };
    cfg.dt0 = case.dt0;
    cfg.growth_cap = case.growth_cap;
    cfg.threshold = case.threshold;
    // crossing the certificate level needs steps down near the f64 time
    // resolution for small alpha
    cfg.dt_min = 1e-15;

    let (history, report) = match run(&cfg) {
        Ok(ok) => ok,
        Err(e) => {
            entry.error = Some(e.to_string());
            return entry;
        }
    };
    entry.l0 = Some(mass(history.snapshot(0), &cfg.mesh));
    entry.verdict = Some(report.verdict);
    entry.t_cross = report.t_cross;

    match check_lemma31(&history, &cfg) {
        Ok(pointwise) => {
            entry.checks.push(pointwise.positivity);
            entry.checks.push(pointwise.spatial_monotonicity);
            entry.checks.push(pointwise.caputo_sign);
            entry.checks.push(pointwise.time_monotone_info);
        }
        Err(e) => entry.error = Some(e.to_string()),
    }
    match check_global_existence(&history, &cfg) {
        Ok(record) => entry.checks.push(record),
        Err(VerifyError::NotApplicable) => {}
        Err(e) => entry.error = Some(e.to_string()),
    }
    match check_mass_inequality(&history, &cfg) {
        Ok(record) => entry.checks.push(record),
        Err(VerifyError::NotApplicable) => {}
        Err(e) => entry.error = Some(e.to_string()),
    }
    match check_bound_ordering(&report, &history, &cfg) {
        Ok(record) => entry.checks.push(record),
        Err(VerifyError::NotApplicable) => {}
        Err(e) => entry.error = Some(e.to_string()),
    }
    // localization (argmax at x = 1, small interior supremum) is reported
    // informationally; the acceptance suite asserts it at full strictness
    if case.p > 1.0 {
        match check_localization(&history, &cfg) {
            Ok(mut record) => {
                record.informational = true;
                entry.checks.push(record);
            }
            Err(e) => entry.error = Some(e.to_string()),
        }
    }
    entry
}

/// Tolerances used by every check, echoed in the report header.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ToleranceHeader {
    pub mass_inequality_slack: f64,
    pub bound_ordering_slack: f64,
    pub envelope_rel_tol: f64,
    pub spatial_monotonicity_tol: f64,
    pub caputo_sign_tol: f64,
    pub interior_sup_fraction: f64,
}

impl Default for ToleranceHeader {
    fn default() -> Self {
        ToleranceHeader {
            mass_inequality_slack: MASS_INEQUALITY_SLACK,
            bound_ordering_slack: BOUND_ORDERING_SLACK,
            envelope_rel_tol: ENVELOPE_REL_TOL,
            spatial_monotonicity_tol: SPATIAL_MONOTONICITY_TOL,
            caputo_sign_tol: CAPUTO_SIGN_TOL,
            interior_sup_fraction: INTERIOR_SUP_FRACTION,
        }
    }
}

/// Consolidated suite report.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub tolerances: ToleranceHeader,
    pub entries: Vec<SuiteEntry>,
    /// The dichotomy across the grid: blow-up verdict exactly when p > 1.
    pub dichotomy: CheckRecord,
    pub all_passed: bool,
}

/// Merges per-cell entries deterministically (sorted by key) and asserts
/// the dichotomy across the grid.
pub fn assemble_report(mut entries: Vec<SuiteEntry>) -> VerificationReport {
    entries.sort_by(|a, b| a.key.cmp(&b.key));
    let mut dichotomy = CheckRecord::new(
        "dichotomy",
        "blow-up verdict if and only if p > 1, across the grid",
        "canonical grid",
    );
    let mut holds = !entries.is_empty();
    let mut detail = String::new();
    if entries.is_empty() {
        // empty grid: nothing to contradict the dichotomy
        holds = true;
        dichotomy.detail = Some("empty grid".to_string());
    }
    for entry in &entries {
        let expected_blowup = entry.p > 1.0;
        let got_blowup = entry.verdict == Some(BlowUpVerdict::Yes);
        if entry.error.is_some() || got_blowup != expected_blowup {
            holds = false;
            detail.push_str(&format!(
                "{}: verdict {:?}{}; ",
                entry.key,
                entry.verdict,
                entry
                    .error
                    .as_ref()
                    .map(|e| format!(" (error: {e})"))
                    .unwrap_or_default()
            ));
        }
    }
    dichotomy.passed = holds;
    if !detail.is_empty() {
        dichotomy.detail = Some(detail);
    }
    let all_passed = holds && entries.iter().all(|e| e.all_checks_passed());
    VerificationReport {
        tolerances: ToleranceHeader::default(),
        entries,
        dichotomy,
        all_passed,
    }
}

/// Runs the whole canonical grid sequentially and assembles the report.
/// (The CLI fans the cells out across threads and merges with
/// [`assemble_report`], which sorts deterministically.)
pub fn run_full_suite(grid: SuiteGrid) -> VerificationReport {
    let entries = suite_cases(grid).iter().map(run_suite_case).collect();
    assemble_report(entries)
}
