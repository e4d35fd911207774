//! Blow-up verdicts, reports, and the blow-up time extrapolation fit.

use alloc::string::String;
use alloc::vec::Vec;
// the Float trait supplies f64 math in no_std builds; test builds resolve
// the inherent std methods instead and see it as unused
#[allow(unused_imports)]
use num_traits::Float;
use serde::Serialize;

/// Outcome of a threshold run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BlowUpVerdict {
    #[serde(rename = "yes")]
    Yes,
    #[serde(rename = "no-within-horizon")]
    NoWithinHorizon,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

/// Blow-up diagnosis of a finished run.
///
/// `t_cross` is the first accepted time at which the tracked maximum reached
/// the threshold (assumption-free); `t_estimate` extrapolates the blow-up
/// time from the classical rate ansatz `n ~ A (T - t)^(-1/(p-1))` and is
/// heuristic for fractional orders. The localization fields are populated
/// only by spatial runs.
#[derive(Debug, Clone, Serialize)]
pub struct BlowUpReport {
    pub verdict: BlowUpVerdict,
    pub t_cross: Option<f64>,
    /// Fitted blow-up time from the rate ansatz (heuristic; see `note`).
    pub t_estimate: Option<f64>,
    pub note: Option<String>,
    pub argmax_always_rightmost: Option<bool>,
    /// True when some snapshot attained its maximum at more than one node.
    pub argmax_tie_degenerate: Option<bool>,
    pub interior_sup: Option<f64>,
    pub x_cut: Option<f64>,
}

impl BlowUpReport {
    pub fn new(verdict: BlowUpVerdict) -> Self {
        BlowUpReport {
            verdict,
            t_cross: None,
            t_estimate: None,
            note: None,
            argmax_always_rightmost: None,
            argmax_tie_degenerate: None,
            interior_sup: None,
            x_cut: None,
        }
    }
}

/// Number of trailing accepted steps used by the blow-up time fit.
pub const FIT_WINDOW: usize = 10;

/// Least-squares fit of log n against log(T - t) with the model
/// n ~ A (T - t)^(-1/(p-1)), over the final accepted steps.
///
/// The slope is fixed by the model, so for a candidate T the optimal
/// intercept is the mean of ln n_k + s ln(T - t_k) and the misfit is its
/// variance; T is found by golden-section search. Returns None when the
/// window is too short or the fit degenerates.
pub fn fit_blowup_time(times: &[f64], values: &[f64], p: f64) -> Option<f64> {
    if p <= 1.0 || times.len() != values.len() || times.len() < 3 {
        return None;
    }
    let n = times.len();
    let w = n.min(FIT_WINDOW);
    let ts = &times[n - w..];
    let vs = &values[n - w..];
    if vs.iter().any(|&v| v <= 0.0) {
        return None;
    }
    let t_last = ts[w - 1];
    let span = (t_last - ts[0]).max(f64::MIN_POSITIVE);
    let s = 1.0 / (p - 1.0);

    let misfit = |delta: f64| -> f64 {
        // T = t_last + delta
        let mut mean = 0.0;
        let mut m2 = 0.0;
        for (i, (&t, &v)) in ts.iter().zip(vs.iter()).enumerate() {
            let a = v.ln() + s * (t_last + delta - t).ln();
            let d = a - mean;
            mean += d / (i + 1) as f64;
            m2 += d * (a - mean);
        }
        m2
    };

    // golden-section on ln(delta); the misfit blows up as delta -> 0 and
    // saturates as delta -> inf, so the minimum is interior
    let mut lo = (span * 1e-12).ln();
    let mut hi = (span * 1e4).ln();
    let phi = 0.5 * (5.0_f64.sqrt() - 1.0);
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let mut f1 = misfit(x1.exp());
    let mut f2 = misfit(x2.exp());
    for _ in 0..200 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = misfit(x1.exp());
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = misfit(x2.exp());
        }
        if hi - lo < 1e-13 {
            break;
        }
    }
    let delta = (0.5 * (lo + hi)).exp();
    let t_fit = t_last + delta;
    t_fit.is_finite().then_some(t_fit)
}

/// Collects (times, max-values) pairs for the fit window.
pub(crate) fn fit_window_series(times: &[f64], maxima: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = times.len().min(maxima.len());
    let w = n.min(FIT_WINDOW);
    (times[n - w..n].to_vec(), maxima[n - w..n].to_vec())
}
