//! Regression tests pinning the baseline runs' machine-generated values.
//!
//! The baseline blow-up run is (alpha = 0.5, p = 2, a = 0.1) at nx = 201
//! with growth cap 0.05 and certificate level M = 2000 (chosen so both the
//! baseline and its space/time-refined companion stay clear of the implicit
//! scheme's solvability ceiling). Values were frozen after the first
//! computation; tolerances allow for libm ulp differences across platforms
//! feeding the adaptive step controller.

use fracheat_core::blowup::BlowUpVerdict;
use fracheat_core::pdesolver::{
    build_quadratic_profile, localize_blowup, run, RunHistory, SolverConfig,
};
use fracheat_core::verify::check_lemma31;

pub fn baseline_config(nx: usize, growth_cap: f64) -> SolverConfig {
    let ic = build_quadratic_profile(2.0, 0.1).expect("a = 0.1 is compatible for p = 2");
    let mut cfg = SolverConfig::new(0.5, 2.0, ic, nx, 30.0).unwrap();
    cfg.threshold = 2e3;
    cfg.dt_min = 1e-15;
    cfg.growth_cap = growth_cap;
    cfg
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

#[test]
fn baseline_blowup_run_regression() {
    let cfg = baseline_config(201, 0.05);
    let (history, report) = run(&cfg).unwrap();

    assert_eq!(report.verdict, BlowUpVerdict::Yes);
    let t_cross = report.t_cross.unwrap();
    assert!(
        rel(t_cross, 11.602167748618518) < 1e-4,
        "t_cross regression: {t_cross}"
    );

    // every accepted snapshot nonnegative, nondecreasing in x
    for snap in history.snapshots() {
        assert!(snap.iter().all(|&v| v >= 0.0));
        assert!(snap.windows(2).all(|w| w[1] >= w[0] - 1e-12 * 2e3));
    }

    let loc = localize_blowup(&history, 0.9);
    assert!(loc.argmax_always_rightmost);
    assert!(
        loc.interior_sup < 0.01 * cfg.threshold,
        "interior supremum {} vs 1% of threshold",
        loc.interior_sup
    );
    assert!(
        rel(loc.interior_sup, 5.4071465060489716) < 0.05,
        "interior_sup regression: {}",
        loc.interior_sup
    );

    let lemma = check_lemma31(&history, &cfg).unwrap();
    assert!(lemma.all_passed(), "{lemma:?}");
    // frozen margins (loose: adaptive paths may shift by platform ulps)
    assert!(lemma.positivity.margin.unwrap() > 0.09);
    assert!(lemma.caputo_sign.margin.unwrap() > 1e-4);
}

#[test]
fn classical_blowup_self_convergence() {
    // alpha = 1 reaches deep thresholds easily; halving h and the step cap
    // must move the crossing time by less than 5%
    let mut crossings = Vec::new();
    for &(nx, cap) in &[(201usize, 0.05), (401usize, 0.025)] {
        let ic = build_quadratic_profile(2.0, 0.1).unwrap();
        let mut cfg = SolverConfig::new(1.0, 2.0, ic, nx, 30.0).unwrap();
        cfg.threshold = 1e6;
        cfg.dt_min = 1e-13;
        cfg.growth_cap = cap;
        let (_, report) = run(&cfg).unwrap();
        assert_eq!(report.verdict, BlowUpVerdict::Yes);
        crossings.push(report.t_cross.unwrap());
    }
    let change = (crossings[0] - crossings[1]).abs() / crossings[0];
    assert!(
        change <= 0.05,
        "crossing times {crossings:?} differ by {change:.4}"
    );
}

#[test]
fn sub_linear_exponent_stays_bounded() {
    let ic = build_quadratic_profile(1.0, 0.5).unwrap();
    let cfg = SolverConfig::new(0.5, 1.0, ic, 101, 1.0).unwrap();
    let (history, report) = run(&cfg).unwrap();
    assert_eq!(report.verdict, BlowUpVerdict::NoWithinHorizon);
    let max_u = history
        .max_series()
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max);
    assert!(max_u < 10.0, "p = 1 run should stay small, got {max_u}");
}

#[test]
fn history_snapshots_expose_full_trajectory() {
    let cfg = baseline_config(101, 0.05);
    let (history, _) = run(&cfg).unwrap();
    assert_eq!(history.len(), history.grid.len());
    assert_eq!(history.len(), history.meta.len());
    // reconstructing a history from parts preserves the max series
    let rebuilt = RunHistory::from_parts(
        history.grid.clone(),
        history.snapshots().to_vec(),
    )
    .unwrap();
    assert_eq!(rebuilt.max_series(), history.max_series());
}
