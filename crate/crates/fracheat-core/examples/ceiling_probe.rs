//! Scratch probe: baseline regression values to freeze.
use fracheat_core::pdesolver::{build_quadratic_profile, localize_blowup, run, SolverConfig};
use fracheat_core::verify::{check_bound_ordering, check_lemma31, check_mass_inequality};

fn main() {
    let ic = build_quadratic_profile(2.0, 0.1).unwrap();
    let mut cfg = SolverConfig::new(0.5, 2.0, ic, 201, 30.0).unwrap();
    cfg.threshold = 2e3;
    cfg.dt_min = 1e-15;
    let (history, report) = run(&cfg).unwrap();
    let loc = localize_blowup(&history, 0.9);
    let lemma = check_lemma31(&history, &cfg).unwrap();
    let mass_rec = check_mass_inequality(&history, &cfg).unwrap();
    let bound_rec = check_bound_ordering(&report, &history, &cfg).unwrap();
    println!("t_cross          = {:.17e}", report.t_cross.unwrap());
    println!("t_estimate       = {:?}", report.t_estimate);
    println!("interior_sup     = {:.17e}", loc.interior_sup);
    println!("positivity margin= {:.17e}", lemma.positivity.margin.unwrap());
    println!("monotone margin  = {:.17e}", lemma.spatial_monotonicity.margin.unwrap());
    println!("caputo margin    = {:.17e}", lemma.caputo_sign.margin.unwrap());
    println!("mass margin      = {:.17e}", mass_rec.margin.unwrap());
    println!("mass residual    = {:.17e}", mass_rec.residual.unwrap());
    println!("bound margin     = {:.17e}", bound_rec.margin.unwrap());
    println!("steps            = {} rejected {}", history.len(), history.steps_rejected);
}
