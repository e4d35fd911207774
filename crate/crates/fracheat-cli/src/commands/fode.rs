//! `fracheat fode`: scalar blow-up solve with CSV trajectory and JSON
//! summary (crossing time, fitted blow-up time, bound time, verdict).

use std::path::PathBuf;

use clap::Args;
use fracheat_core::blowup::{BlowUpReport, BlowUpVerdict};
use fracheat_core::fracode::{
    fractional_bound_time, solve_fode_blowup, FodeConfig, FodeTrajectory,
};
use serde::Serialize;

use crate::manifest::{Resolver, RunManifest};
use crate::output::{fmt_g15, to_json_g15};
use crate::{CmdResult, ConfigArg, EXIT_NUMERICAL, EXIT_USAGE};

#[derive(Args)]
pub struct FodeArgs {
    /// Caputo order alpha, in (0, 1]
    #[arg(long)]
    alpha: Option<f64>,
    /// Nonlinearity exponent p, > 1
    #[arg(long)]
    p: Option<f64>,
    /// Initial value n0, > 0
    #[arg(long)]
    n0: Option<f64>,
    /// Blow-up threshold M
    #[arg(long)]
    threshold: Option<f64>,
    /// Initial step
    #[arg(long)]
    dt0: Option<f64>,
    /// Max relative increase of n per accepted step
    #[arg(long)]
    growth_cap: Option<f64>,
    /// Smallest admissible step
    #[arg(long)]
    dt_min: Option<f64>,
    /// Give-up time for the no-blow-up verdict
    #[arg(long)]
    horizon: Option<f64>,
    /// CSV trajectory output path (columns: t, n, dt)
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// JSON summary output path
    #[arg(long, value_name = "FILE")]
    summary: Option<PathBuf>,
    #[command(flatten)]
    config: ConfigArg,
}

#[derive(Serialize)]
struct FodeSummary<'a> {
    config: &'a FodeConfig,
    verdict: BlowUpVerdict,
    t_cross: Option<f64>,
    t_estimate: Option<f64>,
    bound_time: f64,
    note: Option<String>,
    steps_accepted: usize,
    manifest: &'a RunManifest,
}

pub fn run(args: FodeArgs) -> CmdResult {
    let mut manifest = RunManifest::new("fode");
    let mut resolver = Resolver::new(args.config.config.as_deref(), &mut manifest)
        .map_err(|e| (EXIT_USAGE, e))?;

    let alpha = resolver.f64("alpha", args.alpha, f64::NAN).map_err(|e| (EXIT_USAGE, e))?;
    let p = resolver.f64("p", args.p, f64::NAN).map_err(|e| (EXIT_USAGE, e))?;
    let n0 = resolver.f64("n0", args.n0, f64::NAN).map_err(|e| (EXIT_USAGE, e))?;
    if alpha.is_nan() || p.is_nan() || n0.is_nan() {
        return Err((
            EXIT_USAGE,
            "fode requires --alpha, --p, and --n0 (or config-file values)".to_string(),
        ));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err((
            EXIT_USAGE,
            format!("--alpha {alpha} outside the admissible range (0, 1]"),
        ));
    }
    let mut cfg = FodeConfig::new(alpha, p, n0);
    cfg.threshold = resolver
        .f64("threshold", args.threshold, cfg.threshold)
        .map_err(|e| (EXIT_USAGE, e))?;
    cfg.dt0 = resolver.f64("dt0", args.dt0, cfg.dt0).map_err(|e| (EXIT_USAGE, e))?;
    cfg.growth_cap = resolver
        .f64("growth_cap", args.growth_cap, cfg.growth_cap)
        .map_err(|e| (EXIT_USAGE, e))?;
    cfg.dt_min = resolver
        .f64("dt_min", args.dt_min, cfg.dt_min)
        .map_err(|e| (EXIT_USAGE, e))?;
    cfg.horizon = resolver
        .f64("horizon", args.horizon, cfg.horizon)
        .map_err(|e| (EXIT_USAGE, e))?;
    cfg.validate().map_err(|e| (EXIT_USAGE, e.to_string()))?;

    let bound_time =
        fractional_bound_time(alpha, p, n0).map_err(|e| (EXIT_USAGE, e.to_string()))?;
    let (trajectory, report) =
        solve_fode_blowup(&cfg).map_err(|e| (EXIT_NUMERICAL, e.to_string()))?;

    if let Some(path) = &args.out {
        manifest.record_output(path);
    }
    if let Some(path) = &args.summary {
        manifest.record_output(path);
    }
    if let Some(path) = &args.out {
        std::fs::write(path, trajectory_csv(&trajectory))
            .map_err(|e| (EXIT_USAGE, format!("cannot write {}: {e}", path.display())))?;
    }
    if let Some(path) = &args.summary {
        let summary = FodeSummary {
            config: &cfg,
            verdict: report.verdict,
            t_cross: report.t_cross,
            t_estimate: report.t_estimate,
            bound_time,
            note: report.note.clone(),
            steps_accepted: trajectory.values.len().saturating_sub(1),
            manifest: &manifest,
        };
        std::fs::write(path, to_json_g15(&summary))
            .map_err(|e| (EXIT_USAGE, format!("cannot write {}: {e}", path.display())))?;
    }

    print_verdict(&report, bound_time);
    match report.verdict {
        BlowUpVerdict::Inconclusive => Err((
            EXIT_NUMERICAL,
            "step size underflowed before threshold or horizon".to_string(),
        )),
        _ => Ok(()),
    }
}

fn trajectory_csv(trajectory: &FodeTrajectory) -> String {
    let mut out = String::from("t,n,dt\n");
    let times = trajectory.grid.times();
    for (j, (&t, &n)) in times.iter().zip(trajectory.values.iter()).enumerate() {
        let dt = if j == 0 { 0.0 } else { t - times[j - 1] };
        out.push_str(&format!("{},{},{}\n", fmt_g15(t), fmt_g15(n), fmt_g15(dt)));
    }
    out
}

fn print_verdict(report: &BlowUpReport, bound_time: f64) {
    match report.verdict {
        BlowUpVerdict::Yes => println!(
            "blow-up: yes; t_cross = {}, t_estimate = {}, bound_time = {}",
            fmt_g15(report.t_cross.unwrap_or(f64::NAN)),
            report
                .t_estimate
                .map(fmt_g15)
                .unwrap_or_else(|| "n/a".to_string()),
            fmt_g15(bound_time)
        ),
        BlowUpVerdict::NoWithinHorizon => {
            println!("blow-up: no-within-horizon; bound_time = {}", fmt_g15(bound_time))
        }
        BlowUpVerdict::Inconclusive => println!("blow-up: inconclusive"),
    }
}
