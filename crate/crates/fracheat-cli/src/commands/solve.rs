//! `fracheat solve`: full initial-boundary-value solve with CSV trace,
//! optional snapshot file, and JSON summary.
//!
//! run.csv columns: t, dt, max_u, u_at_x0, u_at_x1, mass, newton_iters.
//! snap.csv: first row is the mesh nodes; each later row is t followed by
//! the nodal values, written every `stride` accepted steps.

use std::path::PathBuf;

use clap::Args;
use fracheat_core::blowup::{BlowUpReport, BlowUpVerdict};
use fracheat_core::pdesolver::{
    build_quadratic_profile, mass, run as run_solver, PdeError, RunHistory, SolverConfig,
};
use serde::Serialize;

use crate::manifest::{Resolver, RunManifest};
use crate::output::{fmt_g15, to_json_g15};
use crate::{CmdResult, ConfigArg, EXIT_NUMERICAL, EXIT_USAGE};

#[derive(Args)]
pub struct SolveArgs {
    /// Caputo order alpha, in (0, 1]
    #[arg(long)]
    alpha: Option<f64>,
    /// Boundary flux exponent p, > 0
    #[arg(long)]
    p: Option<f64>,
    /// Base value of the quadratic initial profile u0 = a + b x^2
    #[arg(long)]
    a: Option<f64>,
    /// Node count of the spatial mesh
    #[arg(long)]
    nx: Option<usize>,
    /// Initial step
    #[arg(long)]
    dt0: Option<f64>,
    /// Blow-up threshold M
    #[arg(long)]
    threshold: Option<f64>,
    /// Give-up time for the no-blow-up verdict
    #[arg(long)]
    horizon: Option<f64>,
    /// Max relative increase of max u per accepted step
    #[arg(long)]
    growth_cap: Option<f64>,
    /// Smallest admissible step
    #[arg(long)]
    dt_min: Option<f64>,
    /// CSV trace output path
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// JSON summary output path
    #[arg(long, value_name = "FILE")]
    summary: Option<PathBuf>,
    /// Snapshot CSV output path
    #[arg(long, value_name = "FILE")]
    snapshots: Option<PathBuf>,
    /// Accepted steps between snapshot rows
    #[arg(long)]
    stride: Option<usize>,
    #[command(flatten)]
    config: ConfigArg,
}

#[derive(Serialize)]
struct SolveSummary<'a> {
    config: &'a SolverConfig,
    verdict: BlowUpVerdict,
    t_cross: Option<f64>,
    t_estimate: Option<f64>,
    note: Option<String>,
    argmax_always_rightmost: Option<bool>,
    argmax_tie_degenerate: Option<bool>,
    interior_sup: Option<f64>,
    x_cut: Option<f64>,
    steps_accepted: usize,
    steps_rejected: usize,
    manifest: &'a RunManifest,
}

pub fn run(args: SolveArgs) -> CmdResult {
    let mut manifest = RunManifest::new("solve");
    let mut resolver = Resolver::new(args.config.config.as_deref(), &mut manifest)
        .map_err(|e| (EXIT_USAGE, e))?;

    let alpha = resolver.f64("alpha", args.alpha, f64::NAN).map_err(|e| (EXIT_USAGE, e))?;
    let p = resolver.f64("p", args.p, f64::NAN).map_err(|e| (EXIT_USAGE, e))?;
    let a = resolver.f64("a", args.a, f64::NAN).map_err(|e| (EXIT_USAGE, e))?;
    if alpha.is_nan() || p.is_nan() || a.is_nan() {
        return Err((
            EXIT_USAGE,
            "solve requires --alpha, --p, and --a (or config-file values)".to_string(),
        ));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err((
            EXIT_USAGE,
            format!("--alpha {alpha} outside the admissible range (0, 1]"),
        ));
    }
    let nx = resolver.usize("nx", args.nx, 201).map_err(|e| (EXIT_USAGE, e))?;
    let horizon = resolver
        .f64("horizon", args.horizon, 10.0)
        .map_err(|e| (EXIT_USAGE, e))?;

    let ic = build_quadratic_profile(p, a).map_err(|e| match e {
        PdeError::NoCompatibleProfile => (
            EXIT_USAGE,
            format!("no compatible quadratic profile exists for p = {p}, a = {a}"),
        ),
        other => (EXIT_USAGE, other.to_string()),
    })?;
    let mut cfg = SolverConfig::new(alpha, p, ic, nx, horizon)
        .map_err(|e| (EXIT_USAGE, e.to_string()))?;
    cfg.dt0 = resolver.f64("dt0", args.dt0, cfg.dt0).map_err(|e| (EXIT_USAGE, e))?;
    cfg.threshold = resolver
        .f64("threshold", args.threshold, cfg.threshold)
        .map_err(|e| (EXIT_USAGE, e))?;
    cfg.growth_cap = resolver
        .f64("growth_cap", args.growth_cap, cfg.growth_cap)
        .map_err(|e| (EXIT_USAGE, e))?;
    cfg.dt_min = resolver
        .f64("dt_min", args.dt_min, cfg.dt_min)
        .map_err(|e| (EXIT_USAGE, e))?;
    cfg.snapshot_stride = resolver
        .usize("stride", args.stride, cfg.snapshot_stride)
        .map_err(|e| (EXIT_USAGE, e))?;
    cfg.validate().map_err(|e| (EXIT_USAGE, e.to_string()))?;

    let (history, report) =
        run_solver(&cfg).map_err(|e| (EXIT_NUMERICAL, e.to_string()))?;

    for path in [&args.out, &args.summary, &args.snapshots].into_iter().flatten() {
        manifest.record_output(path);
    }
    if let Some(path) = &args.out {
        std::fs::write(path, trace_csv(&history, &cfg))
            .map_err(|e| (EXIT_USAGE, format!("cannot write {}: {e}", path.display())))?;
    }
    if let Some(path) = &args.snapshots {
        std::fs::write(path, snapshots_csv(&history, &cfg))
            .map_err(|e| (EXIT_USAGE, format!("cannot write {}: {e}", path.display())))?;
    }
    if let Some(path) = &args.summary {
        let summary = SolveSummary {
            config: &cfg,
            verdict: report.verdict,
            t_cross: report.t_cross,
            t_estimate: report.t_estimate,
            note: report.note.clone(),
            argmax_always_rightmost: report.argmax_always_rightmost,
            argmax_tie_degenerate: report.argmax_tie_degenerate,
            interior_sup: report.interior_sup,
            x_cut: report.x_cut,
            steps_accepted: history.len() - 1,
            steps_rejected: history.steps_rejected,
            manifest: &manifest,
        };
        std::fs::write(path, to_json_g15(&summary))
            .map_err(|e| (EXIT_USAGE, format!("cannot write {}: {e}", path.display())))?;
    }

    print_verdict(&report);
    match report.verdict {
        BlowUpVerdict::Inconclusive => Err((
            EXIT_NUMERICAL,
            "step size underflowed before threshold or horizon".to_string(),
        )),
        _ => Ok(()),
    }
}

fn trace_csv(history: &RunHistory, cfg: &SolverConfig) -> String {
    let nx = cfg.mesh.nx;
    let mut out = String::from("t,dt,max_u,u_at_x0,u_at_x1,mass,newton_iters\n");
    for (n, &t) in history.grid.times().iter().enumerate() {
        let snap = history.snapshot(n);
        let meta = &history.meta[n];
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            fmt_g15(t),
            fmt_g15(meta.dt),
            fmt_g15(meta.max_value),
            fmt_g15(snap[0]),
            fmt_g15(snap[nx - 1]),
            fmt_g15(mass(snap, &cfg.mesh)),
            meta.newton_iters
        ));
    }
    out
}

fn snapshots_csv(history: &RunHistory, cfg: &SolverConfig) -> String {
    let stride = cfg.snapshot_stride.max(1);
    let nodes: Vec<String> = cfg.mesh.nodes().iter().map(|&x| fmt_g15(x)).collect();
    let mut out = nodes.join(",");
    out.push('\n');
    let last = history.len() - 1;
    for (n, &t) in history.grid.times().iter().enumerate() {
        if n % stride != 0 && n != last {
            continue;
        }
        let row: Vec<String> = std::iter::once(fmt_g15(t))
            .chain(history.snapshot(n).iter().map(|&v| fmt_g15(v)))
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn print_verdict(report: &BlowUpReport) {
    match report.verdict {
        BlowUpVerdict::Yes => println!(
            "blow-up: yes; t_cross = {}, t_estimate = {}, argmax_always_rightmost = {}, interior_sup = {}",
            fmt_g15(report.t_cross.unwrap_or(f64::NAN)),
            report
                .t_estimate
                .map(fmt_g15)
                .unwrap_or_else(|| "n/a".to_string()),
            report.argmax_always_rightmost.unwrap_or(false),
            fmt_g15(report.interior_sup.unwrap_or(f64::NAN)),
        ),
        BlowUpVerdict::NoWithinHorizon => println!("blow-up: no-within-horizon"),
        BlowUpVerdict::Inconclusive => println!("blow-up: inconclusive"),
    }
}
