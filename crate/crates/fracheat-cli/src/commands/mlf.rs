//! `fracheat mlf --alpha A --r R --z Z`: prints E_{alpha,r}(z) with 15
//! significant digits.

use clap::Args;
use fracheat_core::specfun::{mittag_leffler, MittagLefflerQuery, SpecFunError};

use crate::manifest::{Resolver, RunManifest};
use crate::output::fmt_g15;
use crate::{CmdResult, ConfigArg, EXIT_NUMERICAL, EXIT_USAGE};

#[derive(Args)]
pub struct MlfArgs {
    /// Order alpha, in (0, 2]
    #[arg(long)]
    alpha: Option<f64>,
    /// Second parameter r, > 0
    #[arg(long)]
    r: Option<f64>,
    /// Real argument z
    #[arg(long)]
    z: Option<f64>,
    #[command(flatten)]
    config: ConfigArg,
}

pub fn run(args: MlfArgs) -> CmdResult {
    let mut manifest = RunManifest::new("mlf");
    let mut resolver = Resolver::new(args.config.config.as_deref(), &mut manifest)
        .map_err(|e| (EXIT_USAGE, e))?;
    let alpha = resolver
        .f64("alpha", args.alpha, f64::NAN)
        .map_err(|e| (EXIT_USAGE, e))?;
    let r = resolver
        .f64("r", args.r, f64::NAN)
        .map_err(|e| (EXIT_USAGE, e))?;
    let z = resolver
        .f64("z", args.z, f64::NAN)
        .map_err(|e| (EXIT_USAGE, e))?;
    if alpha.is_nan() || r.is_nan() || z.is_nan() {
        return Err((
            EXIT_USAGE,
            "mlf requires --alpha, --r, and --z (or config-file values)".to_string(),
        ));
    }
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err((
            EXIT_USAGE,
            format!("--alpha {alpha} outside the admissible range (0, 2]"),
        ));
    }
    if !(r > 0.0) {
        return Err((EXIT_USAGE, format!("--r {r} must be positive")));
    }
    let query = MittagLefflerQuery::new(alpha, r, z)
        .map_err(|e| (EXIT_USAGE, format!("invalid query: {e}")))?;
    match mittag_leffler(query) {
        Ok(value) => {
            println!("{}", fmt_g15(value));
            Ok(())
        }
        Err(e @ SpecFunError::Domain) | Err(e @ SpecFunError::Pole) => {
            Err((EXIT_USAGE, e.to_string()))
        }
        Err(e) => Err((EXIT_NUMERICAL, e.to_string())),
    }
}
