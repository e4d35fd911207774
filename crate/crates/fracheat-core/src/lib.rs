//! Numerical core for the time-fractional heat equation
//!
//! ```text
//!   D^a u(x,t) = u_xx(x,t),        0 < x < 1, 0 < t < T,
//!   u_x(0,t) = 0,  u_x(1,t) = u(1,t)^p,
//!   u(x,0) = u0(x),
//! ```
//!
//! where `D^a` is the Caputo derivative of order `a` in (0,1] (the classical
//! time derivative at `a = 1`). The crate provides:
//!
//! * [`specfun`] — Gamma and two-parameter Mittag-Leffler functions on real
//!   arguments, the building blocks of every fractional-order formula here;
//! * [`fracode`] — the L1 discretization of the Caputo derivative on
//!   nonuniform grids and the scalar blow-up ODE `D^a n = n^p`, together with
//!   the closed-form blow-up time bounds it induces;
//! * [`pdesolver`] — the implicit L1 finite-difference solver for the full
//!   problem with ghost-node Neumann boundaries, adaptive time stepping, and
//!   blow-up detection/localization;
//! * [`verify`] — executable checks that solver output satisfies the
//!   qualitative theory: positivity and monotonicity, domination by a
//!   Mittag-Leffler upper envelope for `p <= 1`, the integral blow-up
//!   inequality and time bound for `p > 1`, and boundary localization of the
//!   blow-up point.
//!
//! The crate is `no_std` (with `alloc`); all IO, CLI, and file formats live in
//! the companion `fracheat-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod blowup;
pub mod fracode;
pub mod pdesolver;
pub mod specfun;
pub mod verify;

pub use blowup::{BlowUpReport, BlowUpVerdict};
pub use fracode::{
    caputo_power_oracle, classical_blowup_time, fractional_bound_time, l1_weights,
    lower_solution_value, solve_fode_blowup, FodeConfig, TimeGrid,
};
pub use pdesolver::{
    build_quadratic_profile, mass, InitialCondition, Mesh, RunHistory, SolverConfig,
};
pub use specfun::{gamma_fn, mittag_leffler, MittagLefflerQuery};
