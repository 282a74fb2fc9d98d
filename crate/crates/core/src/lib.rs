//! Hermite polynomial zeros from equal-area circle partitions.
//!
//! The zeros of the degree-`n` Hermite polynomial are approximated by the
//! boundaries of an equal-area partition of a disk of radius `sqrt(2n + 1)`
//! into `n + 1` vertical cells. Locating a boundary reduces to inverting the
//! monotone segment equation `theta + sin(theta) = M` on `[0, pi]`; the
//! abscissa is then `x = sqrt(2n + 1) * sin(theta / 2)`.
//!
//! The crate provides:
//!
//! * [`solver`] — a safeguarded Newton inversion of the segment equation,
//! * [`asymptotic`] — the circle-partition zero estimates and the spin-system
//!   disk geometry they come from,
//! * [`hermite`] — an independent ground truth: stable evaluation of
//!   orthonormal Hermite functions, exact zeros refined by bracketed Newton,
//!   and Gauss-Hermite weights,
//! * [`quadrature`] — Gauss-Hermite rules built from either node source and
//!   reference integrals to measure them against,
//! * [`comparison`] — approximate-vs-exact zero tables with error metrics.
//!
//! The `hermite-zeros` binary exposes all of it behind `solve`, `zeros`,
//! `compare`, `quad` and `spin` subcommands.

pub mod asymptotic;
pub mod comparison;
pub mod error;
pub mod hermite;
pub mod quadrature;
pub mod solver;

pub use asymptotic::{
    approx_positive_zero, approx_zero_set, area_fraction, positive_estimates, spin_domain, Method,
    SpinDomain, ZeroEstimate, ZeroSet,
};
pub use comparison::{compare, sweep, ComparisonRow, Parity};
pub use error::{Error, Result};
pub use hermite::{eval_hermite_function, exact_zero_set, gauss_weights, HermitePair};
pub use quadrature::{build_rule, gaussian_moment, integrate, NodeSource, QuadratureRule};
pub use solver::{invert_segment_area, segment_area, SolverConfig};
