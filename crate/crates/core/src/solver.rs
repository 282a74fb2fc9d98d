//! Inversion of the segment equation `theta + sin(theta) = M` on `[0, pi]`.
//!
//! The left-hand side is strictly increasing with range `[0, pi]`, so the
//! inverse is well defined, but its derivative `1 + cos(theta)` vanishes at
//! `theta = pi`: near `M = pi` the inverse behaves like a cube root
//! (`theta = pi - (6 (pi - M))^(1/3) + ...`). The solver below is a Newton
//! iteration safeguarded by a maintained bisection bracket, with an initial
//! guess switched to the cube-root expansion in the singular regime, and a
//! residual (not step-size) termination test.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Slack accepted on domain checks before an input is rejected.
const DOMAIN_SLACK: f64 = 1e-12;

/// Tolerances for [`invert_segment_area`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Residual tolerance on `|theta + sin(theta) - M|`.
    pub abs_tol: f64,
    /// Iteration budget before the solve is reported as a defect.
    pub max_iter: u32,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            abs_tol: 1e-14,
            max_iter: 64,
        }
    }
}

impl SolverConfig {
    pub fn new(abs_tol: f64, max_iter: u32) -> Result<Self> {
        let config = SolverConfig { abs_tol, max_iter };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.abs_tol.is_nan() || self.abs_tol <= 0.0 {
            return Err(Error::InvalidConfig("abs_tol must be positive"));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidConfig("max_iter must be at least 1"));
        }
        Ok(())
    }
}

/// Forward map `theta -> theta + sin(theta)`, the area measure of the
/// symmetric circular band cut off at half-angle `theta / 2`.
///
/// Strictly increasing on `[0, pi]` with range `[0, pi]`.
pub fn segment_area(theta: f64) -> Result<f64> {
    if !(-DOMAIN_SLACK..=PI + DOMAIN_SLACK).contains(&theta) {
        return Err(Error::Domain {
            what: "theta must lie in [0, pi]",
            value: theta,
        });
    }
    let t = theta.clamp(0.0, PI);
    Ok(t + t.sin())
}

/// Solves `theta + sin(theta) = M` for `theta` in `[0, pi]`.
///
/// Returns the unique solution with residual at most `config.abs_tol`.
/// Deterministic: equal inputs produce bit-equal outputs.
pub fn invert_segment_area(m: f64, config: &SolverConfig) -> Result<f64> {
    config.validate()?;
    if !(-DOMAIN_SLACK..=PI + DOMAIN_SLACK).contains(&m) {
        return Err(Error::Domain {
            what: "M must lie in [0, pi]",
            value: m,
        });
    }
    let m = m.clamp(0.0, PI);

    // Initial guess: M/2 sits below the root everywhere (sin x <= x), so
    // Newton on the concave residual climbs monotonically. Past M = 3 the
    // derivative is small enough that the cube-root expansion of the
    // singular end is the better start.
    let mut theta = if m <= 3.0 {
        0.5 * m
    } else {
        PI - (6.0 * (PI - m)).cbrt()
    };

    let mut lo = 0.0_f64;
    let mut hi = PI;
    let mut residual = f64::NAN;
    for _ in 0..config.max_iter {
        residual = theta + theta.sin() - m;
        if residual.abs() <= config.abs_tol {
            return Ok(theta);
        }
        if residual > 0.0 {
            hi = theta;
        } else {
            lo = theta;
        }
        let derivative = 1.0 + theta.cos();
        let newton = theta - residual / derivative;
        theta = if newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }
    Err(Error::SolverDidNotConverge { m, residual })
}
