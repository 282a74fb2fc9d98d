//! Gauss-Hermite quadrature for integrals `int f(x) exp(-x^2) dx`.
//!
//! Rules can be built on the exact Hermite zeros (the classical rule, exact
//! for polynomials up to degree `2n - 1`) or on the circle-partition
//! estimates, which makes the approximation error of those estimates directly
//! measurable as a quadrature error.

use std::f64::consts::PI;

use crate::asymptotic::{self, Method};
use crate::error::{Error, Result};
use crate::hermite;
use crate::solver::SolverConfig;

/// Which zero set supplies the nodes of a rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeSource {
    /// Exact zeros of `H_n` with the classical Gauss-Hermite weights.
    ExactNodes,
    /// Circle-partition estimates, weighted by the same formula evaluated at
    /// the approximate nodes (a heuristic, kept for the error study).
    AsymptoticNodes,
}

/// An `n`-point rule for the weight `exp(-x^2)` on the real line.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub n: u32,
    pub source: NodeSource,
    /// Abscissas, sorted ascending and symmetric about 0.
    pub nodes: Vec<f64>,
    /// Positive weights, symmetric under node mirroring.
    pub weights: Vec<f64>,
}

/// Builds an `n`-point rule from the requested node source.
pub fn build_rule(n: u32, source: NodeSource, config: &SolverConfig) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(Error::Domain {
            what: "a quadrature rule needs at least one node",
            value: 0.0,
        });
    }
    let (nodes, weights) = match source {
        NodeSource::ExactNodes => {
            let set = hermite::exact_zero_set(n, config)?;
            let weights = hermite::gauss_weights(n, &set)?;
            (set.values, weights)
        }
        NodeSource::AsymptoticNodes => {
            let set = asymptotic::approx_zero_set(n, config)?;
            debug_assert_eq!(set.method, Method::Asymptotic);
            let weights = hermite::mirrored_weights(n, &set.values);
            (set.values, weights)
        }
    };
    Ok(QuadratureRule {
        n,
        source,
        nodes,
        weights,
    })
}

/// Evaluates `sum w_j f(x_j)` over the rule, left to right.
pub fn integrate<F: Fn(f64) -> f64>(rule: &QuadratureRule, f: F) -> f64 {
    rule.nodes
        .iter()
        .zip(&rule.weights)
        .map(|(&x, &w)| w * f(x))
        .sum()
}

/// Analytic Gaussian moment `int x^k exp(-x^2) dx`: zero for odd `k`,
/// `sqrt(pi) (k-1)!! / 2^(k/2)` for even `k`.
pub fn gaussian_moment(k: u32) -> f64 {
    if k % 2 == 1 {
        return 0.0;
    }
    let mut value = PI.sqrt();
    for m in 1..=k / 2 {
        value *= f64::from(2 * m - 1) / 2.0;
    }
    value
}

/// Analytic reference `int cos(a x) exp(-x^2) dx = sqrt(pi) exp(-a^2/4)`.
pub fn cosine_reference(a: f64) -> f64 {
    PI.sqrt() * (-a * a / 4.0).exp()
}

/// Analytic reference `int exp(b x) exp(-x^2) dx = sqrt(pi) exp(b^2/4)`.
pub fn exponential_reference(b: f64) -> f64 {
    PI.sqrt() * (b * b / 4.0).exp()
}
