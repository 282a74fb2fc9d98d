//! Independent ground truth for Hermite zeros and Gauss-Hermite weights.
//!
//! Everything here works with the orthonormal Hermite functions
//! `psi_n(x) = H_n(x) exp(-x^2/2) / (pi^(1/4) sqrt(2^n n!))`, which share
//! their zeros with `H_n` but stay uniformly bounded, so the three-term
//! recurrence never overflows no matter the degree. Far outside the
//! classically allowed region the Gaussian prefactor itself underflows
//! binary64; evaluation there switches to a mantissa/exponent split so the
//! recurrence still carries full relative precision into the oscillatory
//! region.
//!
//! Exact zeros are found by bracketed Newton seeded with the circle-partition
//! estimates: midpoints between consecutive estimates isolate one sign change
//! of `psi_n` each, and the Newton iterate is confined to its bracket.

use std::f64::consts::PI;

use crate::asymptotic::{self, Method, ZeroSet};
use crate::error::{Error, Result};
use crate::solver::SolverConfig;

/// Residual scale on `|psi_n|` below which an abscissa counts as a zero.
const PSI_RESIDUAL_TOL: f64 = 1e-12;

/// Gaussian half-exponent beyond which evaluation tracks a separate
/// power-of-two scale (`exp(-x^2/2)` underflows near `x^2/2 ~ 708`).
const DIRECT_EVAL_LIMIT: f64 = 700.0;

/// Rescaling threshold for the split representation. The gap to the binary64
/// ceiling absorbs the per-step growth factor `x * sqrt(2)` of the recurrence
/// before the post-step check runs.
const RESCALE_THRESHOLD: f64 = 5.260135901548374e210; // 2^700
const RESCALE_EXP: i64 = 700;

/// Orthonormal Hermite function values at one abscissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitePair {
    pub n: u32,
    pub x: f64,
    /// `psi_n(x)`.
    pub psi_n: f64,
    /// `psi_{n-1}(x)`, with `psi_{-1} = 0`.
    pub psi_prev: f64,
}

impl HermitePair {
    /// Derivative `psi_n'(x) = -x psi_n(x) + sqrt(2n) psi_{n-1}(x)`.
    pub fn derivative(&self) -> f64 {
        -self.x * self.psi_n + f64::from(2 * self.n).sqrt() * self.psi_prev
    }
}

/// Multiplies by a power of two, in chunks so intermediate factors stay
/// representable. Overflow and underflow round to infinity and zero as the
/// true value demands.
fn scale_by_pow2(value: f64, mut exponent: i64) -> f64 {
    let mut value = value;
    while exponent != 0 && value != 0.0 && value.is_finite() {
        let step = exponent.clamp(-960, 960);
        value *= 2f64.powi(step as i32);
        exponent -= step;
    }
    value
}

/// Evaluates `psi_n(x)` and `psi_{n-1}(x)` by the orthonormal recurrence
/// `psi_{k+1} = x sqrt(2/(k+1)) psi_k - sqrt(k/(k+1)) psi_{k-1}` seeded at
/// `psi_0 = pi^(-1/4) exp(-x^2/2)`.
pub fn eval_hermite_function(n: u32, x: f64) -> HermitePair {
    let half_x2 = 0.5 * x * x;
    if half_x2 >= 1e300 {
        // Farther out than any u32-degree turning point: psi underflows
        // binary64 outright.
        return HermitePair {
            n,
            x,
            psi_n: 0.0,
            psi_prev: 0.0,
        };
    }
    let (mut prev, mut cur, mut scale) = if half_x2 < DIRECT_EVAL_LIMIT {
        (0.0, (-half_x2).exp() / PI.powf(0.25), 0i64)
    } else {
        // Split psi_0 into mantissa * 2^scale via its base-2 logarithm.
        let log2_psi0 = (-half_x2 - 0.25 * PI.ln()) * std::f64::consts::LOG2_E;
        let exponent = log2_psi0.floor();
        (0.0, (log2_psi0 - exponent).exp2(), exponent as i64)
    };

    for k in 0..n {
        let kf = f64::from(k);
        let next = x * (2.0 / (kf + 1.0)).sqrt() * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        if cur.abs().max(prev.abs()) > RESCALE_THRESHOLD * 0.5 {
            cur = scale_by_pow2(cur, -RESCALE_EXP);
            prev = scale_by_pow2(prev, -RESCALE_EXP);
            scale += RESCALE_EXP;
        }
    }

    HermitePair {
        n,
        x,
        psi_n: scale_by_pow2(cur, scale),
        psi_prev: scale_by_pow2(prev, scale),
    }
}

/// Gauss-Hermite weight at abscissa `x` for an `n`-point rule,
/// `w = exp(-x^2) / (n * psi_{n-1}(x)^2)`.
///
/// Exact for `x` a zero of `H_n`; evaluated heuristically at approximate
/// nodes for the error study.
pub(crate) fn weight_at(n: u32, x: f64) -> f64 {
    let psi_prev = eval_hermite_function(n - 1, x).psi_n;
    (-x * x).exp() / (f64::from(n) * psi_prev * psi_prev)
}

/// Gauss-Hermite weights for the exact zeros of `H_n`.
///
/// Weights are positive, symmetric under node mirroring, and sum to
/// `sqrt(pi)`.
pub fn gauss_weights(n: u32, nodes: &ZeroSet) -> Result<Vec<f64>> {
    if nodes.method != Method::Exact {
        return Err(Error::MethodMismatch {
            expected: Method::Exact,
            got: nodes.method,
        });
    }
    if nodes.n != n || nodes.values.len() != n as usize {
        return Err(Error::Domain {
            what: "node set does not belong to the requested degree",
            value: f64::from(nodes.n),
        });
    }
    Ok(mirrored_weights(n, &nodes.values))
}

/// Evaluates the weight formula on the nonnegative nodes and mirrors the
/// results so weight symmetry is bit-exact.
pub(crate) fn mirrored_weights(n: u32, values: &[f64]) -> Vec<f64> {
    let count = values.len();
    let mut weights = vec![0.0; count];
    for rank in count / 2..count {
        let w = weight_at(n, values[rank]);
        weights[rank] = w;
        weights[count - 1 - rank] = w;
    }
    weights
}

/// Computes the exact zero set of `H_n` to full double precision.
///
/// Brackets come from midpoints between consecutive circle-partition
/// estimates (plus the disk edge padded by 0.1%); each bracket is refined by
/// Newton steps on `psi_n` that fall back to bisection whenever they leave
/// the bracket. Positive zeros are mirrored to negative ones.
pub fn exact_zero_set(n: u32, config: &SolverConfig) -> Result<ZeroSet> {
    if n == 0 {
        return Ok(ZeroSet {
            n,
            method: Method::Exact,
            values: Vec::new(),
        });
    }

    let approx = asymptotic::approx_zero_set(n, config)?;
    let positive_approx: Vec<f64> = approx.values.iter().copied().filter(|&x| x > 0.0).collect();
    let brackets = positive_brackets(n, &positive_approx)?;

    let mut positive = Vec::with_capacity(brackets.len());
    for (j0, &(lo, hi)) in brackets.iter().enumerate() {
        let seed = positive_approx
            .get(j0)
            .copied()
            .filter(|s| (lo..=hi).contains(s))
            .unwrap_or(0.5 * (lo + hi));
        let j = j0 as u32 + 1;
        let root = refine_root(n, lo, hi, seed, config.max_iter)
            .ok_or(Error::ZeroRefinementFailed { n, j })?;
        if eval_hermite_function(n, root).psi_n.abs() > PSI_RESIDUAL_TOL {
            return Err(Error::ZeroRefinementFailed { n, j });
        }
        positive.push(root);
    }

    Ok(ZeroSet::from_nonnegative(
        n,
        Method::Exact,
        &positive,
        n % 2 == 1,
    ))
}

/// Builds one sign-change bracket per positive zero of `H_n`.
///
/// The initial fences are 0 (even `n`) or half the first estimate (odd `n`),
/// the midpoints between consecutive estimates, and the padded disk edge. If
/// an estimate were ever poor enough to let two zeros share a fence gap, the
/// fence set is refined by splitting until every gap holds at most one.
fn positive_brackets(n: u32, positive_approx: &[f64]) -> Result<Vec<(f64, f64)>> {
    let expected = asymptotic::positive_count(n) as usize;
    debug_assert_eq!(positive_approx.len(), expected);
    if expected == 0 {
        return Ok(Vec::new());
    }

    let edge = f64::from(2 * n + 1).sqrt() * 1.001;
    let mut fences = Vec::with_capacity(expected + 1);
    if n.is_multiple_of(2) {
        fences.push(0.0);
    } else {
        fences.push(0.5 * positive_approx[0]);
    }
    fences.extend(positive_approx.windows(2).map(|w| 0.5 * (w[0] + w[1])));
    fences.push(edge);

    for _ in 0..24 {
        let signs: Vec<f64> = fences.iter().map(|&f| fence_sign(n, f)).collect();
        let brackets: Vec<(f64, f64)> = fences
            .windows(2)
            .zip(signs.windows(2))
            .filter(|(_, s)| s[0] * s[1] < 0.0)
            .map(|(f, _)| (f[0], f[1]))
            .collect();
        if brackets.len() == expected {
            return Ok(brackets);
        }
        // Some gap hides more than one zero: halve every gap and rescan.
        let mut refined = Vec::with_capacity(2 * fences.len());
        for pair in fences.windows(2) {
            refined.push(pair[0]);
            refined.push(0.5 * (pair[0] + pair[1]));
        }
        refined.push(*fences.last().expect("nonempty fences"));
        fences = refined;
    }
    Err(Error::ZeroRefinementFailed { n, j: 1 })
}

/// Sign of `psi_n` at a fence, nudged off any exact zero so a fence never
/// swallows a sign change.
fn fence_sign(n: u32, fence: f64) -> f64 {
    let mut x = fence;
    for _ in 0..4 {
        let psi = eval_hermite_function(n, x).psi_n;
        if psi != 0.0 {
            return psi.signum();
        }
        x = next_up(x);
    }
    1.0
}

fn next_up(x: f64) -> f64 {
    let bits = x.to_bits();
    let next = if x >= 0.0 { bits + 1 } else { bits - 1 };
    f64::from_bits(next)
}

/// Newton with a maintained bracket; returns the refined root or `None` if
/// the iteration budget runs out before the step collapses.
fn refine_root(n: u32, lo: f64, hi: f64, seed: f64, max_iter: u32) -> Option<f64> {
    let mut lo = lo;
    let mut hi = hi;
    let sign_lo = fence_sign(n, lo);
    let mut x = seed;
    for _ in 0..max_iter.max(64) {
        let pair = eval_hermite_function(n, x);
        if pair.psi_n == 0.0 {
            return Some(x);
        }
        if pair.psi_n.signum() == sign_lo {
            lo = x;
        } else {
            hi = x;
        }
        let derivative = pair.derivative();
        let newton = x - pair.psi_n / derivative;
        let next = if newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - x).abs() <= f64::EPSILON * next.abs().max(1.0) {
            return Some(next);
        }
        x = next;
    }
    None
}
