//! Circle-partition estimates for Hermite polynomial zeros.
//!
//! A disk of radius `r = sqrt(2n + 1)` is cut into `n + 1` vertical cells of
//! equal area. The cell boundaries approximate the zeros of the Hermite
//! polynomial `H_n`: the area of the central band out to the `j`-th boundary
//! is `pi r^2 (2j - 1) / (n + 1)` for even `n` and `pi r^2 (2j) / (n + 1)`
//! for odd `n`, which reduces to the segment equation
//! `theta + sin(theta) = M` with `theta = 2 asin(x_j / r)`.
//!
//! Zeros are indexed center-out: `j = 1` is the smallest positive zero, and
//! the central zero of an odd degree carries `j = 0`. Negative zeros are
//! mirrored from positive ones by negation so sets are symmetric bit for bit.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::solver::{invert_segment_area, SolverConfig};

/// How a zero set was constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Equal-area circle partition estimates.
    Asymptotic,
    /// Bracketed-Newton refinement of the Hermite function.
    Exact,
}

/// One approximate positive zero of `H_n` with its construction data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroEstimate {
    /// Polynomial degree.
    pub n: u32,
    /// Center-out index; 0 only for the central zero of an odd degree.
    pub j: u32,
    /// Area measure fed to the segment equation, in `[0, pi)`.
    pub m: f64,
    /// Segment angle solving `theta + sin(theta) = m`, in `[0, pi)`.
    pub theta: f64,
    /// Estimated abscissa `sqrt(2n + 1) * sin(theta / 2)`, nonnegative.
    pub x: f64,
}

/// The full sorted zero set of `H_n` for one construction method.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSet {
    pub n: u32,
    pub method: Method,
    /// All `n` zeros, sorted ascending, symmetric about 0.
    pub values: Vec<f64>,
}

impl ZeroSet {
    /// Assembles the symmetric set from the nonnegative zeros.
    ///
    /// `positive` holds the positive zeros ascending; `has_central` adds the
    /// zero at the origin (odd degrees). Negative zeros are negated mirrors.
    pub(crate) fn from_nonnegative(
        n: u32,
        method: Method,
        positive: &[f64],
        has_central: bool,
    ) -> Self {
        let mut values = Vec::with_capacity(2 * positive.len() + usize::from(has_central));
        values.extend(positive.iter().rev().map(|&x| -x));
        if has_central {
            values.push(0.0);
        }
        values.extend_from_slice(positive);
        ZeroSet { n, method, values }
    }
}

/// Number of positive zeros of `H_n`.
pub(crate) fn positive_count(n: u32) -> u32 {
    n / 2
}

/// Center-out index of the zero at ascending `rank` within a degree-`n` set.
///
/// Mirror zeros share the index of their positive partner.
pub fn center_out_index(n: u32, rank: usize) -> u32 {
    let rank = rank as i64;
    let n = i64::from(n);
    let j = if n % 2 == 0 {
        let half = n / 2;
        if rank < half {
            half - rank
        } else {
            rank - half + 1
        }
    } else {
        (rank - (n - 1) / 2).abs()
    };
    j as u32
}

/// Checks `j` against the valid center-out range for degree `n`.
fn check_index(n: u32, j: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { n, j });
    }
    let valid = if n.is_multiple_of(2) {
        j >= 1 && j <= n / 2
    } else {
        j <= (n - 1) / 2
    };
    if valid {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { n, j })
    }
}

/// Area measure for the `j`-th boundary of a degree-`n` partition:
/// `(2j - 1) pi / (n + 1)` for even `n`, `2j pi / (n + 1)` for odd `n`.
///
/// Strictly increasing in `j`; always less than `pi`.
pub fn area_fraction(n: u32, j: u32) -> Result<f64> {
    check_index(n, j)?;
    let numerator = if n.is_multiple_of(2) {
        2 * j - 1
    } else {
        2 * j
    };
    Ok(f64::from(numerator) * PI / f64::from(n + 1))
}

/// Computes the `j`-th approximate nonnegative zero of `H_n`.
pub fn approx_positive_zero(n: u32, j: u32, config: &SolverConfig) -> Result<ZeroEstimate> {
    let m = area_fraction(n, j)?;
    let theta = invert_segment_area(m, config)?;
    let radius = f64::from(2 * n + 1).sqrt();
    let x = radius * (0.5 * theta).sin();
    Ok(ZeroEstimate { n, j, m, theta, x })
}

/// All nonnegative zero estimates for degree `n`, ordered by `j`.
///
/// Odd degrees start with the central `j = 0` estimate; even degrees start
/// at `j = 1`. Empty for `n = 0`.
pub fn positive_estimates(n: u32, config: &SolverConfig) -> Result<Vec<ZeroEstimate>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let j_first = if n.is_multiple_of(2) { 1 } else { 0 };
    (j_first..=positive_count(n))
        .map(|j| approx_positive_zero(n, j, config))
        .collect()
}

/// The full approximate zero set of `H_n`, sorted ascending.
pub fn approx_zero_set(n: u32, config: &SolverConfig) -> Result<ZeroSet> {
    let estimates = positive_estimates(n, config)?;
    let positive: Vec<f64> = estimates.iter().filter(|e| e.j >= 1).map(|e| e.x).collect();
    Ok(ZeroSet::from_nonnegative(
        n,
        Method::Asymptotic,
        &positive,
        n % 2 == 1,
    ))
}

/// The position-space disk of a spin-`S` system: radius `sqrt(4S + 1)` and
/// the interior boundaries of its `2S + 1` equal-area cells.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinDomain {
    /// The spin, a positive half-integer.
    pub spin: f64,
    /// Twice the spin; the Hermite degree whose zeros the boundaries track.
    pub n: u32,
    /// Disk radius `sqrt(4S + 1) = sqrt(2n + 1)`.
    pub radius: f64,
    /// The `n` interior cell boundaries, sorted ascending.
    pub boundaries: Vec<f64>,
}

/// Builds the equal-area disk partition for spin `S` (`2S` a positive integer).
pub fn spin_domain(spin: f64, config: &SolverConfig) -> Result<SpinDomain> {
    let doubled = 2.0 * spin;
    if !(doubled.is_finite()
        && doubled >= 1.0
        && doubled == doubled.round()
        && doubled <= u32::MAX as f64)
    {
        return Err(Error::Domain {
            what: "2S must be a positive integer",
            value: spin,
        });
    }
    let n = doubled as u32;
    let radius = f64::from(2 * n + 1).sqrt();
    let boundaries = approx_zero_set(n, config)?.values;
    Ok(SpinDomain {
        spin,
        n,
        radius,
        boundaries,
    })
}
