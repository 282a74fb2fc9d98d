//! C ABI over the hermite-zeros library.
//!
//! Zero sets and quadrature rules are returned as opaque handles that must be
//! released with their matching `_free` function. Every fallible call reports
//! an [`HzStatus`]; out-parameters are written only on `HzStatus::Ok`. The
//! header `include/hermite_zeros.h` is generated by cbindgen at build time.

use std::ffi::c_void;

use hermite_zeros::{
    asymptotic, hermite,
    quadrature::{self, NodeSource, QuadratureRule},
    solver, Error, SolverConfig, ZeroSet,
};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HzStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// An input lay outside the documented domain.
    DomainError = 2,
    /// A center-out zero index was out of range for the degree.
    IndexError = 3,
    /// An iteration failed to converge (a defect for valid inputs).
    ConvergenceError = 4,
}

impl From<Error> for HzStatus {
    fn from(err: Error) -> Self {
        match err {
            Error::Domain { .. } | Error::InvalidConfig(_) | Error::MethodMismatch { .. } => {
                HzStatus::DomainError
            }
            Error::IndexOutOfRange { .. } => HzStatus::IndexError,
            Error::SolverDidNotConverge { .. } | Error::ZeroRefinementFailed { .. } => {
                HzStatus::ConvergenceError
            }
        }
    }
}

/// Zero construction method selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HzMethod {
    Asymptotic = 0,
    Exact = 1,
}

/// Node source selector for quadrature rules.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HzNodeSource {
    ExactNodes = 0,
    AsymptoticNodes = 1,
}

/// One approximate zero with its construction data.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HzZeroEstimate {
    pub n: u32,
    pub j: u32,
    /// Area measure fed to the segment equation.
    pub m: f64,
    /// Segment angle solving `theta + sin(theta) = m`.
    pub theta: f64,
    /// Estimated abscissa.
    pub x: f64,
}

/// Opaque sorted zero set of one Hermite degree.
pub struct HzZeroSet(ZeroSet);

/// Opaque Gauss-Hermite quadrature rule.
pub struct HzQuadratureRule(QuadratureRule);

/// Integrand callback: receives the abscissa and the caller's context.
pub type HzIntegrand = Option<extern "C" fn(x: f64, context: *mut c_void) -> f64>;

fn config() -> SolverConfig {
    SolverConfig::default()
}

/// Forward segment map `theta + sin(theta)` for `theta` in `[0, pi]`.
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn hz_segment_area(theta: f64, out: *mut f64) -> HzStatus {
    if out.is_null() {
        return HzStatus::NullArgument;
    }
    match solver::segment_area(theta) {
        Ok(v) => {
            *out = v;
            HzStatus::Ok
        }
        Err(e) => e.into(),
    }
}

/// Solves `theta + sin(theta) = m` for `theta` in `[0, pi]`.
///
/// # Safety
/// `out_theta` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn hz_invert_segment_area(m: f64, out_theta: *mut f64) -> HzStatus {
    if out_theta.is_null() {
        return HzStatus::NullArgument;
    }
    match solver::invert_segment_area(m, &config()) {
        Ok(v) => {
            *out_theta = v;
            HzStatus::Ok
        }
        Err(e) => e.into(),
    }
}

/// Area measure of the `j`-th partition boundary for degree `n`.
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn hz_area_fraction(n: u32, j: u32, out: *mut f64) -> HzStatus {
    if out.is_null() {
        return HzStatus::NullArgument;
    }
    match asymptotic::area_fraction(n, j) {
        Ok(v) => {
            *out = v;
            HzStatus::Ok
        }
        Err(e) => e.into(),
    }
}

/// Computes the `j`-th approximate nonnegative zero of `H_n`.
///
/// # Safety
/// `out` must be a valid pointer to an `HzZeroEstimate`.
#[no_mangle]
pub unsafe extern "C" fn hz_approx_positive_zero(
    n: u32,
    j: u32,
    out: *mut HzZeroEstimate,
) -> HzStatus {
    if out.is_null() {
        return HzStatus::NullArgument;
    }
    match asymptotic::approx_positive_zero(n, j, &config()) {
        Ok(e) => {
            *out = HzZeroEstimate {
                n: e.n,
                j: e.j,
                m: e.m,
                theta: e.theta,
                x: e.x,
            };
            HzStatus::Ok
        }
        Err(e) => e.into(),
    }
}

/// Evaluates the orthonormal Hermite function `psi_n` and `psi_{n-1}`.
///
/// # Safety
/// `out_psi_n` and `out_psi_prev` must be valid pointers to doubles.
#[no_mangle]
pub unsafe extern "C" fn hz_eval_hermite_function(
    n: u32,
    x: f64,
    out_psi_n: *mut f64,
    out_psi_prev: *mut f64,
) -> HzStatus {
    if out_psi_n.is_null() || out_psi_prev.is_null() {
        return HzStatus::NullArgument;
    }
    let pair = hermite::eval_hermite_function(n, x);
    *out_psi_n = pair.psi_n;
    *out_psi_prev = pair.psi_prev;
    HzStatus::Ok
}

/// Builds the zero set of `H_n` with the requested method.
///
/// On success `*out` owns the set; release it with [`hz_zero_set_free`].
///
/// # Safety
/// `out` must be a valid pointer to a set handle.
#[no_mangle]
pub unsafe extern "C" fn hz_zero_set_new(
    n: u32,
    method: HzMethod,
    out: *mut *mut HzZeroSet,
) -> HzStatus {
    if out.is_null() {
        return HzStatus::NullArgument;
    }
    let result = match method {
        HzMethod::Asymptotic => asymptotic::approx_zero_set(n, &config()),
        HzMethod::Exact => hermite::exact_zero_set(n, &config()),
    };
    match result {
        Ok(set) => {
            *out = Box::into_raw(Box::new(HzZeroSet(set)));
            HzStatus::Ok
        }
        Err(e) => e.into(),
    }
}

/// Number of zeros in the set (equals the degree).
///
/// # Safety
/// `set` must be a live handle from [`hz_zero_set_new`] or null.
#[no_mangle]
pub unsafe extern "C" fn hz_zero_set_len(set: *const HzZeroSet) -> usize {
    set.as_ref().map_or(0, |s| s.0.values.len())
}

/// Copies the sorted zeros into `buf`, which holds `len` doubles.
///
/// `len` must be at least [`hz_zero_set_len`].
///
/// # Safety
/// `buf` must point to writable storage for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn hz_zero_set_values(
    set: *const HzZeroSet,
    buf: *mut f64,
    len: usize,
) -> HzStatus {
    let Some(set) = set.as_ref() else {
        return HzStatus::NullArgument;
    };
    if buf.is_null() {
        return HzStatus::NullArgument;
    }
    if len < set.0.values.len() {
        return HzStatus::DomainError;
    }
    std::ptr::copy_nonoverlapping(set.0.values.as_ptr(), buf, set.0.values.len());
    HzStatus::Ok
}

/// Releases a zero set handle. Null is a no-op.
///
/// # Safety
/// `set` must be a handle from [`hz_zero_set_new`] not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn hz_zero_set_free(set: *mut HzZeroSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Builds an `n`-point Gauss-Hermite rule from the requested node source.
///
/// On success `*out` owns the rule; release it with [`hz_rule_free`].
///
/// # Safety
/// `out` must be a valid pointer to a rule handle.
#[no_mangle]
pub unsafe extern "C" fn hz_rule_new(
    n: u32,
    source: HzNodeSource,
    out: *mut *mut HzQuadratureRule,
) -> HzStatus {
    if out.is_null() {
        return HzStatus::NullArgument;
    }
    let source = match source {
        HzNodeSource::ExactNodes => NodeSource::ExactNodes,
        HzNodeSource::AsymptoticNodes => NodeSource::AsymptoticNodes,
    };
    match quadrature::build_rule(n, source, &config()) {
        Ok(rule) => {
            *out = Box::into_raw(Box::new(HzQuadratureRule(rule)));
            HzStatus::Ok
        }
        Err(e) => e.into(),
    }
}

/// Number of nodes in the rule.
///
/// # Safety
/// `rule` must be a live handle from [`hz_rule_new`] or null.
#[no_mangle]
pub unsafe extern "C" fn hz_rule_len(rule: *const HzQuadratureRule) -> usize {
    rule.as_ref().map_or(0, |r| r.0.nodes.len())
}

/// Copies the sorted nodes into `buf` holding `len` doubles.
///
/// # Safety
/// `buf` must point to writable storage for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn hz_rule_nodes(
    rule: *const HzQuadratureRule,
    buf: *mut f64,
    len: usize,
) -> HzStatus {
    copy_rule_slice(rule, buf, len, |r| &r.nodes)
}

/// Copies the weights (matching node order) into `buf` holding `len` doubles.
///
/// # Safety
/// `buf` must point to writable storage for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn hz_rule_weights(
    rule: *const HzQuadratureRule,
    buf: *mut f64,
    len: usize,
) -> HzStatus {
    copy_rule_slice(rule, buf, len, |r| &r.weights)
}

unsafe fn copy_rule_slice(
    rule: *const HzQuadratureRule,
    buf: *mut f64,
    len: usize,
    pick: impl Fn(&QuadratureRule) -> &Vec<f64>,
) -> HzStatus {
    let Some(rule) = rule.as_ref() else {
        return HzStatus::NullArgument;
    };
    if buf.is_null() {
        return HzStatus::NullArgument;
    }
    let data = pick(&rule.0);
    if len < data.len() {
        return HzStatus::DomainError;
    }
    std::ptr::copy_nonoverlapping(data.as_ptr(), buf, data.len());
    HzStatus::Ok
}

/// Evaluates `sum w_j f(x_j)` with `f` supplied as a callback.
///
/// # Safety
/// `f` must be callable with any node abscissa and `context`; `out` must be a
/// valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn hz_rule_integrate(
    rule: *const HzQuadratureRule,
    f: HzIntegrand,
    context: *mut c_void,
    out: *mut f64,
) -> HzStatus {
    let Some(rule) = rule.as_ref() else {
        return HzStatus::NullArgument;
    };
    let Some(f) = f else {
        return HzStatus::NullArgument;
    };
    if out.is_null() {
        return HzStatus::NullArgument;
    }
    *out = quadrature::integrate(&rule.0, |x| f(x, context));
    HzStatus::Ok
}

/// Releases a rule handle. Null is a no-op.
///
/// # Safety
/// `rule` must be a handle from [`hz_rule_new`] not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn hz_rule_free(rule: *mut HzQuadratureRule) {
    if !rule.is_null() {
        drop(Box::from_raw(rule));
    }
}

/// Analytic Gaussian moment `int x^k exp(-x^2) dx`.
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn hz_gaussian_moment(k: u32, out: *mut f64) -> HzStatus {
    if out.is_null() {
        return HzStatus::NullArgument;
    }
    *out = quadrature::gaussian_moment(k);
    HzStatus::Ok
}

/// Radius `sqrt(4S + 1)` of the spin-`S` position-space disk.
///
/// The cell boundaries are the asymptotic zero set of degree `2S`; fetch them
/// with [`hz_zero_set_new`].
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn hz_spin_radius(s: f64, out: *mut f64) -> HzStatus {
    if out.is_null() {
        return HzStatus::NullArgument;
    }
    match asymptotic::spin_domain(s, &config()) {
        Ok(domain) => {
            *out = domain.radius;
            HzStatus::Ok
        }
        Err(e) => e.into(),
    }
}
