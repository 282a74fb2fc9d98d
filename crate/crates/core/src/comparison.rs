//! Approximate-vs-exact zero tables with error metrics.
//!
//! [`compare`] pairs the circle-partition estimate and the refined zero for
//! every center-out index of one degree. [`sweep`] assembles the full signed
//! table over a degree range: each index contributes its mirrored pair of
//! rows (the central zero of an odd degree mirrors onto itself), rows ordered
//! by degree, then index, then abscissa.

use serde::Serialize;

use crate::asymptotic;
use crate::error::Result;
use crate::hermite;
use crate::solver::SolverConfig;

/// One paired zero with its error metrics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub n: u32,
    pub j: u32,
    pub x_approx: f64,
    pub x_exact: f64,
    pub abs_err: f64,
    /// `abs_err / |x_exact|`; absent for the central zero.
    pub rel_err: Option<f64>,
}

/// Degree filter for [`sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Both,
}

impl Parity {
    fn admits(self, n: u32) -> bool {
        match self {
            Parity::Even => n.is_multiple_of(2),
            Parity::Odd => n % 2 == 1,
            Parity::Both => true,
        }
    }
}

/// Pairs approximate and exact nonnegative zeros of `H_n` by rank.
///
/// One row per center-out index, ordered by `j`.
pub fn compare(n: u32, config: &SolverConfig) -> Result<Vec<ComparisonRow>> {
    let estimates = asymptotic::positive_estimates(n, config)?;
    let exact = hermite::exact_zero_set(n, config)?;
    let rows = estimates
        .iter()
        .map(|estimate| {
            // Rank pairing: the estimate with index j matches the exact zero
            // j places out from the center of the sorted set.
            let rank = if n.is_multiple_of(2) {
                (n / 2 + estimate.j - 1) as usize
            } else {
                ((n - 1) / 2 + estimate.j) as usize
            };
            let x_exact = exact.values[rank];
            let abs_err = (estimate.x - x_exact).abs();
            ComparisonRow {
                n,
                j: estimate.j,
                x_approx: estimate.x,
                x_exact,
                abs_err,
                rel_err: (x_exact != 0.0).then(|| abs_err / x_exact.abs()),
            }
        })
        .collect();
    Ok(rows)
}

/// Negation that never materializes `-0.0` in the output tables.
fn mirrored(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        -x
    }
}

/// Concatenates the mirrored comparison tables for all degrees of the
/// requested parity in `[n_min, n_max]`.
///
/// Every center-out index yields two rows, one per sign; rows are sorted by
/// `(n, j, x_exact)`.
pub fn sweep(
    n_min: u32,
    n_max: u32,
    parity: Parity,
    config: &SolverConfig,
) -> Result<Vec<ComparisonRow>> {
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        if !parity.admits(n) {
            continue;
        }
        for row in compare(n, config)? {
            let mut negated = row;
            negated.x_approx = mirrored(row.x_approx);
            negated.x_exact = mirrored(row.x_exact);
            rows.push(negated);
            rows.push(row);
        }
    }
    Ok(rows)
}

/// CSV header shared by [`to_csv`] and its consumers.
pub const CSV_HEADER: &str = "n,j,x_approx,x_exact,abs_err,rel_err";

/// Renders rows as CSV; `summary` appends a `#`-prefixed footer with
/// min/max/mean `abs_err` per degree.
pub fn to_csv(rows: &[ComparisonRow], summary: bool) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let rel = row.rel_err.map(|r| r.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.n, row.j, row.x_approx, row.x_exact, row.abs_err, rel
        ));
    }
    if summary {
        out.push_str("# summary: n,min_abs_err,max_abs_err,mean_abs_err\n");
        let mut i = 0;
        while i < rows.len() {
            let n = rows[i].n;
            let mut count = 0usize;
            let mut min = f64::INFINITY;
            let mut max = f64::NEG_INFINITY;
            let mut sum = 0.0;
            while i < rows.len() && rows[i].n == n {
                let e = rows[i].abs_err;
                min = min.min(e);
                max = max.max(e);
                sum += e;
                count += 1;
                i += 1;
            }
            out.push_str(&format!("# {},{},{},{}\n", n, min, max, sum / count as f64));
        }
    }
    out
}

/// Renders rows as a JSON array of objects with the CSV field names.
pub fn to_json(rows: &[ComparisonRow]) -> String {
    serde_json::to_string(rows).expect("comparison rows serialize infallibly")
}
