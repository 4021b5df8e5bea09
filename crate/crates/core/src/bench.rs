//! Timing and operation-count measurements for the three evaluation paths.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmat::counters::{measure, OpCounts};
use crate::exactmat::Mat3;
use crate::sequences::SeqKind;
use crate::transform::{iterated_power, iterated_terms, IbtSpec, Path};

/// Term `n` of a matrix family computed along `path`.
pub fn path_term(kind: SeqKind, r: u32, n: u64, path: Path) -> Result<Mat3> {
    kind.require_matrix()?;
    match path {
        Path::Power => iterated_power(kind, r, n),
        Path::Oracle | Path::Recurrence => {
            let count = usize::try_from(n + 1).map_err(|_| Error::InvalidArgument(format!("n = {n} too large")))?;
            let prefix = iterated_terms(IbtSpec::new(kind, r, count)?, path)?;
            let mut terms = prefix.terms.matrices().expect("matrix kind").to_vec();
            Ok(terms.pop().expect("count is positive"))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchCell {
    pub path: Path,
    pub r: u32,
    pub n: u64,
    /// Median wall time over the repeats, in nanoseconds.
    pub median_ns: u128,
    pub mat_mul: u64,
    pub mat_linear: u64,
    /// Whether this path's value equals the power-path value at the same `n`.
    pub agrees: bool,
}

impl BenchCell {
    pub fn ops(&self) -> u64 {
        self.mat_mul + self.mat_linear
    }
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort();
    xs[xs.len() / 2]
}

/// One timed and counted run per repeat, after a single correctness cross-check.
pub fn bench_cell(kind: SeqKind, r: u32, n: u64, path: Path, repeats: usize, reference: &Mat3) -> Result<BenchCell> {
    if repeats == 0 {
        return Err(Error::InvalidArgument("repeats must be at least 1".into()));
    }
    let (value, counts): (Result<Mat3>, OpCounts) = measure(|| path_term(kind, r, n, path));
    let agrees = value? == *reference;
    let mut times = Vec::with_capacity(repeats);
    for _ in 0..repeats {
        let start = Instant::now();
        let out = path_term(kind, r, n, path)?;
        times.push(start.elapsed());
        std::hint::black_box(out);
    }
    Ok(BenchCell {
        path,
        r,
        n,
        median_ns: median(times).as_nanos(),
        mat_mul: counts.mat_mul,
        mat_linear: counts.mat_linear,
        agrees,
    })
}

/// Every path on every `n`, ordered by path then `n`.
pub fn bench(kind: SeqKind, r: u32, n_list: &[u64], repeats: usize, paths: &[Path]) -> Result<Vec<BenchCell>> {
    kind.require_matrix()?;
    let references = n_list
        .iter()
        .map(|&n| iterated_power(kind, r, n))
        .collect::<Result<Vec<_>>>()?;
    let mut cells = Vec::new();
    for &path in paths {
        for (&n, reference) in n_list.iter().zip(&references) {
            cells.push(bench_cell(kind, r, n, path, repeats, reference)?);
        }
    }
    Ok(cells)
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Growth exponent of the operation count of `path` across `cells`.
pub fn op_growth(cells: &[BenchCell], path: Path) -> Option<f64> {
    let points: Vec<(f64, f64)> = cells
        .iter()
        .filter(|c| c.path == path)
        .map(|c| (c.n as f64, c.ops() as f64))
        .collect();
    loglog_slope(&points)
}

/// Growth exponent of the median wall time of `path` across `cells`.
pub fn time_growth(cells: &[BenchCell], path: Path) -> Option<f64> {
    let points: Vec<(f64, f64)> = cells
        .iter()
        .filter(|c| c.path == path)
        .map(|c| (c.n as f64, c.median_ns as f64))
        .collect();
    loglog_slope(&points)
}
