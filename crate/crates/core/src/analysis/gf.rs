//! Power-series expansion of the rational generating function
//! `N(x) / (1 − 3r·x + (3r²−1)·x² − (r³−r+1)·x³)`.

use num_bigint::BigInt;

use super::report::{ids, ReportParams, VerificationReport};
use crate::error::{Error, Result};
use crate::exactmat::{Element, Mat3};
use crate::sequences::SeqKind;
use crate::transform::{oracle_matrices, recurrence_coefficients, seed_terms};

/// Denominator coefficients `[1, −3r, 3r²−1, −(r³−r+1)]`.
pub fn gf_denominator(r: u32) -> [BigInt; 4] {
    let [a, b, c] = recurrence_coefficients(r);
    [BigInt::from(1), -a, b, -c]
}

/// Numerator `N₀ + N₁x + N₂x²` with `N₀ = t₀`, `N₁ = t₁ − 3r·t₀`, `N₂ = t₂ − 3r·t₁ + (3r²−1)·t₀`.
pub fn gf_numerator(kind: SeqKind, r: u32) -> Result<[Mat3; 3]> {
    let [t0, t1, t2] = seed_terms(kind, r)?;
    let [a, b, _] = recurrence_coefficients(r);
    let n1 = t1.add_scaled(&-&a, &t0);
    let n2 = t2.add_scaled(&-&a, &t1).add_scaled(&b, &t0);
    Ok([t0, n1, n2])
}

/// First `count` coefficients of `N(x)/D(x)` by series division.
pub fn gf_series(kind: SeqKind, r: u32, count: usize) -> Result<Vec<Mat3>> {
    if count == 0 {
        return Err(Error::InvalidArgument("series length must be at least 1".into()));
    }
    let numerator = gf_numerator(kind, r)?;
    let den = gf_denominator(r);
    // D(x)·A(x) = N(x) with D₀ = 1, so aₙ = Nₙ − Σⱼ Dⱼ·aₙ₋ⱼ
    let mut coeffs: Vec<Mat3> = Vec::with_capacity(count);
    for n in 0..count {
        let mut value = numerator.get(n).cloned().unwrap_or_else(Mat3::zero);
        for j in 1..=3.min(n) {
            value = value.plus_scaled(&-&den[j], &coeffs[n - j]);
        }
        coeffs.push(value);
    }
    Ok(coeffs)
}

/// Series coefficients against oracle terms `0..count`.
pub fn gf_reports(kind: SeqKind, r: u32, count: usize) -> Result<Vec<VerificationReport>> {
    let series = gf_series(kind, r, count)?;
    let oracle = oracle_matrices(kind, r, count)?;
    Ok(series
        .into_iter()
        .zip(oracle)
        .enumerate()
        .map(|(n, (s, o))| {
            VerificationReport::exact(ids::GENERATING_FUNCTION, ReportParams::new(kind, r, n as u64), s, o)
        })
        .collect())
}
