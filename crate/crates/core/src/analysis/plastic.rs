//! Consecutive-term ratios of the scalar sequences against the plastic constant.

use num_bigint::BigInt;

use super::hifloat::HiFloat;
use super::report::{ids, ReportParams, ReportValue, VerificationReport};
use super::roots::PlasticConstant;
use crate::error::{Error, Result};
use crate::sequences::{seq_prefix, SeqKind};

/// `(t(n+1)/t(n), |t(n+1)/t(n) − α|)` for a scalar kind.
pub fn plastic_ratio(kind: SeqKind, n: usize) -> Result<(HiFloat, HiFloat)> {
    if kind.is_matrix() {
        return Err(Error::InvalidArgument(format!("{kind} has no scalar ratio")));
    }
    if n < 2 {
        // R₁ = 0
        return Err(Error::InvalidArgument("ratio index n must be at least 2".into()));
    }
    let prefix = seq_prefix(kind, n + 2)?;
    let terms: &[BigInt] = prefix.terms.scalars().expect("scalar kind");
    let ratio = &HiFloat::from_bigint(&terms[n + 1]) / &HiFloat::from_bigint(&terms[n]);
    let distance = (&ratio - &PlasticConstant::radical().value).abs();
    Ok((ratio, distance))
}

pub fn plastic_ratio_check(kind: SeqKind, n: usize, tolerance: f64) -> Result<VerificationReport> {
    let (ratio, distance) = plastic_ratio(kind, n)?;
    Ok(VerificationReport {
        identity_id: ids::PLASTIC_RATIO.to_owned(),
        params: ReportParams {
            kind: Some(kind),
            r: None,
            n: Some(n as u64),
            m: None,
        },
        lhs: ReportValue::Decimal(ratio.to_sci(40)),
        rhs: ReportValue::Decimal(PlasticConstant::radical().value.to_sci(40)),
        matched: distance < HiFloat::from_f64(tolerance),
        note: format!("distance {}", distance.to_sci(3)),
    })
}

/// The radical expression against an independently computed real root.
pub fn plastic_radical_check(tolerance: f64) -> VerificationReport {
    let radical = PlasticConstant::radical().value;
    let newton = PlasticConstant::newton().value;
    let distance = (&radical - &newton).abs();
    VerificationReport {
        identity_id: ids::PLASTIC_RADICAL.to_owned(),
        params: ReportParams::default(),
        lhs: ReportValue::Decimal(radical.to_sci(60)),
        rhs: ReportValue::Decimal(newton.to_sci(60)),
        matched: distance < HiFloat::from_f64(tolerance),
        note: format!("distance {}", distance.to_sci(3)),
    }
}
