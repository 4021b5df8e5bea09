//! The binomial transform and three ways to compute its `r`-fold iterate on
//! the matrix families.
//!
//! * [`iterated_oracle`] applies the definition `r` times: O(N²·r) matrix ops.
//!   It is the ground truth every other path is compared against.
//! * [`iterated_recurrence`] runs the order-3 recurrence with coefficients
//!   `3r`, `3r²−1`, `r³−r+1`, seeded from the closed seed formulas: O(N).
//! * [`iterated_power`] uses `b(n) = (r·I + 𝒫₁)ⁿ` and `c(n) = ℛ₀·b(n)`:
//!   O(log n) matrix products for one index.

use num_bigint::BigInt;
use serde::Serialize;

use crate::analysis::report::{ids, ReportParams, ReportValue, VerificationReport};
use crate::error::{Error, Result};
use crate::exactmat::{binomial_row, mat_det, mat_pow, Element, Mat3};
use crate::sequences::{matrix_seeds, padovan_matrix_seeds, seq_prefix, SeqKind, Terms};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IbtSpec {
    pub kind: SeqKind,
    pub r: u32,
    pub count: usize,
}

impl IbtSpec {
    pub fn new(kind: SeqKind, r: u32, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidArgument("term count must be at least 1".into()));
        }
        Ok(IbtSpec { kind, r, count })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Path {
    Oracle,
    Recurrence,
    Power,
}

impl Path {
    pub const ALL: [Path; 3] = [Path::Oracle, Path::Recurrence, Path::Power];

    pub fn name(self) -> &'static str {
        match self {
            Path::Oracle => "oracle",
            Path::Recurrence => "recurrence",
            Path::Power => "power",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IbtPrefix {
    pub spec: IbtSpec,
    pub terms: Terms,
    pub path: Path,
}

/// `out[n] = Σᵢ C(n,i)·x[i]`. Lower-triangular, so the output has the input's length.
pub fn binomial_transform<T: Element>(xs: &[T]) -> Vec<T> {
    (0..xs.len())
        .map(|n| {
            let row = binomial_row(n);
            xs[..=n]
                .iter()
                .zip(row.iter())
                .fold(xs[0].zero_like(), |acc, (x, c)| acc.plus_scaled(c, x))
        })
        .collect()
}

fn iterate<T: Element>(mut xs: Vec<T>, r: u32) -> Vec<T> {
    for _ in 0..r {
        xs = binomial_transform(&xs);
    }
    xs
}

/// Applies the binomial transform `r` times to the first `count` base terms.
pub fn iterated_oracle(spec: IbtSpec) -> Result<IbtPrefix> {
    let base = seq_prefix(spec.kind, spec.count)?;
    let terms = match base.terms {
        Terms::Scalar(xs) => Terms::Scalar(iterate(xs, spec.r)),
        Terms::Matrix(xs) => Terms::Matrix(iterate(xs, spec.r)),
    };
    Ok(IbtPrefix {
        spec,
        terms,
        path: Path::Oracle,
    })
}

/// Oracle terms of a matrix family as a plain vector.
pub fn oracle_matrices(kind: SeqKind, r: u32, count: usize) -> Result<Vec<Mat3>> {
    kind.require_matrix()?;
    let prefix = iterated_oracle(IbtSpec::new(kind, r, count)?)?;
    match prefix.terms {
        Terms::Matrix(v) => Ok(v),
        Terms::Scalar(_) => unreachable!("matrix kind yields matrices"),
    }
}

/// `[3r, 3r²−1, r³−r+1]`: `t(n+3) = 3r·t(n+2) − (3r²−1)·t(n+1) + (r³−r+1)·t(n)`.
pub fn recurrence_coefficients(r: u32) -> [BigInt; 3] {
    let r = BigInt::from(r);
    let r2 = &r * &r;
    let r3 = &r2 * &r;
    [
        &r * 3,
        &r2 * 3 - 1,
        &r3 - &r + 1,
    ]
}

/// Closed seed formulas: `x₀`, `r·x₀ + x₁`, `r²·x₀ + 2r·x₁ + x₂` over the base seeds.
pub fn seed_terms(kind: SeqKind, r: u32) -> Result<[Mat3; 3]> {
    let [x0, x1, x2] = matrix_seeds(kind)?;
    let r = BigInt::from(r);
    let first = x0.scale(&r).plus(&x1);
    let second = x0.scale(&(&r * &r)).add_scaled(&(&r * 2), &x1).plus(&x2);
    Ok([x0, first, second])
}

/// Closed form of term 3: `(r³+1)·x₀ + (3r²+1)·x₁ + 3r·x₂`.
pub fn third_term_formula(kind: SeqKind, r: u32) -> Result<Mat3> {
    let [x0, x1, x2] = matrix_seeds(kind)?;
    let r = BigInt::from(r);
    let r2 = &r * &r;
    Ok(x0
        .scale(&(&r2 * &r + 1))
        .add_scaled(&(&r2 * 3 + 1), &x1)
        .add_scaled(&(&r * 3), &x2))
}

/// Extends three seeds by the order-3 recurrence for parameter `r`.
pub fn extend_by_recurrence<T: Element>(seeds: [T; 3], r: u32, count: usize) -> Vec<T> {
    let [a, b, c] = recurrence_coefficients(r);
    let neg_b = -b;
    let mut out: Vec<T> = seeds.into_iter().take(count).collect();
    while out.len() < count {
        let n = out.len() - 3;
        let next = out[n + 2]
            .zero_like()
            .plus_scaled(&a, &out[n + 2])
            .plus_scaled(&neg_b, &out[n + 1])
            .plus_scaled(&c, &out[n]);
        out.push(next);
    }
    out
}

/// Recurrence path; matrix families only.
///
/// At `r = 0` the coefficients degenerate to `t(n+3) = t(n+1) + t(n)`, so the
/// same code reproduces the untransformed sequence.
pub fn iterated_recurrence(spec: IbtSpec) -> Result<IbtPrefix> {
    let seeds = seed_terms(spec.kind, spec.r)?;
    Ok(IbtPrefix {
        spec,
        terms: Terms::Matrix(extend_by_recurrence(seeds, spec.r, spec.count)),
        path: Path::Recurrence,
    })
}

/// `r·I + 𝒫₁`, the generator of the Padovan transform family.
pub fn power_base(r: u32) -> Mat3 {
    let [p0, p1, _] = padovan_matrix_seeds();
    p0.scale(&BigInt::from(r)).plus(&p1)
}

/// Term `n` by binary exponentiation; matrix families only.
pub fn iterated_power(kind: SeqKind, r: u32, n: u64) -> Result<Mat3> {
    let b = mat_pow(&power_base(r), n);
    match kind.require_matrix()? {
        SeqKind::PadovanMatrix => Ok(b),
        _ => Ok(&matrix_seeds(kind)?[0] * &b),
    }
}

/// Terms `0..count` on the requested path.
pub fn iterated_terms(spec: IbtSpec, path: Path) -> Result<IbtPrefix> {
    match path {
        Path::Oracle => iterated_oracle(spec),
        Path::Recurrence => iterated_recurrence(spec),
        Path::Power => {
            let terms = (0..spec.count as u64)
                .map(|n| iterated_power(spec.kind, spec.r, n))
                .collect::<Result<Vec<_>>>()?;
            Ok(IbtPrefix {
                spec,
                terms: Terms::Matrix(terms),
                path: Path::Power,
            })
        }
    }
}

/// Which way of splitting term `n+2` by Pascal's rule to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PascalSplit {
    /// `t(n+2) = Σ_{j≤n+1} C(n+1,j)·(s(j) + s(j+1))`
    Full,
    /// `t(n+2) = t(n+1) + Σ_{i≤n} C(n,i)·(s(i+1) + s(i+2))`
    Shifted,
}

/// Checks term `n+2` at level `r` against a sum over level `r−1` (denoted `s` above).
pub fn pascal_split_check(kind: SeqKind, r: u32, n: usize, form: PascalSplit) -> Result<VerificationReport> {
    if r == 0 {
        return Err(Error::InvalidArgument("split identity needs r >= 1".into()));
    }
    let lower = oracle_matrices(kind, r - 1, n + 3)?;
    let lhs = iterated_power(kind, r, n as u64 + 2)?;
    let (id, rhs) = match form {
        PascalSplit::Full => {
            let row = binomial_row(n + 1);
            let sum = (0..=n + 1).fold(Mat3::zero(), |acc, j| {
                acc.add_scaled(&row[j], &lower[j].plus(&lower[j + 1]))
            });
            (ids::PASCAL_SPLIT, sum)
        }
        PascalSplit::Shifted => {
            let row = binomial_row(n);
            let sum = (0..=n).fold(iterated_power(kind, r, n as u64 + 1)?, |acc, i| {
                acc.add_scaled(&row[i], &lower[i + 1].plus(&lower[i + 2]))
            });
            (ids::PASCAL_SPLIT_SHIFTED, sum)
        }
    };
    Ok(VerificationReport::exact(id, ReportParams::new(kind, r, n as u64), lhs, rhs))
}

/// Both split forms at one grid point.
pub fn pascal_split_reports(kind: SeqKind, r: u32, n: usize) -> Result<Vec<VerificationReport>> {
    Ok(vec![
        pascal_split_check(kind, r, n, PascalSplit::Full)?,
        pascal_split_check(kind, r, n, PascalSplit::Shifted)?,
    ])
}

/// Recurrence and power paths against the oracle for terms `0..count`.
pub fn path_agreement_reports(kind: SeqKind, r: u32, count: usize) -> Result<Vec<VerificationReport>> {
    let spec = IbtSpec::new(kind, r, count)?;
    let oracle = oracle_matrices(kind, r, count)?;
    let recurrence = iterated_recurrence(spec)?.terms;
    let recurrence = recurrence.matrices().expect("matrix path");
    let mut out = Vec::with_capacity(2 * count);
    for (n, expected) in oracle.iter().enumerate() {
        let params = ReportParams::new(kind, r, n as u64);
        out.push(VerificationReport::exact(
            ids::PATH_RECURRENCE,
            params.clone(),
            recurrence[n].clone(),
            expected.clone(),
        ));
        out.push(VerificationReport::exact(
            ids::PATH_POWER,
            params,
            iterated_power(kind, r, n as u64)?,
            expected.clone(),
        ));
    }
    Ok(out)
}

/// Closed forms of terms 1, 2 and 3 against the oracle.
pub fn seed_formula_reports(kind: SeqKind, r: u32) -> Result<Vec<VerificationReport>> {
    let oracle = oracle_matrices(kind, r, 4)?;
    let [_, first, second] = seed_terms(kind, r)?;
    let third = third_term_formula(kind, r)?;
    Ok([(ids::SEED_FIRST, 1, first), (ids::SEED_SECOND, 2, second), (ids::SEED_THIRD, 3, third)]
        .into_iter()
        .map(|(id, n, formula)| {
            VerificationReport::exact(id, ReportParams::new(kind, r, n), formula, oracle[n as usize].clone())
        })
        .collect())
}

/// `det b(n) = (r³−r+1)ⁿ` for `n in 0..=n_max`, terms from the recurrence path.
pub fn determinant_reports(r: u32, n_max: usize) -> Result<Vec<VerificationReport>> {
    let kind = SeqKind::PadovanMatrix;
    let terms = iterated_recurrence(IbtSpec::new(kind, r, n_max + 1)?)?.terms;
    let [_, _, c] = recurrence_coefficients(r);
    Ok(terms
        .matrices()
        .expect("matrix path")
        .iter()
        .enumerate()
        .map(|(n, b)| {
            let det = mat_det(b);
            let expected = num_traits::pow(c.clone(), n);
            VerificationReport {
                identity_id: ids::DETERMINANT.to_owned(),
                params: ReportParams::new(kind, r, n as u64),
                matched: det == expected,
                lhs: ReportValue::Integer(det),
                rhs: ReportValue::Integer(expected),
                note: String::new(),
            }
        })
        .collect())
}
