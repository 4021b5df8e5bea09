//! Binet-form evaluation of the transformed matrix sequences.

use super::hifloat::{HiComplex, HiFloat};
use super::report::{ids, ReportParams, ReportValue, VerificationReport};
use super::roots::{distinct_roots, CubicRoots};
use crate::error::Result;
use crate::exactmat::Mat3;
use crate::sequences::SeqKind;
use crate::transform::{iterated_power, recurrence_coefficients, seed_terms};

/// Entrywise coefficients of `t(n) = X·λ₁ⁿ + Y·λ₂ⁿ + Z·λ₃ⁿ`.
#[derive(Debug, Clone)]
pub struct BinetCoefficients {
    pub kind: SeqKind,
    pub roots: CubicRoots,
    /// `[X, Y, Z]`, each a 3×3 grid of complex coefficients.
    pub coefficients: [[[HiComplex; 3]; 3]; 3],
}

fn to_complex(m: &Mat3) -> [[HiComplex; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| HiComplex::from_bigint(m.get(i, j))))
}

pub fn binet_coefficients(kind: SeqKind, r: u32) -> Result<BinetCoefficients> {
    let roots = distinct_roots(r)?;
    let [t0, t1, t2] = seed_terms(kind, r)?;
    let (t0, t1, t2) = (to_complex(&t0), to_complex(&t1), to_complex(&t2));
    let [a, _, c] = recurrence_coefficients(r).map(|x| HiComplex::from_bigint(&x));
    let lambdas = roots.all();

    let coefficients = std::array::from_fn(|k| {
        let own = lambdas[k];
        let (p, q) = match k {
            0 => (lambdas[1], lambdas[2]),
            1 => (lambdas[0], lambdas[2]),
            _ => (lambdas[0], lambdas[1]),
        };
        // (λ·t₂ − (3rλ − λ²)·t₁ + (r³−r+1)·t₀) / (λ(λ−λ')(λ−λ''))
        let w1 = &(&a * own) - &(own * own);
        let den = &(own * &(own - p)) * &(own - q);
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let num = &(&(own * &t2[i][j]) - &(&w1 * &t1[i][j])) + &(&c * &t0[i][j]);
                &num / &den
            })
        })
    });
    Ok(BinetCoefficients {
        kind,
        roots,
        coefficients,
    })
}

impl BinetCoefficients {
    /// The full complex Binet sum at index `n`.
    pub fn evaluate(&self, n: u64) -> [[HiComplex; 3]; 3] {
        let powers = self.roots.all().map(|l| l.powi(n));
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let [x, y, z] = &self.coefficients;
                let s = &(&x[i][j] * &powers[0]) + &(&y[i][j] * &powers[1]);
                &s + &(&z[i][j] * &powers[2])
            })
        })
    }
}

/// Real part of the Binet sum at index `n`.
pub fn binet_eval(kind: SeqKind, r: u32, n: u64) -> Result<[[HiFloat; 3]; 3]> {
    let coeffs = binet_coefficients(kind, r)?;
    Ok(coeffs.evaluate(n).map(|row| row.map(|z| z.re)))
}

/// Largest entrywise `|approx − exact| / max(|exact|, 1)`.
pub fn max_relative_error(approx: &[[HiFloat; 3]; 3], exact: &Mat3) -> HiFloat {
    let one = HiFloat::one();
    let mut worst = HiFloat::zero();
    for (i, row) in approx.iter().enumerate() {
        for (j, value) in row.iter().enumerate() {
            let e = HiFloat::from_bigint(exact.get(i, j));
            let err = &(value - &e).abs() / &e.abs().max(&one);
            worst = worst.max(&err);
        }
    }
    worst
}

/// Binet values against exact terms for `n in 0..=n_max`.
pub fn binet_reports(kind: SeqKind, r: u32, n_max: u64, tolerance: f64) -> Result<Vec<VerificationReport>> {
    let coeffs = binet_coefficients(kind, r)?;
    let tol = HiFloat::from_f64(tolerance);
    (0..=n_max)
        .map(|n| {
            let approx = coeffs.evaluate(n).map(|row| row.map(|z| z.re));
            let exact = iterated_power(kind, r, n)?;
            let err = max_relative_error(&approx, &exact);
            Ok(VerificationReport {
                identity_id: ids::BINET.to_owned(),
                params: ReportParams::new(kind, r, n),
                matched: err < tol,
                lhs: ReportValue::DecimalMatrix(approx.map(|row| row.map(|x| x.to_sci(30)))),
                rhs: ReportValue::Matrix(exact),
                note: format!("max relative error {}", err.to_sci(3)),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(approx: &[[HiFloat; 3]; 3], exact: &Mat3, tol: f64) -> bool {
        max_relative_error(approx, exact).to_f64() < tol
    }

    #[test]
    fn reproduces_first_terms() {
        let b = binet_coefficients(SeqKind::PadovanMatrix, 1).unwrap();
        let sum = b.evaluate(0).map(|row| row.map(|z| z.re));
        assert!(close(&sum, &Mat3::identity(), 1e-12));

        let b = binet_coefficients(SeqKind::PadovanMatrix, 2).unwrap();
        let first = b.evaluate(1).map(|row| row.map(|z| z.re));
        let expected = seed_terms(SeqKind::PadovanMatrix, 2).unwrap()[1].clone();
        assert!(close(&first, &expected, 1e-12));
    }

    #[test]
    fn imaginary_parts_vanish() {
        let c = binet_coefficients(SeqKind::PerrinMatrix, 1).unwrap();
        for n in 0..=20 {
            for z in c.evaluate(n).iter().flatten() {
                assert!(z.im.abs().to_f64() < 1e-9);
            }
        }
    }

    #[test]
    fn eval_examples() {
        let v = binet_eval(SeqKind::PadovanMatrix, 1, 3).unwrap();
        assert!(close(&v, &Mat3::from_i64([[2, 4, 3], [3, 5, 4], [4, 7, 5]]), 1e-12));
        let v = binet_eval(SeqKind::PerrinMatrix, 2, 10).unwrap();
        let exact = iterated_power(SeqKind::PerrinMatrix, 2, 10).unwrap();
        for (i, row) in v.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let rounded = x.to_f64().round() as i64;
                assert_eq!(num_bigint::BigInt::from(rounded), *exact.get(i, j));
            }
        }
    }

    #[test]
    fn report_grid_small() {
        for kind in SeqKind::MATRIX {
            let reports = binet_reports(kind, 2, 12, 1e-6).unwrap();
            assert_eq!(reports.len(), 13);
            assert!(reports.iter().all(|r| r.matched));
        }
    }
}
