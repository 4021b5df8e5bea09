//! Product, difference and cross-family identities between the Padovan (`b`)
//! and Perrin (`c`) transform families, checked exhaustively on a grid.

use rayon::prelude::*;

use super::report::{ids, sort_reports, ReportParams, VerificationReport};
use crate::error::{Error, Result};
use crate::exactmat::{mat_adjugate, mat_det, Mat3};
use crate::sequences::{perrin_matrix_seeds, SeqKind};
use crate::transform::oracle_matrices;

struct Level {
    b: Vec<Mat3>,
    c: Vec<Mat3>,
}

fn level(r: u32, count: usize) -> Result<Level> {
    Ok(Level {
        b: oracle_matrices(SeqKind::PadovanMatrix, r, count)?,
        c: oracle_matrices(SeqKind::PerrinMatrix, r, count)?,
    })
}

fn reports_for_level(r: u32, cur: &Level, prev: &Level, n_max: usize, m_max: usize) -> Vec<VerificationReport> {
    let (b, c) = (&cur.b, &cur.c);
    let pad = SeqKind::PadovanMatrix;
    let per = SeqKind::PerrinMatrix;
    let r0 = perrin_matrix_seeds()[0].clone();
    let det_r0 = mat_det(&r0);
    let adj_r0 = mat_adjugate(&r0);
    let mut out = Vec::new();

    for n in 0..=n_max {
        for m in 0..=m_max {
            let at = |kind| ReportParams::new(kind, r, n as u64).with_m(m as u64);
            let product_id = if n <= m { ids::PRODUCT } else { ids::PRODUCT_UNRESTRICTED };
            out.push(VerificationReport::exact(product_id, at(pad), &b[n] * &b[m], b[n + m].clone()));
            let bc = &b[n] * &c[m];
            let cb = &c[m] * &b[n];
            out.push(VerificationReport::exact(ids::MIXED_LEFT, at(per), bc.clone(), c[n + m].clone()));
            out.push(VerificationReport::exact(ids::MIXED_RIGHT, at(per), cb.clone(), c[n + m].clone()));
            out.push(VerificationReport::exact(ids::COMMUTE, at(per), bc, cb));
            if r >= 2 {
                out.push(VerificationReport::exact(
                    ids::CROSS_LEVEL,
                    at(per),
                    &prev.c[m] * &b[n],
                    &prev.b[m] * &c[n],
                ));
            }
        }

        let at = |kind| ReportParams::new(kind, r, n as u64);
        out.push(VerificationReport::exact(ids::PERRIN_FACTOR, at(per), c[n].clone(), &r0 * &b[n]));
        out.push(VerificationReport::exact(
            ids::PERRIN_INVERSE,
            at(pad),
            b[n].scale(&det_r0),
            &adj_r0 * &c[n],
        ));
        if r >= 2 {
            out.push(VerificationReport::exact(ids::DIFF_B, at(pad), &b[n + 1] - &b[n], &prev.b[1] * &b[n]));
            out.push(VerificationReport::exact(ids::DIFF_C, at(per), &c[n + 1] - &c[n], &prev.b[1] * &c[n]));
            out.push(VerificationReport::exact(
                ids::DIFF_C_BY_C1,
                at(per),
                &c[n + 1] - &c[n],
                &prev.c[1] * &b[n],
            ));
        }
    }
    out
}

/// Every family identity for `1 ≤ r ≤ r_max`, `0 ≤ n ≤ n_max`, `0 ≤ m ≤ m_max`,
/// sorted by identity id and parameters. Identities that refer to level
/// `r − 1` are checked from `r = 2`.
pub fn identity_suite(r_max: u32, n_max: usize, m_max: usize) -> Result<Vec<VerificationReport>> {
    if r_max < 2 {
        return Err(Error::InvalidArgument("identity suite needs r_max >= 2".into()));
    }
    let count = n_max + m_max + 2;
    let levels = (0..=r_max)
        .into_par_iter()
        .map(|r| level(r, count))
        .collect::<Result<Vec<_>>>()?;
    let mut reports: Vec<VerificationReport> = (1..=r_max)
        .into_par_iter()
        .flat_map_iter(|r| {
            let r_idx = r as usize;
            reports_for_level(r, &levels[r_idx], &levels[r_idx - 1], n_max, m_max)
        })
        .collect();
    sort_reports(&mut reports);
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let reports = identity_suite(2, 4, 4).unwrap();
        let find = |id: &str, kind: SeqKind, r: u32, n: u64, m: Option<u64>| {
            reports
                .iter()
                .find(|x| {
                    x.identity_id == id
                        && x.params == ReportParams { kind: Some(kind), r: Some(r), n: Some(n), m }
                })
                .unwrap_or_else(|| panic!("missing {id} r={r} n={n}"))
        };
        let first = find(ids::PRODUCT, SeqKind::PadovanMatrix, 1, 1, Some(1));
        assert!(first.matched);
        assert_eq!(
            first.rhs,
            Mat3::from_i64([[1, 2, 1], [1, 2, 2], [2, 3, 2]]).into()
        );
        assert!(find(ids::PERRIN_FACTOR, SeqKind::PerrinMatrix, 2, 4, None).matched);
        assert!(find(ids::DIFF_B, SeqKind::PadovanMatrix, 2, 3, None).matched);
        assert!(reports.iter().all(|x| x.matched));
    }

    #[test]
    fn output_is_sorted_and_deterministic() {
        let a = identity_suite(3, 3, 3).unwrap();
        let b = identity_suite(3, 3, 3).unwrap();
        assert_eq!(a, b);
        let mut sorted = a.clone();
        sort_reports(&mut sorted);
        assert_eq!(a, sorted);
    }

    #[test]
    fn both_product_regimes_present() {
        let reports = identity_suite(2, 3, 3).unwrap();
        assert!(reports.iter().any(|x| x.identity_id == ids::PRODUCT));
        assert!(reports.iter().any(|x| x.identity_id == ids::PRODUCT_UNRESTRICTED));
    }

    #[test]
    fn rejects_single_level() {
        assert!(identity_suite(1, 3, 3).is_err());
    }
}
