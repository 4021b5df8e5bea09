use std::collections::BTreeMap;

use clap::ValueEnum;
use ibt_core::analysis::report::{ids, sort_reports, ReportValue, VerificationReport};
use ibt_core::analysis::{binet_reports, gf_reports, identity_suite, plastic_radical_check, plastic_ratio_check};
use ibt_core::analysis::sums::{paper_sum_check, telescoped_sum_check, SumDiscrepancy};
use ibt_core::bench::{bench as run_bench, op_growth};
use ibt_core::transform::{
    determinant_reports, iterated_power, iterated_terms, pascal_split_reports, path_agreement_reports,
    seed_formula_reports, IbtSpec, Path,
};
use ibt_core::{Error, SeqKind, Term};
use serde_json::{json, Value};

use crate::record::{OutputRecord, Timing};

pub enum Failure {
    /// Bad flags or parameters; exit code 2.
    Usage(String),
    Other(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::NotMatrixKind(_) | Error::DegenerateRoots(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Other(other.into()),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Other(e.into())
    }
}

pub struct Outcome {
    pub record: OutputRecord,
    /// False when a check failed; maps to exit code 1.
    pub ok: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenPath {
    Oracle,
    Recurrence,
    Power,
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    #[value(name = "lemma21")]
    PascalSplit,
    Recurrence,
    Binet,
    Sums,
    Gf,
    Identities,
    Plastic,
}

fn term_json(n: u64, term: Term) -> Result<Value, Failure> {
    let value = match term {
        Term::Scalar(x) => ReportValue::Integer(x),
        Term::Matrix(m) => ReportValue::Matrix(m),
    };
    Ok(json!({ "n": n, "value": serde_json::to_value(value)? }))
}

fn resolve(kind: SeqKind, path: GenPath, single: bool) -> Result<Path, Failure> {
    match (kind.is_matrix(), path) {
        (false, GenPath::Oracle | GenPath::Auto) => Ok(Path::Oracle),
        (false, _) => Err(Failure::Usage(format!(
            "{kind} is only available on the oracle path"
        ))),
        (true, GenPath::Oracle) => Ok(Path::Oracle),
        (true, GenPath::Recurrence) => Ok(Path::Recurrence),
        (true, GenPath::Power) => Ok(Path::Power),
        (true, GenPath::Auto) if single => Ok(Path::Power),
        (true, GenPath::Auto) => Ok(Path::Recurrence),
    }
}

pub fn gen(kind: SeqKind, r: u32, count: usize, path: GenPath, at: Option<u64>) -> Result<Outcome, Failure> {
    let resolved = resolve(kind, path, at.is_some())?;
    let mut params = BTreeMap::from([("kind", json!(kind.name())), ("r", json!(r))]);
    let results = match at {
        Some(n) => {
            params.insert("at", json!(n));
            let term = match resolved {
                Path::Power => Term::Matrix(iterated_power(kind, r, n)?),
                _ => {
                    let len = usize::try_from(n + 1).map_err(|_| Failure::Usage(format!("index {n} too large")))?;
                    let prefix = iterated_terms(IbtSpec::new(kind, r, len)?, resolved)?;
                    prefix.terms.get(len - 1).expect("prefix has the requested length")
                }
            };
            vec![term_json(n, term)?]
        }
        None => {
            params.insert("count", json!(count));
            let prefix = iterated_terms(IbtSpec::new(kind, r, count)?, resolved)?;
            prefix
                .terms
                .iter()
                .enumerate()
                .map(|(n, t)| term_json(n as u64, t))
                .collect::<Result<_, _>>()?
        }
    };
    Ok(Outcome {
        record: OutputRecord::new("gen", params, results),
        ok: true,
    })
}

fn gather(
    parts: impl IntoIterator<Item = ibt_core::Result<Vec<VerificationReport>>>,
    into: &mut Vec<VerificationReport>,
) -> Result<(), Failure> {
    for part in parts {
        into.extend(part?);
    }
    Ok(())
}

fn grid<T>(
    r_range: std::ops::RangeInclusive<u32>,
    f: impl Fn(SeqKind, u32) -> ibt_core::Result<Vec<T>>,
) -> Vec<ibt_core::Result<Vec<T>>> {
    SeqKind::MATRIX
        .into_iter()
        .flat_map(|kind| r_range.clone().map(move |r| (kind, r)))
        .map(|(kind, r)| f(kind, r))
        .collect()
}

fn include(suite: Suite, which: Suite) -> bool {
    suite == Suite::All || suite == which
}

pub fn verify(suite: Suite, r_max: u32, n_max: usize, m_max: usize) -> Result<Outcome, Failure> {
    if r_max < 1 {
        return Err(Failure::Usage("--r-max must be at least 1".into()));
    }
    let mut reports = Vec::new();
    let mut summary = None;

    if include(suite, Suite::PascalSplit) {
        gather(
            grid(1..=r_max, |kind, r| {
                let mut out = Vec::new();
                for n in 0..=n_max {
                    out.extend(pascal_split_reports(kind, r, n)?);
                }
                Ok(out)
            }),
            &mut reports,
        )?;
    }
    if include(suite, Suite::Recurrence) {
        gather(grid(0..=r_max, |kind, r| path_agreement_reports(kind, r, n_max + 1)), &mut reports)?;
        gather(grid(1..=r_max, seed_formula_reports), &mut reports)?;
        gather((1..=r_max).map(|r| determinant_reports(r, n_max)), &mut reports)?;
    }
    if include(suite, Suite::Binet) {
        gather(grid(1..=r_max, |kind, r| binet_reports(kind, r, n_max as u64, 1e-6)), &mut reports)?;
    }
    if include(suite, Suite::Gf) {
        gather(grid(1..=r_max, |kind, r| gf_reports(kind, r, n_max + 1)), &mut reports)?;
    }
    if include(suite, Suite::Identities) {
        reports.extend(identity_suite(r_max, n_max, m_max)?);
    }
    if include(suite, Suite::Sums) {
        let mut sums = Vec::new();
        gather(
            grid(1..=r_max, |kind, r| {
                let mut out = Vec::new();
                for n in 1..=n_max.max(1) {
                    out.push(telescoped_sum_check(kind, r, n)?);
                    out.push(paper_sum_check(kind, r, n)?);
                }
                Ok(out)
            }),
            &mut sums,
        )?;
        summary = Some(SumDiscrepancy::evaluate(&sums)?.summary());
        reports.extend(sums);
    }
    if include(suite, Suite::Plastic) {
        for kind in [SeqKind::PadovanScalar, SeqKind::PerrinScalar] {
            reports.push(plastic_ratio_check(kind, n_max, 1e-10)?);
        }
        reports.push(plastic_radical_check(1e-20));
    }

    sort_reports(&mut reports);
    let ok = reports
        .iter()
        .all(|r| r.matched || r.identity_id == ids::PRINTED_SUM);
    let results = reports
        .iter()
        .map(|r| {
            let mut v = serde_json::to_value(r)?;
            if r.identity_id == ids::PRINTED_SUM {
                v["paper_formula_matches"] = Value::Bool(r.matched);
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    let params = BTreeMap::from([
        ("suite", serde_json::to_value(suite.to_possible_value().map(|v| v.get_name().to_owned()))?),
        ("r_max", json!(r_max)),
        ("n_max", json!(n_max)),
        ("m_max", json!(m_max)),
    ]);
    let mut record = OutputRecord::new("verify", params, results);
    record.discrepancy_summary = summary;
    Ok(Outcome { record, ok })
}

pub fn bench(kind: SeqKind, r: u32, n_list: &[u64], repeats: usize, paths: &[Path]) -> Result<Outcome, Failure> {
    if n_list.is_empty() {
        return Err(Failure::Usage("--n-list must name at least one index".into()));
    }
    if paths.is_empty() {
        return Err(Failure::Usage("--paths must name at least one path".into()));
    }
    let cells = run_bench(kind, r, n_list, repeats, paths)?;
    let results = cells
        .iter()
        .map(|c| {
            json!({
                "path": c.path.name(),
                "r": c.r,
                "n": c.n,
                "mat_mul": c.mat_mul,
                "mat_linear": c.mat_linear,
                "agrees": c.agrees,
            })
        })
        .collect();
    let timings = cells
        .iter()
        .map(|c| Timing {
            path: c.path.name().to_owned(),
            n: c.n,
            r: c.r,
            wall_ns: c.median_ns,
        })
        .collect();
    let growth = paths
        .iter()
        .filter_map(|&p| op_growth(&cells, p).map(|s| (p.name().to_owned(), s)))
        .collect::<BTreeMap<_, _>>();
    let params = BTreeMap::from([
        ("kind", json!(kind.name())),
        ("r", json!(r)),
        ("n_list", json!(n_list)),
        ("repeats", json!(repeats)),
        ("paths", json!(paths.iter().map(|p| p.name()).collect::<Vec<_>>())),
    ]);
    let mut record = OutputRecord::new("bench", params, results);
    record.timings = Some(timings);
    if !growth.is_empty() {
        record.growth_exponents = Some(growth);
    }
    let ok = cells.iter().all(|c| c.agrees);
    Ok(Outcome { record, ok })
}
