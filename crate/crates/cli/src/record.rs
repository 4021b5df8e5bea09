use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use ibt_core::analysis::report::ids;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub path: String,
    pub n: u64,
    pub r: u32,
    pub wall_ns: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub params: BTreeMap<&'static str, Value>,
    pub results: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<Timing>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub growth_exponents: Option<BTreeMap<String, f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy_summary: Option<String>,
}

impl OutputRecord {
    pub fn new(command: &'static str, params: BTreeMap<&'static str, Value>, results: Vec<Value>) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            command,
            params,
            results,
            timings: None,
            growth_exponents: None,
            discrepancy_summary: None,
        }
    }
}

pub fn render(record: &OutputRecord, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(record)? + "\n"),
        Format::Csv => csv_text(record),
        Format::Pretty => Ok(pretty_text(record)),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_text(record: &OutputRecord) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    match record.command {
        "gen" => {
            let matrix = record.results.first().is_some_and(|r| r["value"].is_array());
            if matrix {
                w.write_record(["n", "row", "col", "value"])?;
            } else {
                w.write_record(["n", "value"])?;
            }
            for term in &record.results {
                let n = cell(&term["n"]);
                match &term["value"] {
                    Value::Array(rows) => {
                        for (i, row) in rows.iter().enumerate() {
                            for (j, x) in row.as_array().into_iter().flatten().enumerate() {
                                w.write_record([n.clone(), i.to_string(), j.to_string(), cell(x)])?;
                            }
                        }
                    }
                    scalar => w.write_record([n.clone(), cell(scalar)])?,
                }
            }
        }
        "verify" => {
            w.write_record(["identity_id", "kind", "r", "n", "m", "matched", "paper_formula_matches", "note"])?;
            for rep in &record.results {
                let p = &rep["params"];
                w.write_record([
                    cell(&rep["identity_id"]),
                    cell(&p["kind"]),
                    cell(&p["r"]),
                    cell(&p["n"]),
                    cell(&p["m"]),
                    cell(&rep["matched"]),
                    cell(&rep["paper_formula_matches"]),
                    cell(&rep["note"]),
                ])?;
            }
        }
        _ => {
            w.write_record(["path", "r", "n", "mat_mul", "mat_linear", "agrees", "median_ns"])?;
            let times = record.timings.as_deref().unwrap_or_default();
            for (c, t) in record.results.iter().zip(times) {
                w.write_record([
                    cell(&c["path"]),
                    cell(&c["r"]),
                    cell(&c["n"]),
                    cell(&c["mat_mul"]),
                    cell(&c["mat_linear"]),
                    cell(&c["agrees"]),
                    t.wall_ns.to_string(),
                ])?;
            }
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn matrix_lines(v: &Value) -> String {
    v.as_array()
        .into_iter()
        .flatten()
        .map(|row| {
            let cells: Vec<String> = row.as_array().into_iter().flatten().map(cell).collect();
            format!("  [{}]", cells.join(", "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn pretty_text(record: &OutputRecord) -> String {
    let mut out = String::new();
    let params: Vec<String> = record.params.iter().map(|(k, v)| format!("{k}={}", cell(v))).collect();
    let _ = writeln!(out, "{} ({})", record.command, params.join(", "));
    match record.command {
        "gen" => {
            for term in &record.results {
                match &term["value"] {
                    Value::Array(_) => {
                        let _ = writeln!(out, "n = {}\n{}", cell(&term["n"]), matrix_lines(&term["value"]));
                    }
                    v => {
                        let _ = writeln!(out, "n = {}: {}", cell(&term["n"]), cell(v));
                    }
                }
            }
        }
        "verify" => {
            let mut tally: BTreeMap<String, (usize, usize)> = BTreeMap::new();
            for rep in &record.results {
                let entry = tally.entry(cell(&rep["identity_id"])).or_default();
                entry.0 += 1;
                entry.1 += usize::from(rep["matched"] == Value::Bool(true));
            }
            for (id, (total, matched)) in &tally {
                let tag = if id == ids::PRINTED_SUM { " (report only)" } else { "" };
                let _ = writeln!(out, "{id:32} {matched:>6}/{total:<6}{tag}");
            }
            let mismatches = record
                .results
                .iter()
                .filter(|r| r["matched"] == Value::Bool(false) && r["identity_id"] != ids::PRINTED_SUM);
            for rep in mismatches {
                let _ = writeln!(
                    out,
                    "mismatch {} {} {}",
                    cell(&rep["identity_id"]),
                    rep["params"],
                    cell(&rep["note"])
                );
            }
            if let Some(summary) = &record.discrepancy_summary {
                let _ = writeln!(out, "\n{summary}");
            }
        }
        _ => {
            let _ = writeln!(out, "{:10} {:>6} {:>8} {:>10} {:>7} {:>14}", "path", "n", "mat_mul", "mat_linear", "agrees", "median_ns");
            let times = record.timings.as_deref().unwrap_or_default();
            for (c, t) in record.results.iter().zip(times) {
                let _ = writeln!(
                    out,
                    "{:10} {:>6} {:>8} {:>10} {:>7} {:>14}",
                    cell(&c["path"]),
                    cell(&c["n"]),
                    cell(&c["mat_mul"]),
                    cell(&c["mat_linear"]),
                    cell(&c["agrees"]),
                    t.wall_ns
                );
            }
            for (path, slope) in record.growth_exponents.iter().flatten() {
                let _ = writeln!(out, "op-count growth exponent {path}: {slope:.3}");
            }
        }
    }
    out
}
