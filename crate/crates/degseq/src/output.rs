//! Text, JSON, CSV and Markdown renderings of every command result.
//!
//! Rationals are written as `"p/q"` strings in machine formats so no value
//! passes through floating point. All renderers are pure functions of their
//! input; equal inputs give byte-identical output.

use std::fmt::Write as _;

use degseq_core::bounds::{CertDetail, CertificateOutcome};
use degseq_core::graphicality::{Realization, Reason, Verdict};
use degseq_core::search::SearchRow;
use degseq_core::{DegreeSequence, Rational};
use serde_json::{json, Value};

use crate::table::{lookup, TableRow};
use crate::verify::VerificationReport;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
    Md,
}

fn frac(r: Rational) -> String {
    r.to_fraction_string()
}

fn json_doc(value: &Value) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// `(1^6, 4^1, 5^2)`: ascending blocks with explicit multiplicities.
pub fn ascending_blocks(seq: &DegreeSequence) -> String {
    let blocks: Vec<String> = seq
        .blocks()
        .into_iter()
        .rev()
        .map(|(v, k)| format!("{v}^{k}"))
        .collect();
    format!("({})", blocks.join(", "))
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `field,value` / `| field | value |` / `field: value` for flat records.
fn render_record(pairs: &[(&str, String)], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            out.push_str("field,value\n");
            for (k, v) in pairs {
                let _ = writeln!(out, "{},{}", k, csv_cell(v));
            }
        }
        OutputFormat::Md => {
            out.push_str("| field | value |\n|---|---|\n");
            for (k, v) in pairs {
                let _ = writeln!(out, "| {k} | {v} |");
            }
        }
        OutputFormat::Text | OutputFormat::Json => {
            for (k, v) in pairs {
                let _ = writeln!(out, "{k}: {v}");
            }
        }
    }
    out
}

pub fn reason_name(reason: &Reason) -> &'static str {
    match reason {
        Reason::ErdosGallaiPass => "ErdosGallaiPass",
        Reason::ErdosGallaiFail { .. } => "ErdosGallaiFail",
        Reason::OddSum => "OddSum",
        Reason::ValueOutOfRange { .. } => "ValueOutOfRange",
        Reason::HavelHakimiStuck { .. } => "HavelHakimiStuck",
    }
}

pub fn verdict_json(v: &Verdict) -> Value {
    let mut obj = json!({ "graphic": v.graphic, "reason": reason_name(&v.reason) });
    match v.reason {
        Reason::ErdosGallaiFail { k, lhs, rhs } => {
            obj["k"] = json!(k);
            obj["lhs"] = json!(lhs);
            obj["rhs"] = json!(rhs);
        }
        Reason::ValueOutOfRange { max, n } => {
            obj["max"] = json!(max);
            obj["n"] = json!(n);
        }
        Reason::HavelHakimiStuck {
            step,
            required,
            available,
        } => {
            obj["step"] = json!(step);
            obj["required"] = json!(required);
            obj["available"] = json!(available);
        }
        Reason::ErdosGallaiPass | Reason::OddSum => {}
    }
    obj
}

fn detail_name(d: &CertDetail) -> &'static str {
    match d {
        CertDetail::DFunction { .. } => "d_function",
        CertDetail::Regular => "regular",
        CertDetail::Regularity { .. } => "regularity",
        CertDetail::OddSum => "odd_sum",
        CertDetail::ValueOutOfRange { .. } => "value_out_of_range",
    }
}

fn theorem1_json(out: &CertificateOutcome) -> Value {
    json!({
        "status": out.status.to_string(),
        "detail": detail_name(&out.detail),
        "d_value": out.d_value().map(frac),
    })
}

fn theorem2_json(out: &CertificateOutcome) -> Value {
    match out.detail {
        CertDetail::Regularity {
            case,
            mean,
            rg,
            bound,
        } => json!({
            "status": out.status.to_string(),
            "detail": detail_name(&out.detail),
            "thm2_case": case.index(),
            "mean": frac(mean),
            "rg": frac(rg),
            "bound": frac(bound),
        }),
        _ => json!({
            "status": out.status.to_string(),
            "detail": detail_name(&out.detail),
            "thm2_case": Value::Null,
        }),
    }
}

fn theorem1_text(out: &CertificateOutcome) -> String {
    match out.detail {
        CertDetail::DFunction { d_value } => format!("{} (D = {d_value})", out.status),
        CertDetail::Regular => format!("{} (regular)", out.status),
        CertDetail::OddSum => format!("{} (odd sum)", out.status),
        CertDetail::ValueOutOfRange { max, n } => {
            format!("{} (value {max} exceeds n-1 = {})", out.status, n - 1)
        }
        CertDetail::Regularity { .. } => out.status.to_string(),
    }
}

fn theorem2_text(out: &CertificateOutcome) -> String {
    match out.detail {
        CertDetail::Regularity {
            case, rg, bound, ..
        } => {
            let cmp = if rg <= bound { "<=" } else { ">" };
            format!(
                "{} (case {}, rg {rg} {cmp} bound {bound})",
                out.status,
                case.index()
            )
        }
        _ => theorem1_text(out),
    }
}

/// Everything `check` reports about one sequence.
pub struct CheckResult {
    pub seq: DegreeSequence,
    pub verdict: Verdict,
    pub theorem1: CertificateOutcome,
    pub theorem2: CertificateOutcome,
}

impl CheckResult {
    pub fn new(seq: DegreeSequence) -> Self {
        use degseq_core::bounds::{theorem1_certify, theorem2_certify};
        use degseq_core::graphicality::erdos_gallai_check;
        CheckResult {
            verdict: erdos_gallai_check(&seq),
            theorem1: theorem1_certify(&seq),
            theorem2: theorem2_certify(&seq),
            seq,
        }
    }
}

fn stats_pairs(seq: &DegreeSequence) -> Vec<(&'static str, String)> {
    let st = seq.stats();
    vec![
        ("sequence", seq.to_string()),
        ("n", st.n.to_string()),
        ("s", st.s.to_string()),
        ("mean", frac(st.mean)),
        ("rg", frac(st.rg)),
        ("max_deg", st.max_deg.to_string()),
        ("min_deg", st.min_deg.to_string()),
        ("spread", st.spread.to_string()),
    ]
}

fn stats_json(seq: &DegreeSequence) -> Value {
    let st = seq.stats();
    json!({
        "sequence": seq.to_string(),
        "n": st.n,
        "s": st.s,
        "mean": frac(st.mean),
        "rg": frac(st.rg),
        "max_deg": st.max_deg,
        "min_deg": st.min_deg,
        "spread": st.spread,
    })
}

pub fn render_check(res: &CheckResult, format: OutputFormat) -> Result<String> {
    let thm2_case = match res.theorem2.detail {
        CertDetail::Regularity { case, .. } => Some(case.index()),
        _ => None,
    };
    match format {
        OutputFormat::Json => {
            let mut doc = stats_json(&res.seq);
            doc["graphic"] = json!(res.verdict.graphic);
            doc["erdos_gallai"] = verdict_json(&res.verdict);
            doc["theorem1"] = theorem1_json(&res.theorem1);
            doc["theorem2"] = theorem2_json(&res.theorem2);
            doc["d_value"] = json!(res.theorem1.d_value().map(frac));
            doc["thm2_case"] = json!(thm2_case);
            json_doc(&doc)
        }
        OutputFormat::Text => {
            let st = res.seq.stats();
            let mut out = String::new();
            let _ = writeln!(out, "sequence: {}", res.seq);
            let _ = writeln!(
                out,
                "n = {}, s = {}, mean = {}, rg = {}, max = {}, min = {}, spread = {}",
                st.n, st.s, st.mean, st.rg, st.max_deg, st.min_deg, st.spread
            );
            let _ = writeln!(out, "verdict: {}", res.verdict);
            let _ = writeln!(out, "theorem1: {}", theorem1_text(&res.theorem1));
            let _ = writeln!(out, "theorem2: {}", theorem2_text(&res.theorem2));
            Ok(out)
        }
        OutputFormat::Csv | OutputFormat::Md => {
            let mut pairs = stats_pairs(&res.seq);
            pairs.push(("graphic", res.verdict.graphic.to_string()));
            pairs.push(("eg_reason", reason_name(&res.verdict.reason).to_string()));
            if let Reason::ErdosGallaiFail { k, lhs, rhs } = res.verdict.reason {
                pairs.push(("eg_k", k.to_string()));
                pairs.push(("eg_lhs", lhs.to_string()));
                pairs.push(("eg_rhs", rhs.to_string()));
            }
            pairs.push(("thm1_status", res.theorem1.status.to_string()));
            pairs.push((
                "d_value",
                res.theorem1.d_value().map(frac).unwrap_or_default(),
            ));
            pairs.push(("thm2_status", res.theorem2.status.to_string()));
            pairs.push((
                "thm2_case",
                thm2_case.map(|c| c.to_string()).unwrap_or_default(),
            ));
            if let CertDetail::Regularity { bound, .. } = res.theorem2.detail {
                pairs.push(("thm2_bound", frac(bound)));
            }
            Ok(render_record(&pairs, format))
        }
    }
}

pub fn render_stats(seq: &DegreeSequence, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => json_doc(&stats_json(seq)),
        _ => Ok(render_record(&stats_pairs(seq), format)),
    }
}

/// A single derived sequence, as printed by `complement`.
pub fn render_sequence(label: &str, seq: &DegreeSequence, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => {
            json_doc(&json!({ label: seq.to_string(), "n": seq.len(), "s": seq.sum() }))
        }
        OutputFormat::Text => Ok(format!("{seq}\n")),
        _ => Ok(render_record(
            &[
                (label, seq.to_string()),
                ("n", seq.len().to_string()),
                ("s", seq.sum().to_string()),
            ],
            format,
        )),
    }
}

pub fn render_family(
    seq: &DegreeSequence,
    verdict: &Verdict,
    format: OutputFormat,
) -> Result<String> {
    match format {
        OutputFormat::Json => json_doc(&json!({
            "sequence": seq.to_string(),
            "graphic": verdict.graphic,
            "erdos_gallai": verdict_json(verdict),
        })),
        OutputFormat::Text => Ok(format!("{seq}\n{verdict}\n")),
        _ => {
            let mut pairs = vec![
                ("sequence", seq.to_string()),
                ("graphic", verdict.graphic.to_string()),
                ("eg_reason", reason_name(&verdict.reason).to_string()),
            ];
            if let Reason::ErdosGallaiFail { k, .. } = verdict.reason {
                pairs.push(("eg_k", k.to_string()));
            }
            Ok(render_record(&pairs, format))
        }
    }
}

/// Edge list `u v`, one per line, `u < v`, sorted; or the rejection.
pub fn render_realization(
    result: &std::result::Result<Realization, Verdict>,
    format: OutputFormat,
) -> Result<String> {
    match (result, format) {
        (Ok(g), OutputFormat::Json) => json_doc(&json!({
            "graphic": true,
            "n": g.n,
            "edges": g.edges.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        })),
        (Err(v), OutputFormat::Json) => json_doc(&verdict_json(v)),
        (Ok(g), OutputFormat::Csv) => {
            let mut out = String::from("u,v\n");
            for (u, v) in &g.edges {
                let _ = writeln!(out, "{u},{v}");
            }
            Ok(out)
        }
        (Ok(g), OutputFormat::Md) => {
            let mut out = String::from("| u | v |\n|---|---|\n");
            for (u, v) in &g.edges {
                let _ = writeln!(out, "| {u} | {v} |");
            }
            Ok(out)
        }
        (Ok(g), OutputFormat::Text) => {
            let mut out = String::new();
            for (u, v) in &g.edges {
                let _ = writeln!(out, "{u} {v}");
            }
            Ok(out)
        }
        (Err(v), _) => Ok(format!("{v}\n")),
    }
}

fn row_status(row: &SearchRow, table: &[TableRow]) -> &'static str {
    match lookup(table, row.n) {
        Some(t) if t.m == row.m => "match",
        Some(_) => "mismatch",
        None => "unreferenced",
    }
}

/// `mn` output; `status` compares each row with the reference table.
pub fn render_rows(rows: &[SearchRow], table: &[TableRow], format: OutputFormat) -> Result<String> {
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            let doc: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "m": r.m,
                        "witness": r.witness.to_string(),
                        "status": row_status(r, table),
                    })
                })
                .collect();
            return json_doc(&Value::Array(doc));
        }
        OutputFormat::Csv => {
            out.push_str("n,m,witness,status\n");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    r.n,
                    r.m,
                    csv_cell(&r.witness.to_string()),
                    row_status(r, table)
                );
            }
        }
        OutputFormat::Md => {
            out.push_str("| $n$ | $m(n)$ | Minimal Non-graphic Example |\n|---|---|---|\n");
            for r in rows {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} |",
                    r.n,
                    r.m,
                    ascending_blocks(&r.witness)
                );
            }
        }
        OutputFormat::Text => {
            let _ = writeln!(out, "{:>5} {:>5}  {:<40} status", "n", "m(n)", "witness");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:>5} {:>5}  {:<40} {}",
                    r.n,
                    r.m,
                    r.witness.to_string(),
                    row_status(r, table)
                );
            }
        }
    }
    Ok(out)
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

/// `verify-table` output. `m` and `witness` are the reference values;
/// `computed_m` and `witness_valid` are what this run found.
pub fn render_report(report: &VerificationReport, format: OutputFormat) -> Result<String> {
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            let doc: Vec<Value> = report
                .rows
                .iter()
                .map(|r| {
                    let c = r.witness_check;
                    json!({
                        "n": r.n,
                        "m": r.expected_m,
                        "witness": r.table_witness.to_string(),
                        "status": pass_fail(r.passed()),
                        "computed_m": r.computed_m,
                        "computed_witness": r.computed_witness.to_string(),
                        "witness_valid": c.passed(),
                        "witness_checks": {
                            "length": c.length_ok,
                            "even_sum": c.even_sum,
                            "mean_in_window": c.in_window,
                            "spread": c.spread_ok,
                            "non_graphic": c.non_graphic,
                        },
                    })
                })
                .collect();
            return json_doc(&Value::Array(doc));
        }
        OutputFormat::Csv => {
            out.push_str("n,m,witness,status,computed_m,witness_valid\n");
            for r in &report.rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.n,
                    r.expected_m,
                    csv_cell(&r.table_witness.to_string()),
                    pass_fail(r.passed()),
                    r.computed_m,
                    r.witness_check.passed()
                );
            }
        }
        OutputFormat::Md => {
            out.push_str(
                "| $n$ | $m(n)$ | Minimal Non-graphic Example | computed | witness | status |\n\
                 |---|---|---|---|---|---|\n",
            );
            for r in &report.rows {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} |",
                    r.n,
                    r.expected_m,
                    ascending_blocks(&r.table_witness),
                    r.computed_m,
                    pass_fail(r.witness_check.passed()),
                    pass_fail(r.passed())
                );
            }
        }
        OutputFormat::Text => {
            for r in &report.rows {
                let _ = writeln!(
                    out,
                    "n={:<3} table m={:<3} computed m={:<3} witness {:<4} {}",
                    r.n,
                    r.expected_m,
                    r.computed_m,
                    if r.witness_check.passed() {
                        "ok"
                    } else {
                        "BAD"
                    },
                    pass_fail(r.passed()).to_uppercase()
                );
            }
            let failed = report.failures().count();
            let _ = writeln!(
                out,
                "{} rows, {} passed, {} failed",
                report.rows.len(),
                report.rows.len() - failed,
                failed
            );
        }
    }
    Ok(out)
}
