use std::fmt::Write;
use std::str::FromStr;

use serde_json::{json, Value};

use super::{IntersectingPattern, PatternTable};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" | "txt" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

fn table_value(table: &PatternTable) -> Value {
    let spec = table.spec.map_or(
        Value::Null,
        |s| json!({ "m": s.m(), "s": s.scale(), "r_min": s.r_min(), "r_max": s.r_max() }),
    );
    json!({
        "spec": spec,
        "gauge": { "h_cm": table.gauge.height, "w_cm": table.gauge.width },
        "foundation": table.foundation,
        "rows": table.rows,
        "total": table.total,
        "warnings": table.warnings,
    })
}

fn table_csv(table: &PatternTable, out: &mut String) {
    out.push_str("round,stitches,delta\n");
    for row in &table.rows {
        let _ = writeln!(out, "{},{},{}", row.round, row.stitches, row.delta);
    }
}

fn table_text(table: &PatternTable, out: &mut String) {
    if table.foundation > 0 {
        let _ = writeln!(out, "Foundation: {} sts", table.foundation);
    }
    for row in &table.rows {
        if row.round == 1 && table.foundation == 0 {
            let _ = writeln!(out, "Round 1: {} sts", row.stitches);
        } else {
            let _ = writeln!(
                out,
                "Round {}: {} sts ({:+} evenly spaced)",
                row.round, row.stitches, row.delta
            );
        }
    }
    for w in &table.warnings {
        let _ = writeln!(out, "Warning (round {}): {}", w.round, w.message);
    }
    let _ = writeln!(out, "Total: {} sts", table.total);
}

/// Renders a pattern table. Output is a pure function of the table.
pub fn render_table(table: &PatternTable, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => table_text(table, &mut out),
        Format::Csv => table_csv(table, &mut out),
        Format::Json => {
            out = serde_json::to_string_pretty(&table_value(table)).expect("table serializes");
            out.push('\n');
        }
    }
    out
}

/// Renders pre-intersection rounds followed by the per-quarter schedule.
///
/// CSV output is two tables separated by a blank line; the second uses the
/// header `round,n_inner,move_in,inc_inner,n_outer,inc_outer`.
pub fn render_intersecting(plan: &IntersectingPattern, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            table_csv(&plan.pre, &mut out);
            out.push('\n');
            out.push_str("round,n_inner,move_in,inc_inner,n_outer,inc_outer\n");
            for r in plan.rows() {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.round, r.n_inner, r.move_in, r.inc_inner, r.n_outer, r.inc_outer
                );
            }
        }
        Format::Text => {
            let mut pre = plan.pre.clone();
            pre.warnings.clear();
            table_text(&pre, &mut out);
            let starts: Vec<String> = plan.quarters.iter().map(|q| q.start.to_string()).collect();
            let _ = writeln!(
                out,
                "Split into four quarters of {} sts; counts below are per quarter.",
                starts.join("/")
            );
            for r in plan.rows() {
                let _ = writeln!(
                    out,
                    "Round {}: inner {} sts (move in {}, +{} inc), outer {} sts (+{} inc)",
                    r.round, r.n_inner, r.move_in, r.inc_inner, r.n_outer, r.inc_outer
                );
            }
            let _ = writeln!(out, "Total: {} sts", plan.total);
        }
        Format::Json => {
            let v = json!({
                "pre": table_value(&plan.pre),
                "start_round": plan.start_round,
                "quarters": plan.quarters,
                "total": plan.total,
            });
            out = serde_json::to_string_pretty(&v).expect("schedule serializes");
            out.push('\n');
        }
    }
    out
}
