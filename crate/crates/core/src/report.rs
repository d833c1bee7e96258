//! CSV and JSON rendering of reports and figure tables.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bounds::BoundReport;
use crate::figures::FigureTable;
use crate::runner::SweepSummary;

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros
/// removed, scientific notation outside `[1e-4, 1e12)`. Non-finite values
/// become an empty string.
pub fn fmt_sig(x: f64) -> String {
    const DIGITS: i32 = 12;
    if !x.is_finite() {
        return String::new();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..DIGITS).contains(&exp) {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (DIGITS - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// A verify row: the report plus the state it was computed on.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub state: String,
    #[serde(flatten)]
    pub report: BoundReport,
}

pub const VERIFY_COLUMNS: [&str; 9] = [
    "state", "theorem", "alpha", "lhs", "rhs", "slack", "status", "orderings", "note",
];

pub fn verify_csv(rows: &[VerifyRow]) -> String {
    let mut out = VERIFY_COLUMNS.join(",");
    out.push('\n');
    for row in rows {
        let r = &row.report;
        let fields = [
            csv_field(&row.state),
            r.theorem.to_string(),
            fmt_sig(r.alpha),
            fmt_sig(r.lhs),
            fmt_sig(r.rhs),
            fmt_sig(r.slack),
            r.status.as_str().to_string(),
            csv_field(&r.orderings_label()),
            csv_field(r.note.as_deref().unwrap_or("")),
        ];
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn verify_json(rows: &[VerifyRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize") + "\n"
}

pub fn figure_csv(table: &FigureTable) -> String {
    let mut out = table.columns.join(",");
    out.push('\n');
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(|&v| fmt_sig(v)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn figure_json(table: &FigureTable) -> String {
    serde_json::to_string_pretty(table).expect("table serializes") + "\n"
}

pub const SWEEP_COLUMNS: [&str; 7] = [
    "theorem",
    "evaluated",
    "satisfied",
    "violations",
    "not_applicable",
    "min_slack",
    "mean_slack",
];

pub fn sweep_csv(summary: &SweepSummary) -> String {
    let mut out = SWEEP_COLUMNS.join(",");
    out.push('\n');
    for r in &summary.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.theorem,
            r.evaluated,
            r.satisfied,
            r.violations,
            r.not_applicable,
            fmt_sig(r.min_slack),
            fmt_sig(r.mean_slack)
        );
    }
    out
}

pub fn sweep_json(summary: &SweepSummary) -> String {
    serde_json::to_string_pretty(summary).expect("summary serializes") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g() {
        assert_eq!(fmt_sig(0.8), "0.8");
        assert_eq!(fmt_sig(1.0), "1");
        assert_eq!(fmt_sig(2.0 * 3f64.sqrt() / 5.0), "0.692820323028");
        assert_eq!(fmt_sig(-0.5), "-0.5");
        assert_eq!(fmt_sig(1.5e-7), "1.5e-07");
        assert_eq!(fmt_sig(123456.0), "123456");
        assert_eq!(fmt_sig(1e13), "1e+13");
        assert_eq!(fmt_sig(0.0001), "0.0001");
        assert_eq!(fmt_sig(f64::NAN), "");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("plain"), "plain");
    }
}
