//! Number formatting and record writers shared by the subcommands.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::value::RawValue;

/// Scientific notation with 9 significant digits and a signed exponent of at
/// least two digits: `-1.23456789e-05`. Non-finite values print as `NaN`,
/// `inf` and `-inf`.
pub fn sci(v: f64) -> String {
    if v.is_nan() {
        return "NaN".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    // -0 prints as 0
    let s = format!("{:.8e}", v + 0.0);
    let (mantissa, exp) = s.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

/// JSON number in the same format; `null` for non-finite values.
pub fn json_num(v: f64) -> Box<RawValue> {
    let text = if v.is_finite() { sci(v) } else { "null".into() };
    RawValue::from_string(text).expect("valid JSON number")
}

/// Writes rows as CSV with the given header. Each row must have one value per
/// column.
pub fn csv_table(header: &[&str], rows: &[Vec<f64>]) -> String {
    let mut out = String::with_capacity(rows.len() * header.len() * 16);
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        for (k, v) in row.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&sci(*v));
        }
        out.push('\n');
    }
    out
}

/// JSON array of objects keyed by `header`.
pub fn json_table(header: &[&str], rows: &[Vec<f64>]) -> String {
    let mut out = String::from("[\n");
    for (r, row) in rows.iter().enumerate() {
        out.push_str("  {");
        for (k, (name, v)) in header.iter().zip(row).enumerate() {
            if k > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "\"{name}\": {}", json_num(*v).get());
        }
        out.push('}');
        if r + 1 < rows.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("]\n");
    out
}

/// Pretty JSON for a serializable report.
pub fn json_report<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// Aligned `key  value` lines.
pub fn text_report(entries: &[(&str, String)]) -> String {
    let width = entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in entries {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}
