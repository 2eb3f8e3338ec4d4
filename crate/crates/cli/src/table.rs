//! CSV and JSON serializations of sweep results.
//!
//! Column order is fixed (`channel,alpha,p,mean_qfi,chi_squared`), reals
//! are rendered with 12 significant digits and a `.` decimal separator,
//! and the infinite `chi_squared` sentinel is written as `inf`. Identical
//! inputs always serialize to identical bytes.

use std::fmt::Write as _;

use serde::Serialize;

use qfi_core::{ChannelKind, ResultRow, SweepSpec};

pub const CSV_HEADER: &str = "channel,alpha,p,mean_qfi,chi_squared";

/// A parse failure with the 1-based line it happened on.
#[derive(Debug, Clone, PartialEq)]
pub struct TableError {
    pub line: usize,
    pub reason: String,
}

impl std::fmt::Display for TableError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.reason)
    }
}

impl std::error::Error for TableError {}

/// Renders a value with `sig` significant digits, trimming trailing zeros,
/// switching to exponent notation outside a readable magnitude window.
/// Non-finite values render as `inf`/`-inf`/`nan`.
pub fn format_sig(x: f64, sig: usize) -> String {
    assert!(sig >= 1);
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let scientific = format!("{:.*e}", sig - 1, x);
    let (mantissa, exponent) = scientific.split_once('e').expect("float in exponent form");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if exponent >= -4 && (exponent as i64) < sig as i64 {
        fixed_notation(mantissa, exponent)
    } else {
        format!("{}e{exponent}", trim_fraction(mantissa))
    }
}

/// 12 significant digits: enough to make regression byte-diffs meaningful
/// without freezing eigensolver last-bit noise.
pub fn format_sig12(x: f64) -> String {
    format_sig(x, 12)
}

fn fixed_notation(mantissa: &str, exponent: i32) -> String {
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let body = if exponent >= 0 {
        let point = exponent as usize + 1;
        if point >= digits.len() {
            let mut s = digits.clone();
            s.push_str(&"0".repeat(point - digits.len()));
            s
        } else {
            trim_fraction(&format!("{}.{}", &digits[..point], &digits[point..]))
        }
    } else {
        let zeros = "0".repeat((-exponent - 1) as usize);
        trim_fraction(&format!("0.{zeros}{digits}"))
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

fn trim_fraction(s: &str) -> String {
    if !s.contains('.') {
        return s.into();
    }
    s.trim_end_matches('0').trim_end_matches('.').into()
}

/// Renders rows as CSV (UTF-8, `\n` line endings, fixed header).
pub fn to_csv(rows: &[ResultRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            row.channel.as_str(),
            format_sig12(row.alpha),
            format_sig12(row.p),
            format_sig12(row.mean_qfi),
            format_sig12(row.chi_squared),
        );
    }
    out
}

/// Parses a table previously written by [`to_csv`].
pub fn parse_csv(text: &str) -> Result<Vec<ResultRow>, TableError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == CSV_HEADER => {}
        Some((_, header)) => {
            return Err(TableError {
                line: 1,
                reason: format!("unexpected header {header:?}, expected {CSV_HEADER:?}"),
            })
        }
        None => return Err(TableError { line: 1, reason: "empty input".into() }),
    }
    let mut rows = Vec::new();
    for (index, raw) in lines {
        let line = index + 1;
        if raw.is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split(',').collect();
        if fields.len() != 5 {
            return Err(TableError {
                line,
                reason: format!("expected 5 fields, found {}", fields.len()),
            });
        }
        let channel: ChannelKind = fields[0]
            .parse()
            .map_err(|e| TableError { line, reason: format!("{e}") })?;
        let mut numbers = [0.0f64; 4];
        for (slot, field) in numbers.iter_mut().zip(&fields[1..]) {
            *slot = field
                .parse()
                .map_err(|_| TableError { line, reason: format!("bad number {field:?}") })?;
        }
        rows.push(ResultRow {
            channel,
            alpha: numbers[0],
            p: numbers[1],
            mean_qfi: numbers[2],
            chi_squared: numbers[3],
        });
    }
    Ok(rows)
}

#[derive(Serialize)]
struct JsonSpec<'a> {
    channels: Vec<&'static str>,
    alpha_grid: &'a [f64],
    p_grid: &'a [f64],
    n_qubits: usize,
}

#[derive(Serialize)]
struct JsonRow {
    channel: &'static str,
    alpha: f64,
    p: f64,
    mean_qfi: f64,
    chi_squared: f64,
}

#[derive(Serialize)]
struct JsonDoc<'a> {
    spec: JsonSpec<'a>,
    rows: Vec<JsonRow>,
}

/// Renders `{"spec": ..., "rows": [...]}`. JSON has no infinity literal, so
/// an infinite `chi_squared` serializes as `null`.
pub fn to_json(spec: &SweepSpec, rows: &[ResultRow]) -> String {
    let doc = JsonDoc {
        spec: JsonSpec {
            channels: spec.channels.iter().map(|k| k.as_str()).collect(),
            alpha_grid: &spec.alpha_grid,
            p_grid: &spec.p_grid,
            n_qubits: spec.n_qubits,
        },
        rows: rows
            .iter()
            .map(|row| JsonRow {
                channel: row.channel.as_str(),
                alpha: row.alpha,
                p: row.p,
                mean_qfi: row.mean_qfi,
                chi_squared: row.chi_squared,
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    text.push('\n');
    text
}
