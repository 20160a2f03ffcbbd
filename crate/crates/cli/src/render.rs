use std::fmt::Write as _;

use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Fixed-point rendering with `digits` decimals. Ties round half to even
/// (std formatting rounds on the exact binary value); negative zero prints
/// unsigned.
pub fn fixed(x: f64, digits: usize) -> String {
    let s = format!("{x:.digits$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

/// A JSON number holding exactly the value shown by [`fixed`].
pub fn json_fixed(x: f64, digits: usize) -> Value {
    let rounded: f64 = fixed(x, digits).parse().expect("fixed output parses as f64");
    Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}

/// One named record: ordered `(field, value)` pairs. Values are plain
/// strings for text and CSV output; numbers are kept for JSON.
#[derive(Debug, Clone)]
pub struct Record {
    pub fields: Vec<(&'static str, Cell)>,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Text(String),
    Fixed(f64),
    Sci(f64),
}

impl Cell {
    fn render(&self, digits: usize) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Fixed(x) => fixed(*x, digits),
            Cell::Sci(x) => format!("{x:.3e}"),
        }
    }

    fn json(&self, digits: usize) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Fixed(x) => json_fixed(*x, digits),
            Cell::Sci(x) => Number::from_f64(*x).map_or(Value::Null, Value::Number),
        }
    }
}

impl Record {
    pub fn to_json(&self, digits: usize) -> Value {
        let map: Map<String, Value> = self
            .fields
            .iter()
            .map(|(k, v)| ((*k).to_string(), v.json(digits)))
            .collect();
        Value::Object(map)
    }
}

/// Renders records as aligned `key value` lines (blank line between
/// records), a JSON array or object, or CSV with a header row.
pub fn render_records(records: &[Record], format: OutputFormat, digits: usize) -> String {
    match format {
        OutputFormat::Text => {
            let width = records
                .iter()
                .flat_map(|r| r.fields.iter().map(|(k, _)| k.len()))
                .max()
                .unwrap_or(0);
            let blocks: Vec<String> = records
                .iter()
                .map(|r| {
                    r.fields
                        .iter()
                        .map(|(k, v)| format!("{k:<width$}  {}\n", v.render(digits)))
                        .collect()
                })
                .collect();
            blocks.join("\n")
        }
        OutputFormat::Json => {
            let value = match records {
                [one] => one.to_json(digits),
                many => Value::Array(many.iter().map(|r| r.to_json(digits)).collect()),
            };
            json_string(&value)
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if let Some(first) = records.first() {
                w.write_record(first.fields.iter().map(|(k, _)| *k))
                    .expect("in-memory csv write");
            }
            for r in records {
                w.write_record(r.fields.iter().map(|(_, v)| v.render(digits)))
                    .expect("in-memory csv write");
            }
            String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv output is utf-8")
        }
    }
}

pub fn json_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

/// Column table with a header row and right-aligned cells.
pub fn text_table(header: &[String], rows: &[(String, Vec<String>)]) -> String {
    let label_width = rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
    let cols = header.len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .map(|(_, cells)| cells[c].len())
                .chain(std::iter::once(header[c].len()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    let _ = write!(out, "{:label_width$}", "");
    for (h, w) in header.iter().zip(&widths) {
        let _ = write!(out, "  {h:>w$}");
    }
    out.push('\n');
    for (label, cells) in rows {
        let pad = label_width - label.chars().count();
        let _ = write!(out, "{label}{:pad$}", "");
        for (c, w) in cells.iter().zip(&widths) {
            let _ = write!(out, "  {c:>w$}");
        }
        out.push('\n');
    }
    out
}
