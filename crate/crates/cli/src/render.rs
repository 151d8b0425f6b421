//! Output rendering. JSON is the canonical form; CSV rows and tables are
//! derived from it by flattening nested objects into dotted column names.

use serde::Serialize;
use serde_json::{Map, Value};
use std::fmt::Write as _;

pub fn json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

fn flatten_into(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(fields) => {
            for (key, field) in fields {
                let name = if prefix.is_empty() {
                    key.clone()
                } else {
                    format!("{prefix}.{key}")
                };
                flatten_into(&name, field, out);
            }
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

/// `(column, value)` pairs in serialization order.
pub fn flatten<T: Serialize>(value: &T) -> serde_json::Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    flatten_into("", &serde_json::to_value(value)?, &mut out);
    Ok(out)
}

#[derive(Debug, thiserror::Error)]
pub enum RenderError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("rows have different columns")]
    RaggedRows,
}

/// One header plus one line per row. All rows must flatten to the same
/// columns.
pub fn csv<T: Serialize>(rows: &[T]) -> Result<String, RenderError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header: Option<Vec<String>> = None;
    for row in rows {
        let fields = flatten(row)?;
        let columns: Vec<String> = fields.iter().map(|(k, _)| k.clone()).collect();
        match &header {
            None => {
                writer.write_record(&columns)?;
                header = Some(columns);
            }
            Some(h) if *h != columns => return Err(RenderError::RaggedRows),
            Some(_) => {}
        }
        writer.write_record(fields.iter().map(|(_, v)| v))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is built from UTF-8 strings"))
}

/// Aligned `key  value` lines.
pub fn key_values<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let fields = flatten(value)?;
    let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, v) in fields {
        let _ = writeln!(s, "{k:<width$}  {v}");
    }
    Ok(s)
}

/// A left-aligned text table.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(header.to_vec());
    for row in rows {
        s += &line(row.iter().map(String::as_str).collect());
    }
    s
}

/// Wraps a map so that `Map` ordering is kept when embedding objects.
pub fn object(entries: impl IntoIterator<Item = (String, Value)>) -> Value {
    Value::Object(entries.into_iter().collect::<Map<_, _>>())
}
