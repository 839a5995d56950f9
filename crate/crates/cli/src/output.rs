use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// A command result: the JSON document plus an optional row view for csv/table.
pub struct Report {
    pub json: Value,
    pub rows: Option<(Vec<String>, Vec<Vec<String>>)>,
}

impl Report {
    pub fn new(value: impl Serialize) -> Result<Self, CliError> {
        Ok(Report {
            json: serde_json::to_value(value).map_err(|e| CliError::Io(e.to_string()))?,
            rows: None,
        })
    }

    pub fn with_rows(mut self, headers: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.rows = Some((headers.iter().map(|h| h.to_string()).collect(), rows));
        self
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json)
                    .map_err(|e| CliError::Io(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let (headers, rows) = self.table();
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&headers).map_err(io)?;
                for r in rows {
                    w.write_record(&r).map_err(io)?;
                }
                String::from_utf8(w.into_inner().map_err(io)?).map_err(io)
            }
            Format::Table => {
                let (headers, rows) = self.table();
                let mut widths: Vec<usize> = headers.iter().map(String::len).collect();
                for r in &rows {
                    for (w, c) in widths.iter_mut().zip(r) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let mut out = String::new();
                for r in std::iter::once(&headers).chain(&rows) {
                    let line: Vec<String> = r
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect();
                    writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
                }
                Ok(out)
            }
        }
    }

    fn table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        if let Some((h, r)) = &self.rows {
            return (h.clone(), r.clone());
        }
        let rows = match &self.json {
            Value::Object(map) => map.iter().map(|(k, v)| vec![k.clone(), cell(v)]).collect(),
            other => vec![vec!["value".into(), cell(other)]],
        };
        (vec!["key".into(), "value".into()], rows)
    }
}

fn io(e: impl std::fmt::Display) -> CliError {
    CliError::Io(e.to_string())
}

/// Flat text for one JSON value.
pub fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(" ")
        }
        Value::Array(items) if items.iter().all(|x| x.as_array().is_some_and(|a| a.iter().all(Value::is_number))) => items
            .iter()
            .map(|x| x.as_array().unwrap().iter().map(cell).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";"),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn cells() {
        assert_eq!(cell(&json!([1, 2, 3])), "1 2 3");
        assert_eq!(cell(&json!([[0, 0], [1, 2]])), "0,0;1,2");
        assert_eq!(cell(&json!("7")), "7");
        assert_eq!(cell(&json!(null)), "");
    }

    #[test]
    fn formats() {
        let r = Report::new(json!({"a": 1, "b": [1, 2]})).unwrap();
        assert_eq!(r.render(Format::Csv).unwrap(), "key,value\na,1\nb,1 2\n");
        assert_eq!(r.render(Format::Table).unwrap(), "key  value\na    1\nb    1 2\n");
        let r = r.with_rows(&["n", "count"], vec![vec!["0".into(), "1".into()]]);
        assert_eq!(r.render(Format::Csv).unwrap(), "n,count\n0,1\n");
    }
}
