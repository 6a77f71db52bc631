//! Reports and their json / tsv / text renderings.

use std::fmt::Write as _;

use oneadic_core::exact::JSON_SAFE_MAX;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Format;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub degenerate: bool,
    pub ambiguous: bool,
}

/// Rows shown by the tsv and text renderings.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: vec![],
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Builds a table row from anything displayable.
#[macro_export]
macro_rules! row {
    ($($x:expr),* $(,)?) => { vec![$($x.to_string()),*] };
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub config: Value,
    pub flags: Flags,
    pub result: Value,
    /// `key: value` lines printed above the table in text mode.
    pub summary: Vec<(String, String)>,
    pub table: Table,
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn new(command: &str, result: impl Serialize) -> Self {
        Self {
            command: command.to_string(),
            config: Value::Null,
            flags: Flags::default(),
            result: exact_json(&result),
            summary: vec![],
            table: Table::default(),
            timing_ms: None,
        }
    }

    pub fn summary(mut self, key: &str, value: impl ToString) -> Self {
        self.summary.push((key.to_string(), value.to_string()));
        self
    }

    pub fn table(mut self, table: Table) -> Self {
        self.table = table;
        self
    }

    pub fn flags(mut self, flags: Flags) -> Self {
        self.flags = flags;
        self
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "command": self.command,
            "config": self.config,
            "flags": self.flags,
            "result": self.result,
        });
        if let Some(ms) = self.timing_ms {
            v["timing_ms"] = json!(ms);
        }
        v
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Tsv => self.render_tsv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {} config={}", self.command, self.config);
        if self.flags != Flags::default() {
            let _ = writeln!(
                out,
                "# flags degenerate={} ambiguous={}",
                self.flags.degenerate, self.flags.ambiguous
            );
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "# timing_ms={ms:.3}");
        }
        let (columns, rows) = if self.table.columns.is_empty() {
            (
                vec!["key".to_string(), "value".to_string()],
                self.summary.iter().map(|(k, v)| vec![k.clone(), v.clone()]).collect(),
            )
        } else {
            (self.table.columns.clone(), self.table.rows.clone())
        };
        let _ = writeln!(out, "{}", columns.iter().map(|c| tsv_cell(c)).collect::<Vec<_>>().join("\t"));
        for row in rows {
            let _ = writeln!(out, "{}", row.iter().map(|c| tsv_cell(c)).collect::<Vec<_>>().join("\t"));
        }
        out
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        let _ = writeln!(out, "config: {}", self.config);
        if self.flags.degenerate {
            let _ = writeln!(out, "flag: degenerate");
        }
        if self.flags.ambiguous {
            let _ = writeln!(out, "flag: ambiguous");
        }
        let width = self.summary.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        for (k, v) in &self.summary {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        if !self.table.columns.is_empty() {
            let mut widths: Vec<usize> = self.table.columns.iter().map(|c| c.chars().count()).collect();
            for row in &self.table.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            let _ = writeln!(out);
            let _ = writeln!(out, "{}", line(&self.table.columns));
            for row in &self.table.rows {
                let _ = writeln!(out, "{}", line(row));
            }
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "timing_ms: {ms:.3}");
        }
        out
    }
}

/// Tabs and newlines cannot appear inside an unquoted cell.
fn tsv_cell(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}

/// Serializes to JSON, writing every integer beyond `2^53` in magnitude as a
/// decimal string.
pub fn exact_json(x: &impl Serialize) -> Value {
    let mut v = serde_json::to_value(x).expect("report payloads serialize");
    stringify_large(&mut v);
    v
}

fn stringify_large(v: &mut Value) {
    match v {
        Value::Number(n) => {
            let large = match (n.as_u64(), n.as_i64()) {
                (Some(u), _) => u > JSON_SAFE_MAX,
                (None, Some(i)) => i.unsigned_abs() > JSON_SAFE_MAX,
                _ => false,
            };
            if large {
                *v = Value::String(n.to_string());
            }
        }
        Value::Array(items) => items.iter_mut().for_each(stringify_large),
        Value::Object(map) => map.values_mut().for_each(stringify_large),
        _ => {}
    }
}
