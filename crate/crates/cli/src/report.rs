//! Command output: an ordered list of sections rendered either as aligned
//! text or as one JSON object. Both renderings read the same values.

use std::fmt::Write as _;

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone)]
enum Body {
    Fields(Vec<(String, Value)>),
    Rows { columns: Vec<String>, rows: Vec<Vec<Value>> },
}

#[derive(Debug, Clone)]
pub struct Report {
    command: String,
    sections: Vec<(String, Body)>,
}

/// Builder for a key/value section.
#[derive(Debug, Default)]
pub struct Fields(Vec<(String, Value)>);

impl Fields {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.push((key.to_string(), value.into()));
        self
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.0.push((key.to_string(), value.into()));
    }
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), sections: Vec::new() }
    }

    pub fn fields(mut self, title: &str, fields: Fields) -> Self {
        self.sections.push((title.to_string(), Body::Fields(fields.0)));
        self
    }

    pub fn rows(mut self, title: &str, columns: &[&str], rows: Vec<Vec<Value>>) -> Self {
        let columns = columns.iter().map(|c| c.to_string()).collect();
        self.sections.push((title.to_string(), Body::Rows { columns, rows }));
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.table(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json()).expect("plain values");
                s.push('\n');
                s
            }
        }
    }

    pub fn json(&self) -> Value {
        let mut root = Map::new();
        root.insert("command".into(), Value::String(self.command.clone()));
        for (title, body) in &self.sections {
            let v = match body {
                Body::Fields(f) => Value::Object(f.iter().cloned().collect()),
                Body::Rows { columns, rows } => Value::Array(
                    rows.iter()
                        .map(|r| Value::Object(columns.iter().cloned().zip(r.iter().cloned()).collect()))
                        .collect(),
                ),
            };
            root.insert(title.clone(), v);
        }
        Value::Object(root)
    }

    fn table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "simdim {}", self.command).unwrap();
        for (title, body) in &self.sections {
            writeln!(out, "\n[{title}]").unwrap();
            match body {
                Body::Fields(fields) => {
                    let w = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                    for (k, v) in fields {
                        writeln!(out, "{k:<w$}  {}", cell(v)).unwrap();
                    }
                }
                Body::Rows { columns, rows } => {
                    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(cell).collect()).collect();
                    let widths: Vec<usize> = (0..columns.len())
                        .map(|i| cells.iter().map(|r| r[i].len()).chain([columns[i].len()]).max().unwrap())
                        .collect();
                    let line = |vals: &[String]| {
                        let parts: Vec<String> =
                            vals.iter().zip(&widths).map(|(v, &w)| format!("{v:<w$}")).collect();
                        parts.join("  ").trim_end().to_string()
                    };
                    writeln!(out, "{}", line(columns)).unwrap();
                    for r in &cells {
                        writeln!(out, "{}", line(r)).unwrap();
                    }
                    if rows.is_empty() {
                        writeln!(out, "(none)").unwrap();
                    }
                }
            }
        }
        out
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(cell).collect();
            format!("{{{}}}", inner.join(" "))
        }
        other => other.to_string(),
    }
}
