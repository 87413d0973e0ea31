//! Rendering of reports and tables as text, CSV or JSON.

use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Ordered key/value lines plus optional tables, printed in one go.
#[derive(Debug, Default)]
pub struct Report {
    fields: Vec<(String, Value)>,
    tables: Vec<(String, Table)>,
}

#[derive(Debug)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Table { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    let obj: Map<String, Value> = self
                        .header
                        .iter()
                        .zip(r)
                        .map(|(h, v)| (h.to_string(), Value::String(v.clone())))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        w.flush()
    }
}

impl Report {
    pub fn field(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn table(&mut self, name: &str, table: Table) -> &mut Self {
        self.tables.push((name.to_string(), table));
        self
    }

    /// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
    pub fn print(&self, format: Format) -> io::Result<()> {
        match self.write(format) {
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
            other => other,
        }
    }

    fn write(&self, format: Format) -> io::Result<()> {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        match format {
            Format::Json => {
                let mut obj: Map<String, Value> = self.fields.iter().cloned().collect();
                for (name, t) in &self.tables {
                    obj.insert(name.clone(), t.to_json());
                }
                serde_json::to_writer_pretty(&mut out, &Value::Object(obj))?;
                writeln!(out)?;
            }
            Format::Text | Format::Csv => {
                if format == Format::Csv && !self.fields.is_empty() {
                    let mut w = csv::Writer::from_writer(&mut out);
                    w.write_record(["key", "value"])?;
                    for (k, v) in &self.fields {
                        w.write_record([k.as_str(), &plain(v)])?;
                    }
                    w.flush()?;
                } else {
                    for (k, v) in &self.fields {
                        writeln!(out, "{k}: {}", plain(v))?;
                    }
                }
                for (i, (name, t)) in self.tables.iter().enumerate() {
                    if format == Format::Text && (i > 0 || !self.fields.is_empty()) {
                        writeln!(out, "\n[{name}]")?;
                    }
                    t.write_csv(&mut out)?;
                }
            }
        }
        out.flush()
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
