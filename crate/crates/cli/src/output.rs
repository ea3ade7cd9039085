//! Tabular records and their three renderings.

use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Csv,
    Jsonl,
}

/// Named columns plus rows of JSON values. Rows never contain nested objects.
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Tsv => {
                writeln!(out, "#{}", self.header.join("\t"))?;
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(flat).collect();
                    writeln!(out, "{}", cells.join("\t"))?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(flat))?;
                }
                w.flush()?;
            }
            Format::Jsonl => {
                for row in &self.rows {
                    let obj: Map<String, Value> = self.header.iter().cloned().zip(row.iter().cloned()).collect();
                    writeln!(out, "{}", Value::Object(obj))?;
                }
            }
        }
        Ok(())
    }
}

/// Text form of one cell: arrays comma-joined, null as `-`.
fn flat(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(flat).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Table {
        let mut t = Table::new(["target", "params", "note"]);
        t.push(vec![json!(7), json!([4, 1]), Value::Null]);
        t
    }

    fn render(f: Format) -> String {
        let mut buf = Vec::new();
        sample().write(f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn renderings() {
        assert_eq!(render(Format::Tsv), "#target\tparams\tnote\n7\t4,1\t-\n");
        assert_eq!(render(Format::Csv), "target,params,note\n7,\"4,1\",-\n");
        assert_eq!(render(Format::Jsonl), "{\"target\":7,\"params\":[4,1],\"note\":null}\n");
    }
}
