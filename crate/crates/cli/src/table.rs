//! Tabular output as RFC 4180 CSV with a header row, or JSON lines.

use std::io::Write;

use anyhow::Result;

use crate::cli::Format;

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i128),
    Float(f64),
    /// Exact value already rendered as `"p/q"`.
    Exact(String),
    Text(String),
    Bool(bool),
    /// Rendered space-separated in CSV, as an array in JSON.
    List(Vec<Cell>),
    Empty,
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        "NaN".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{x:.16e}")
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Float(x) => format_float(*x),
            Cell::Exact(s) | Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::List(items) => items.iter().map(Cell::csv).collect::<Vec<_>>().join(" "),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Float(x) if x.is_finite() => format_float(*x),
            Cell::Float(_) | Cell::Empty => "null".into(),
            Cell::Exact(s) | Cell::Text(s) => serde_json::Value::from(s.as_str()).to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::List(items) => format!("[{}]", items.iter().map(Cell::json).collect::<Vec<_>>().join(",")),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> Result<()> {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::csv))?;
                }
                w.flush()?;
            }
            Format::Json => {
                for row in &self.rows {
                    let fields: Vec<String> = self
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(k, v)| format!("{}:{}", serde_json::Value::from(*k), v.json()))
                        .collect();
                    writeln!(out, "{{{}}}", fields.join(","))?;
                }
            }
        }
        Ok(())
    }

    pub fn to_bytes(&self, format: Format) -> Result<Vec<u8>> {
        let mut buf = Vec::new();
        self.write(format, &mut buf)?;
        Ok(buf)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_formats() {
        let mut t = Table::new(vec!["order", "exact", "mean", "note"]);
        t.push(vec![Cell::Int(4), Cell::Exact("28/1".into()), Cell::Float(0.1), Cell::Text("a,b".into())]);
        t.push(vec![Cell::Int(6), Cell::Empty, Cell::Float(f64::NAN), Cell::List(vec![Cell::Int(0), Cell::Int(1)])]);
        let csv = String::from_utf8(t.to_bytes(Format::Csv).unwrap()).unwrap();
        assert_eq!(
            csv,
            "order,exact,mean,note\n4,28/1,1.0000000000000001e-1,\"a,b\"\n6,,NaN,0 1\n"
        );
        let json = String::from_utf8(t.to_bytes(Format::Json).unwrap()).unwrap();
        let lines: Vec<serde_json::Value> = json.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines[0]["exact"], "28/1");
        assert_eq!(lines[0]["mean"], 0.1);
        assert!(lines[1]["mean"].is_null());
        assert_eq!(lines[1]["note"], serde_json::json!([0, 1]));
    }
}
