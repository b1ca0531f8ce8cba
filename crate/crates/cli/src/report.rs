use std::fmt::Write as _;

use comfy_table::{presets, Table};
use serde::Serialize;

use crate::args::Format;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
    Empty,
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

impl Cell {
    fn full(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format!("{v:?}"),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn rounded(&self) -> String {
        match self {
            Cell::Float(v) => sig12(*v),
            other => other.full(),
        }
    }
}

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..12).contains(&exp) {
        let rounded: f64 = sci.parse().expect("round trip");
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(format!("{rounded:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// What a command produces: a JSON document plus a flat table for CSV and
/// terminal output.
pub struct Report {
    pub json: serde_json::Value,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// Lines printed under the table in `table` format.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new<S: Serialize>(json: &S, headers: &[&str]) -> Self {
        Report {
            json: serde_json::to_value(json).expect("report serializes"),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers).expect("csv header");
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::full)).expect("csv row");
                }
                String::from_utf8(w.into_inner().expect("csv flush")).expect("utf8")
            }
            Format::Table => {
                let mut t = Table::new();
                t.load_preset(presets::ASCII_MARKDOWN);
                t.set_header(self.headers.clone());
                for row in &self.rows {
                    t.add_row(row.iter().map(Cell::rounded));
                }
                let mut s = t.to_string();
                s.push('\n');
                for note in &self.notes {
                    let _ = writeln!(s, "{note}");
                }
                s
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(1.0), "1");
        assert_eq!(sig12(std::f64::consts::PI), "3.14159265359");
        assert_eq!(sig12(-0.081093021621632885), "-0.0810930216216");
        assert_eq!(sig12(123456789012345.0), "1.23456789012e14");
        assert_eq!(sig12(2.5e-17), "2.5e-17");
        assert_eq!(sig12(f64::INFINITY), "inf");
    }

    #[test]
    fn csv_keeps_full_precision() {
        let mut r = Report::new(&(), &["x"]);
        r.rows.push(vec![Cell::Float(0.1 + 0.2)]);
        assert_eq!(r.render(Format::Csv), "x\n0.30000000000000004\n");
        assert!(r.render(Format::Table).contains("| 0.3 |"));
    }
}
