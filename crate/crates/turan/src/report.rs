//! Tabular output shared by the command-line front end: fixed columns per
//! command, CSV with a header row and floats at 17 significant digits,
//! and a JSON mirror (array of objects keyed by the column names).

use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    UInt(u64),
    Int(i64),
    Float(f64),
    Bool(bool),
    Str(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::UInt(v) => v.to_string(),
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => fmt_float(*v),
            Cell::Bool(v) => v.to_string(),
            Cell::Str(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::UInt(v) => json!(v),
            Cell::Int(v) => json!(v),
            Cell::Float(v) => serde_json::Number::from_f64(*v)
                .map(Value::Number)
                .unwrap_or_else(|| json!(v.to_string())),
            Cell::Bool(v) => json!(v),
            Cell::Str(s) => json!(s),
        }
    }
}

/// 17 significant digits: enough to round-trip any f64 and byte-stable
/// across runs.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone)]
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
        debug_assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let map: serde_json::Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, cell)| ((*c).to_owned(), cell.json()))
                    .collect();
                Value::Object(map)
            })
            .collect();
        Value::Array(rows)
    }

    /// Renders in the requested format, newline-terminated.
    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.to_json()).expect("finite cells");
            s.push('\n');
            s
        } else {
            self.to_csv()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_has_17_significant_digits() {
        assert_eq!(fmt_float(6.0), "6.0000000000000000e0");
        assert_eq!(fmt_float(0.1), "1.0000000000000001e-1");
        // round-trips exactly
        for v in [1.5, -2.25e-7, 45.0076612, f64::MIN_POSITIVE] {
            assert_eq!(fmt_float(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn csv_and_json_mirror_columns() {
        let mut t = Table::new(vec!["x", "value", "ok"]);
        t.push(vec![Cell::Float(1.0), Cell::Int(-3), Cell::Bool(true)]);
        let csv = t.to_csv();
        assert!(csv.starts_with("x,value,ok\n"));
        assert!(csv.contains("1.0000000000000000e0,-3,true"));
        let json = t.to_json();
        assert_eq!(json[0]["value"], serde_json::json!(-3));
        assert_eq!(json[0]["ok"], serde_json::json!(true));
    }
}
