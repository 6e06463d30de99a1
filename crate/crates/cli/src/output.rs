//! Tabular output: CSV with a mandatory header, or a JSON array of row objects.
//! Doubles are written with 17 significant digits in both formats.

use clap::ValueEnum;
use poisson_di::codebook::format_f64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    U(u64),
    F(f64),
    S(String),
    B(bool),
    /// Key–value pairs: `k=v;k=v` in CSV, an object in JSON.
    Map(Vec<(String, f64)>),
    /// Strings: `a | b` in CSV, an array in JSON.
    List(Vec<String>),
    Empty,
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::U(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::U(v as u64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::F(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::B(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::S(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::S(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::U(v) => v.to_string(),
            Cell::F(v) if v.is_finite() => format_f64(*v),
            Cell::F(v) => v.to_string(),
            Cell::S(s) => s.clone(),
            Cell::B(b) => b.to_string(),
            Cell::Map(kv) => kv
                .iter()
                .map(|(k, v)| format!("{k}={}", format_f64(*v)))
                .collect::<Vec<_>>()
                .join(";"),
            Cell::List(items) => items.join(" | "),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self, out: &mut String) {
        match self {
            Cell::U(v) => out.push_str(&v.to_string()),
            Cell::F(v) => out.push_str(&format_f64(*v)),
            Cell::S(s) => out.push_str(&json_string(s)),
            Cell::B(b) => out.push_str(if *b { "true" } else { "false" }),
            Cell::Map(kv) => {
                out.push('{');
                for (i, (k, v)) in kv.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(&json_string(k));
                    out.push(':');
                    out.push_str(&format_f64(*v));
                }
                out.push('}');
            }
            Cell::List(items) => {
                out.push('[');
                for (i, s) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(&json_string(s));
                }
                out.push(']');
            }
            Cell::Empty => out.push_str("null"),
        }
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialise")
}

/// Rows with a fixed column set.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the header");
        self.rows.push(row);
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    fn to_json(&self) -> String {
        let mut out = String::from("[");
        for (r, row) in self.rows.iter().enumerate() {
            out.push_str(if r == 0 { "\n  {" } else { ",\n  {" });
            for (i, (col, cell)) in self.columns.iter().zip(row).enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&json_string(col));
                out.push(':');
                cell.json(&mut out);
            }
            out.push('}');
        }
        out.push_str(if self.rows.is_empty() { "]\n" } else { "\n]\n" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> Table {
        let mut t = Table::new(vec!["n", "x", "note", "kv", "ok", "gap"]);
        t.push(vec![
            4u64.into(),
            0.1.into(),
            "a, b".into(),
            Cell::Map(vec![("p".into(), 0.5)]),
            true.into(),
            Cell::Empty,
        ]);
        t
    }

    #[test]
    fn csv_quotes_and_digits() {
        let csv = table().render(Format::Csv);
        assert_eq!(
            csv,
            "n,x,note,kv,ok,gap\n4,1.0000000000000001e-1,\"a, b\",p=5.0000000000000000e-1,true,\n"
        );
    }

    #[test]
    fn json_rows_parse() {
        let text = table().render(Format::Json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v[0]["x"].as_f64(), Some(0.1));
        assert_eq!(v[0]["kv"]["p"].as_f64(), Some(0.5));
        assert!(v[0]["gap"].is_null());
        assert_eq!(Table::new(vec!["a"]).render(Format::Json), "[]\n");
    }

    #[test]
    fn header_always_present() {
        assert_eq!(Table::new(vec!["a", "b"]).render(Format::Csv), "a,b\n");
    }
}
