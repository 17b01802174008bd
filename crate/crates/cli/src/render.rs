use serde::Serialize;

use crate::input::{Failure, Outcome};

/// Aligned text columns separated by two spaces.
#[derive(Debug, Default)]
pub struct Table {
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn with_header(header: &[&str]) -> Table {
        let mut t = Table::default();
        t.row(header.iter().map(|s| s.to_string()).collect());
        t
    }

    pub fn row(&mut self, cells: Vec<String>) -> &mut Self {
        self.rows.push(cells);
        self
    }

    pub fn kv(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.row(vec![key.to_string(), value.to_string()])
    }

    pub fn render(&self) -> String {
        let cols = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut widths = vec![0; cols];
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for row in &self.rows {
            let mut line = String::new();
            for (i, cell) in row.iter().enumerate() {
                if i + 1 == row.len() {
                    line.push_str(cell);
                } else {
                    line.push_str(cell);
                    line.extend(std::iter::repeat_n(' ', widths[i] - cell.chars().count() + 2));
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn print(&self) {
        print!("{}", self.render());
    }
}

pub fn list<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Sorted-key pretty JSON, stable under parse and re-serialize.
pub fn json<T: Serialize>(value: &T) -> Outcome<String> {
    let v = serde_json::to_value(value).map_err(|e| Failure::Violation(e.to_string()))?;
    serde_json::to_string_pretty(&v).map_err(|e| Failure::Violation(e.to_string()))
}

pub fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
