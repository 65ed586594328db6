//! Command reports: rows of named values with an optional pass/fail verdict.

use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Debug)]
pub struct Row {
    pub check: String,
    pub value: String,
    /// `None` for informational rows.
    pub pass: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub subject: Option<String>,
    pub parameters: Vec<(&'static str, Value)>,
    pub rows: Vec<Row>,
}

impl Report {
    pub fn new(command: &'static str, subject: Option<String>) -> Self {
        Report {
            command,
            subject,
            parameters: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn parameter(&mut self, name: &'static str, value: impl Into<Value>) {
        self.parameters.push((name, value.into()));
    }

    pub fn info(&mut self, check: impl Into<String>, value: impl Into<String>) {
        self.rows.push(Row {
            check: check.into(),
            value: value.into(),
            pass: None,
        });
    }

    pub fn check(&mut self, check: impl Into<String>, value: impl Into<String>, pass: bool) {
        self.rows.push(Row {
            check: check.into(),
            value: value.into(),
            pass: Some(pass),
        });
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass != Some(false))
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.table(),
            Format::Json => {
                let mut text = serde_json::to_string_pretty(&self.json()).expect("reports serialize");
                text.push('\n');
                text
            }
        }
    }

    fn table(&self) -> String {
        let mut out = self.command.to_string();
        if let Some(s) = &self.subject {
            out += &format!(" {s}");
        }
        for (k, v) in &self.parameters {
            out += &format!(
                " --{}={}",
                k.replace('_', "-"),
                v.as_str().map_or_else(|| v.to_string(), str::to_string)
            );
        }
        out.push('\n');
        let width = self.rows.iter().map(|r| r.check.chars().count() + 1).max().unwrap_or(0);
        for r in &self.rows {
            let label = format!("{},", r.check);
            let status = match r.pass {
                Some(true) => " PASS",
                Some(false) => " FAIL",
                None => "",
            };
            out += format!("{label:<width$} {}{status}", r.value).trim_end();
            out.push('\n');
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        out += &format!("result: {verdict}\n");
        out
    }

    /// Object keys are emitted in sorted order.
    pub fn json(&self) -> Value {
        let parameters: serde_json::Map<String, Value> = self
            .parameters
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "check": r.check,
                    "value": r.value,
                    "status": match r.pass { Some(true) => "pass", Some(false) => "fail", None => "info" },
                })
            })
            .collect();
        json!({
            "command": self.command,
            "subject": self.subject,
            "parameters": parameters,
            "rows": rows,
            "passed": self.passed(),
        })
    }
}

/// `n` in superscript digits.
pub fn sup(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// `n` in subscript digits.
pub fn sub(n: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}
