//! Self-describing reports and their text, JSON and CSV renderings.

use betamorph_core::report::Report;
use serde_json::{json, Value};

use crate::args::Format;

/// A flat table for CSV output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn from_report(report: &Report) -> Self {
        let mut t = Table::new(&["check", "passed", "detail"]);
        for c in &report.checks {
            t.push(vec![c.name.clone(), c.passed.to_string(), c.detail.clone()]);
        }
        t
    }
}

/// Outcome of one command on one β.
#[derive(Clone, Debug)]
pub struct Document {
    pub command: String,
    pub beta_spec: String,
    /// Classified regime, absent when β could not be classified.
    pub regime: Option<String>,
    pub exit_code: i32,
    pub error: Option<String>,
    pub text: String,
    pub json: Value,
    pub table: Table,
}

pub fn versions() -> Value {
    json!({
        "betamorph": env!("CARGO_PKG_VERSION"),
        "betamorph-core": betamorph_core::VERSION,
    })
}

pub fn report_json(report: &Report) -> Value {
    json!({
        "title": report.title,
        "passed": report.all_passed(),
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

impl Document {
    pub fn failure(command: String, beta_spec: String, regime: Option<String>, code: i32, message: String) -> Self {
        Document {
            command,
            beta_spec,
            regime,
            exit_code: code,
            text: format!("error: {message}\n"),
            error: Some(message),
            json: Value::Null,
            table: Table::new(&["error"]),
        }
    }

    fn footer(&self) -> String {
        format!(
            "beta_spec={} regime={} betamorph={} betamorph-core={}",
            self.beta_spec,
            self.regime.as_deref().unwrap_or("unknown"),
            env!("CARGO_PKG_VERSION"),
            betamorph_core::VERSION
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "beta_spec": self.beta_spec,
            "regime": self.regime,
            "versions": versions(),
            "exit_code": self.exit_code,
            "error": self.error,
            "result": self.json,
        })
    }

    pub fn to_text(&self) -> String {
        format!("{}-- {}\n", self.text, self.footer())
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("# {}\n", self.footer());
        if let Some(e) = &self.error {
            out.push_str(&format!("# error: {e}\n"));
        }
        out.push_str(&write_csv(&self.table, None));
        out
    }
}

fn write_csv(table: &Table, prefix: Option<(&str, &[String])>) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    let mut header: Vec<String> = Vec::new();
    if let Some((name, _)) = prefix {
        header.push(name.to_string());
    }
    header.extend(table.header.iter().cloned());
    w.write_record(&header).expect("in-memory write");
    for (i, row) in table.rows.iter().enumerate() {
        let mut r: Vec<String> = Vec::new();
        if let Some((_, values)) = prefix {
            r.push(values[i].clone());
        }
        r.extend(row.iter().cloned());
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

/// Renders one or more documents; several documents come from a β list.
pub fn render(docs: &[Document], format: Format, batch: bool) -> String {
    match format {
        Format::Text => docs.iter().map(Document::to_text).collect::<Vec<_>>().join("\n"),
        Format::Json => {
            let v = if batch {
                Value::Array(docs.iter().map(Document::to_json).collect())
            } else {
                docs[0].to_json()
            };
            let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
            s.push('\n');
            s
        }
        Format::Csv if !batch => docs[0].to_csv(),
        Format::Csv => {
            let mut out = format!(
                "# batch betamorph={} betamorph-core={}\n",
                env!("CARGO_PKG_VERSION"),
                betamorph_core::VERSION
            );
            for d in docs {
                out.push_str(&format!(
                    "# beta_spec={} regime={} exit_code={}{}\n",
                    d.beta_spec,
                    d.regime.as_deref().unwrap_or("unknown"),
                    d.exit_code,
                    d.error.as_ref().map(|e| format!(" error: {e}")).unwrap_or_default()
                ));
            }
            let ok: Vec<&Document> = docs.iter().filter(|d| d.error.is_none()).collect();
            let uniform = ok.windows(2).all(|w| w[0].table.header == w[1].table.header);
            if uniform && !ok.is_empty() {
                let mut merged = Table { header: ok[0].table.header.clone(), rows: Vec::new() };
                let mut specs = Vec::new();
                for d in &ok {
                    merged.rows.extend(d.table.rows.iter().cloned());
                    specs.extend(d.table.rows.iter().map(|_| d.beta_spec.clone()));
                }
                out.push_str(&write_csv(&merged, Some(("beta_spec", &specs))));
            } else {
                // Tables of different shapes: one block per β.
                for d in ok {
                    let specs = vec![d.beta_spec.clone(); d.table.rows.len()];
                    out.push_str(&write_csv(&d.table, Some(("beta_spec", &specs))));
                }
            }
            out
        }
    }
}

/// Exit status for a batch: the largest individual status.
pub fn combined_exit_code(docs: &[Document]) -> i32 {
    docs.iter().map(|d| d.exit_code).max().unwrap_or(0)
}
