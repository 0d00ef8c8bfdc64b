//! Structured pass/fail evidence and its JSON, text and CSV renderings.
//!
//! JSON schema of a [`VerificationReport`]:
//!
//! ```text
//! {
//!   "check": string,            // which identity was checked
//!   "input": string,            // ideal text, partition, n, or sampler config
//!   "verdict": "pass" | "fail",
//!   "summary": { name: value },  // aggregate quantities
//!   "conditions": [ { "name": string, "holds": bool } ],
//!   "rows": [ { "case": string, "identity": string, "holds": bool,
//!               "values": { name: value } } ]
//! }
//! ```
//!
//! Values are integers, booleans, strings, lists or nested maps. The verdict
//! is `pass` exactly when every row and every condition holds.
//!
//! The CSV form is long: one line per row quantity, with the stable header
//! `check,input,case,identity,holds,quantity,value`.

use std::fmt::Write as _;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Text(String),
    List(Vec<Value>),
    Map(IndexMap<String, Value>),
}

impl Value {
    pub fn render(&self) -> String {
        match self {
            Value::Bool(b) => b.to_string(),
            Value::Int(i) => i.to_string(),
            Value::Text(s) => s.clone(),
            Value::List(v) => v.iter().map(Value::render).collect::<Vec<_>>().join(" "),
            Value::Map(m) => m
                .iter()
                .map(|(k, v)| format!("{k}:{}", v.render()))
                .collect::<Vec<_>>()
                .join(" "),
        }
    }
}

macro_rules! value_from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Value {
            fn from(v: $t) -> Value {
                Value::Int(i64::try_from(v).expect("value fits i64"))
            }
        }
    )*};
}

value_from_int!(i32, i64, u32, u64, usize);

impl From<bool> for Value {
    fn from(v: bool) -> Value {
        Value::Bool(v)
    }
}

impl From<String> for Value {
    fn from(v: String) -> Value {
        Value::Text(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Value {
        Value::Text(v.to_string())
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(v: Vec<T>) -> Value {
        Value::List(v.into_iter().map(Into::into).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceRow {
    pub case: String,
    pub identity: String,
    pub holds: bool,
    pub values: IndexMap<String, Value>,
}

impl EvidenceRow {
    pub fn new(case: impl Into<String>, identity: impl Into<String>) -> Self {
        EvidenceRow {
            case: case.into(),
            identity: identity.into(),
            holds: true,
            values: IndexMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.values.insert(key.to_string(), value.into());
        self
    }

    pub fn holds(mut self, ok: bool) -> Self {
        self.holds = ok;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub input: String,
    pub verdict: Verdict,
    pub summary: IndexMap<String, Value>,
    pub conditions: Vec<Condition>,
    pub rows: Vec<EvidenceRow>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>, input: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            input: input.into(),
            verdict: Verdict::Pass,
            summary: IndexMap::new(),
            conditions: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: EvidenceRow) {
        if !row.holds {
            self.verdict = Verdict::Fail;
        }
        self.rows.push(row);
    }

    pub fn summarize(&mut self, key: &str, value: impl Into<Value>) {
        self.summary.insert(key.to_string(), value.into());
    }

    /// Records a report-level requirement.
    pub fn require(&mut self, name: impl Into<String>, holds: bool) {
        if !holds {
            self.verdict = Verdict::Fail;
        }
        self.conditions.push(Condition {
            name: name.into(),
            holds,
        });
    }

    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }

    /// Recomputes the verdict from rows and conditions.
    pub fn consistent(&self) -> bool {
        let ok = self.rows.iter().all(|r| r.holds) && self.conditions.iter().all(|c| c.holds);
        self.verdict == Verdict::from_bool(ok)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "check:   {}", self.check);
        let _ = writeln!(out, "input:   {}", self.input);
        let _ = writeln!(out, "verdict: {}", self.verdict);
        for (k, v) in &self.summary {
            let _ = writeln!(out, "  {k} = {}", v.render());
        }
        for c in &self.conditions {
            let _ = writeln!(out, "  [{}] {}", if c.holds { "ok" } else { "FAILED" }, c.name);
        }
        if !self.rows.is_empty() {
            let mut headers = vec!["case".to_string(), "identity".to_string(), "holds".to_string()];
            for row in &self.rows {
                for k in row.values.keys() {
                    if !headers.contains(k) {
                        headers.push(k.clone());
                    }
                }
            }
            let body: Vec<Vec<String>> = self
                .rows
                .iter()
                .map(|r| {
                    let mut cells = vec![r.case.clone(), r.identity.clone(), r.holds.to_string()];
                    cells.extend(headers[3..].iter().map(|h| r.values.get(h).map_or(String::new(), Value::render)));
                    cells
                })
                .collect();
            out.push_str(&render_table(&headers, &body));
        }
        out
    }

    pub fn csv_header() -> &'static str {
        "check,input,case,identity,holds,quantity,value"
    }

    /// CSV lines without the header.
    pub fn to_csv_rows(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            for (k, v) in &row.values {
                let fields = [
                    self.check.as_str(),
                    self.input.as_str(),
                    row.case.as_str(),
                    row.identity.as_str(),
                    if row.holds { "true" } else { "false" },
                    k.as_str(),
                    &v.render(),
                ];
                out.push_str(&fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
                out.push('\n');
            }
        }
        out
    }
}

/// Quotes a CSV field when it contains a separator, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Left-aligned columns separated by two spaces.
pub fn render_table(headers: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}", w = *w))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(headers);
    out.push('\n');
    for row in rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        let mut r = VerificationReport::new("socle_generators", "x^2, x*y, y^2");
        r.summarize("colength", 3usize);
        r.summarize("histogram", Value::Map([("1".to_string(), Value::Int(4))].into_iter().collect()));
        r.push(
            EvidenceRow::new("(0, 0)", "socle = e - 1")
                .with("socle", 2usize)
                .with("e", 3usize)
                .with("point", "(0, 0)")
                .with("argmax", vec!["(2,1)".to_string()]),
        );
        r
    }

    #[test]
    fn verdict_tracks_rows_and_conditions() {
        let mut r = sample();
        assert!(r.passed() && r.consistent());
        r.require("max = bound", false);
        assert!(!r.passed() && r.consistent());
        let mut r = sample();
        r.push(EvidenceRow::new("bad", "1 = 2").holds(false));
        assert!(!r.passed() && r.consistent());
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let back = VerificationReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r.to_json().contains("\"verdict\": \"pass\""));
    }

    #[test]
    fn text_and_csv() {
        let r = sample();
        let text = r.to_text();
        assert!(text.contains("verdict: pass"));
        assert!(text.contains("case    identity       holds  socle  e  point   argmax"));
        let csv = r.to_csv_rows();
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.starts_with("socle_generators,\"x^2, x*y, y^2\",\"(0, 0)\",socle = e - 1,true,socle,2\n"));
    }
}
