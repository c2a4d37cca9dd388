//! Report serialization. Witness entries keep their insertion order so the
//! output is byte-identical for identical runs.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use takiff_core::{Check, Report};

struct Witness<'a>(&'a [(String, String)]);

impl Serialize for Witness<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    paper_ref: &'a str,
    status: &'static str,
    witness: Witness<'a>,
    seed: Option<u64>,
    ms: u64,
}

impl<'a> From<&'a Check> for CheckJson<'a> {
    fn from(c: &'a Check) -> Self {
        Self {
            name: &c.name,
            paper_ref: &c.statement,
            status: c.status.as_str(),
            witness: Witness(&c.witness),
            seed: c.seed,
            ms: c.ms,
        }
    }
}

/// Borrowed view of a [`Report`] in the on-disk schema.
#[derive(Serialize)]
pub struct ReportJson<'a> {
    checks: Vec<CheckJson<'a>>,
    summary: &'static str,
}

impl<'a> From<&'a Report> for ReportJson<'a> {
    fn from(r: &'a Report) -> Self {
        Self {
            checks: r.checks.iter().map(CheckJson::from).collect(),
            summary: r.summary().as_str(),
        }
    }
}

pub fn report_to_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(&ReportJson::from(report)).expect("report serializes");
    s.push('\n');
    s
}

/// Human-readable table: one line per check, then the summary.
pub fn report_table(report: &Report) -> String {
    let width = report
        .checks
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    out.push_str(&report.title);
    out.push('\n');
    for c in &report.checks {
        let witness: Vec<String> = c.witness.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!(
            "  {:<12} {:<width$}  {}\n",
            c.status.as_str(),
            c.name,
            witness.join(" ")
        ));
    }
    out.push_str(&format!("summary: {}\n", report.summary()));
    out
}
