use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::formulas;

use super::campaign::{Summary, VerificationRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
    Markdown,
}

impl ReportFormat {
    pub fn file_name(self) -> &'static str {
        match self {
            ReportFormat::Csv => "report.csv",
            ReportFormat::Json => "report.json",
            ReportFormat::Markdown => "report.md",
        }
    }
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

fn dash(v: Option<u64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn csv(rows: &[VerificationRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "family", "n", "quantity", "predicted", "computed", "status", "nodes", "millis", "witness",
    ])?;
    for r in rows {
        w.write_record([
            r.family.to_string(),
            r.n.to_string(),
            r.quantity.to_string(),
            dash(r.predicted),
            dash(r.computed),
            r.status.to_string(),
            r.nodes.to_string(),
            r.millis.to_string(),
            r.witness_path.clone().unwrap_or_else(|| "-".into()),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn markdown(rows: &[VerificationRow]) -> String {
    let mut out = String::from("# Verification report\n\n");
    writeln!(out, "{}\n", Summary::of(rows)).unwrap();
    let mut i = 0;
    while i < rows.len() {
        let family = rows[i].family;
        writeln!(out, "## {family}\n").unwrap();
        let mut quantities: Vec<_> = rows
            .iter()
            .filter(|r| r.family == family)
            .map(|r| r.quantity)
            .collect();
        quantities.sort();
        quantities.dedup();
        for q in quantities {
            let source = formulas::entry(family, q).map_or("no closed form", |e| e.source);
            writeln!(out, "### {q} ({source})\n").unwrap();
            out.push_str("| n | predicted | computed | status |\n|---|---|---|---|\n");
            for r in rows.iter().filter(|r| r.family == family && r.quantity == q) {
                writeln!(
                    out,
                    "| {} | {} | {} | {} |",
                    r.n,
                    dash(r.predicted),
                    dash(r.computed),
                    r.status
                )
                .unwrap();
            }
            out.push('\n');
        }
        while i < rows.len() && rows[i].family == family {
            i += 1;
        }
    }
    out
}

pub fn render_report(rows: &[VerificationRow], format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Csv => csv(rows),
        ReportFormat::Json => Ok(serde_json::to_string_pretty(rows)? + "\n"),
        ReportFormat::Markdown => Ok(markdown(rows)),
    }
}
