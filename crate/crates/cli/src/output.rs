use std::fmt::Write as _;

use apery_core::congruence::{ClaimClass, CongruenceReport, SuiteReport};
use serde_json::Value;

use crate::args::Format;

/// A command result in every output format, plus the flags that decide the exit code.
#[derive(Debug, Default)]
pub struct Rendered {
    pub json: Value,
    /// First row is the header.
    pub csv: Vec<Vec<String>>,
    pub text: String,
    pub theorem_failed: bool,
    pub conjecture_failed: bool,
}

const CELL_HEADER: [&str; 8] = [
    "claim",
    "params",
    "lhs",
    "rhs",
    "modulus",
    "holds",
    "defect_valuation",
    "report",
];

fn summary_line(r: &CongruenceReport) -> String {
    let mut line = format!(
        "{} [{}] {}: {} tested, {} failed",
        r.claim,
        class_name(r.class),
        r.grid,
        r.summary.tested,
        r.summary.failed
    );
    if let Some(c) = r.first_failure() {
        let params = serde_json::to_string(&c.params).expect("params serialize");
        let _ = write!(
            line,
            "; first failure {params}: lhs {} rhs {} modulus {} defect valuation {}",
            c.lhs, c.rhs, c.modulus, c.defect_valuation
        );
    }
    line
}

fn class_name(class: ClaimClass) -> &'static str {
    match class {
        ClaimClass::Theorem => "theorem",
        ClaimClass::ConjectureSupport => "conjecture-support",
        ClaimClass::Counterexample => "counterexample",
    }
}

fn cell_rows(r: &CongruenceReport) -> impl Iterator<Item = Vec<String>> + '_ {
    r.cells.iter().map(move |c| {
        vec![
            c.claim.clone(),
            serde_json::to_string(&c.params).expect("params serialize"),
            c.lhs.to_string(),
            c.rhs.to_string(),
            c.modulus.to_string(),
            c.holds.to_string(),
            c.defect_valuation.to_string(),
            r.claim.clone(),
        ]
    })
}

impl Rendered {
    pub fn from_report(r: &CongruenceReport) -> Self {
        let failed = r.summary.failed > 0;
        Self {
            json: serde_json::to_value(r).expect("report serializes"),
            csv: std::iter::once(CELL_HEADER.map(String::from).to_vec())
                .chain(cell_rows(r))
                .collect(),
            text: summary_line(r) + "\n",
            theorem_failed: failed && r.class == ClaimClass::Theorem,
            conjecture_failed: failed && r.class == ClaimClass::ConjectureSupport,
        }
    }

    pub fn from_suite(s: &SuiteReport) -> Self {
        let mut text = String::new();
        for r in &s.reports {
            text.push_str(&summary_line(r));
            text.push('\n');
        }
        let o = s.outcome;
        let _ = writeln!(
            text,
            "seed {}: theorem failures {}, conjecture failures {}, counterexamples reproduced {}",
            s.seed, o.theorem_failures, o.conjecture_failures, o.counterexamples_reproduced
        );
        Self {
            json: serde_json::to_value(s).expect("suite serializes"),
            csv: std::iter::once(CELL_HEADER.map(String::from).to_vec())
                .chain(s.reports.iter().flat_map(cell_rows))
                .collect(),
            text,
            theorem_failed: o.is_error(),
            conjecture_failed: o.conjecture_failures > 0,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for row in &self.csv {
                    w.write_record(row).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
            }
            Format::Text => self.text.clone(),
        }
    }
}
