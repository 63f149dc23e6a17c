//! Text and JSON renderings of verification reports.

use colorlie::io::{self, ReportFile, ReportText};
use colorlie::ValidationReport;

/// Violations listed per identity in text mode.
const SHOWN: usize = 5;

pub fn text(report: &ValidationReport) -> String {
    let r = ReportText::new(report);
    if r.passed {
        return format!("{}: pass\n", r.check);
    }
    let mut out = format!("{}: FAIL ({} violations)\n", r.check, r.violations.len());
    for group in r.violations.chunk_by(|a, b| a.identity == b.identity) {
        out.push_str(&format!("  {} ({})\n", group[0].identity, group.len()));
        for v in group.iter().take(SHOWN) {
            out.push_str(&format!("    at {:?}: {}\n", v.indices, v.residual));
        }
        if group.len() > SHOWN {
            out.push_str(&format!("    ... {} more\n", group.len() - SHOWN));
        }
    }
    out
}

pub fn json(reports: &[ValidationReport]) -> String {
    io::render(&ReportFile::new(reports))
}

/// Prints the reports to stdout and returns whether all passed.
pub fn print(reports: &[ValidationReport], as_json: bool) -> bool {
    if as_json {
        print!("{}", json(reports));
    } else {
        for r in reports {
            print!("{}", text(r));
        }
    }
    reports.iter().all(ValidationReport::passed)
}
