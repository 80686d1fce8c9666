use std::fmt::Write as _;

use sim_harness::{verify_suite_with, SuiteReport, VerifyLevel};

use crate::CliError;

/// Runs the exhaustive suites and renders a per-suite tally followed by every
/// failing check.
pub fn run_verify(level: VerifyLevel, inject_mutant: bool) -> Result<(SuiteReport, String), CliError> {
    let report = verify_suite_with(level, inject_mutant).map_err(|e| CliError::Instance(e.to_string()))?;
    let mut out = String::new();
    for suite in ["axioms", "forbidden_sets", "coupling"] {
        let total = report.checks.iter().filter(|c| c.suite == suite).count();
        let ok = report.checks.iter().filter(|c| c.suite == suite && c.passed).count();
        let _ = writeln!(out, "{suite:<15} {ok}/{total} passed");
    }
    for c in report.failures() {
        let _ = writeln!(out, "FAILED {} {}: {}", c.suite, c.subject, c.detail);
    }
    let _ = writeln!(
        out,
        "verify {}: {}",
        if level == VerifyLevel::Quick { "quick" } else { "full" },
        if report.passed() { "ok" } else { "failed" }
    );
    Ok((report, out))
}
