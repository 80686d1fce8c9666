use std::io::{self, Write};

use crate::CompetitivenessReport;

pub const CSV_HEADER: &str = "instance_id,family,n,rank,engine,param_p,trials,measure,estimate,ci95,bound,seed";

fn field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn number(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// One CSV line per measure.
pub fn csv_rows(r: &CompetitivenessReport) -> Vec<String> {
    r.measures
        .iter()
        .map(|m| {
            [
                field(&r.instance_id),
                field(&r.family),
                r.n.to_string(),
                r.rank.to_string(),
                field(&r.engine),
                number(r.param_p),
                r.trials.to_string(),
                m.measure.name().to_string(),
                m.estimate.to_string(),
                m.ci95.to_string(),
                number(m.bound),
                r.seed.to_string(),
            ]
            .join(",")
        })
        .collect()
}

pub fn write_csv<'r>(out: &mut impl Write, reports: impl IntoIterator<Item = &'r CompetitivenessReport>) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in reports {
        for row in csv_rows(r) {
            writeln!(out, "{row}")?;
        }
    }
    Ok(())
}

/// Pretty JSON with the frequency vector and the ordinal curve. Infinite
/// ratios come out as `null`.
pub fn report_json(r: &CompetitivenessReport) -> String {
    serde_json::to_string_pretty(r).expect("reports always serialise")
}
