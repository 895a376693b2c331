use std::time::{Duration, SystemTime, UNIX_EPOCH};

use serde::Serialize;

use super::{CensusSummary, CheckReport};
use crate::error::{Error, Result};

/// Run metadata; the only part of a report document that varies between
/// otherwise identical runs.
#[derive(Clone, Debug, Serialize)]
pub struct Header {
    pub tool: &'static str,
    pub version: &'static str,
    pub timestamp_unix: u64,
    pub runtime_secs: f64,
}

impl Header {
    pub fn now(runtime: Duration) -> Self {
        Header {
            tool: "gdiff",
            version: env!("CARGO_PKG_VERSION"),
            timestamp_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            runtime_secs: runtime.as_secs_f64(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument<'a> {
    pub header: Header,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<&'a CensusSummary>,
    pub reports: &'a [CheckReport],
}

fn csv_err(e: impl std::fmt::Display) -> Error {
    Error::InvalidFamily(format!("csv: {e}"))
}

fn join_sets(sets: &[Vec<usize>]) -> String {
    sets.iter()
        .map(|s| s.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";")
}

/// One row per report: `prop,instance_g6,status,witness_sets,note`, with sets
/// written as space-separated members joined by `;`.
pub fn reports_to_csv(reports: &[CheckReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["prop", "instance_g6", "status", "witness_sets", "note"])
        .map_err(csv_err)?;
    for r in reports {
        w.write_record([
            r.prop.to_string(),
            r.instance_g6.clone(),
            r.status.to_string(),
            join_sets(&r.witness_sets),
            r.note.clone(),
        ])
        .map_err(csv_err)?;
    }
    String::from_utf8(w.into_inner().map_err(csv_err)?).map_err(csv_err)
}

/// One row per proposition with its status counts.
pub fn summary_to_csv(summary: &CensusSummary) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["prop", "n_min", "n_max", "instances", "pass", "fail", "vacuous", "skipped"])
        .map_err(csv_err)?;
    for (prop, c) in &summary.counts {
        w.write_record([
            prop.clone(),
            summary.n_min.to_string(),
            summary.n_max.to_string(),
            summary.instances.to_string(),
            c.pass.to_string(),
            c.fail.to_string(),
            c.vacuous.to_string(),
            c.skipped.to_string(),
        ])
        .map_err(csv_err)?;
    }
    String::from_utf8(w.into_inner().map_err(csv_err)?).map_err(csv_err)
}

#[cfg(test)]
mod tests {
    use super::super::{run_propositions, PropId};
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::solvers::SearchOptions;

    #[test]
    fn csv_and_json_shapes() {
        let g = generate(&FamilySpec::Path(7)).unwrap();
        let reports = run_propositions(&[PropId::P11, PropId::P18], &g, &SearchOptions::default());
        let csv = reports_to_csv(&reports).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("prop,instance_g6,status,witness_sets,note"));
        assert!(lines.next().unwrap().starts_with("P11,FhCGG,pass,"));
        let json = serde_json::to_value(&reports[1]).unwrap();
        let keys: Vec<&String> = json.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["instance_g6", "note", "prop", "status", "witness_sets"]);
        assert_eq!(json["witness_sets"][0], serde_json::json!([1, 4]));
    }
}
