use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::{run_propositions, CheckReport, CheckStatus, PropId};
use crate::canon::{census, CENSUS_LIMIT};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::SearchOptions;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StatusCounts {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub skipped: usize,
}

impl StatusCounts {
    pub fn total(&self) -> usize {
        self.pass + self.fail + self.vacuous + self.skipped
    }

    fn add(&mut self, status: CheckStatus) {
        match status {
            CheckStatus::Pass => self.pass += 1,
            CheckStatus::Fail => self.fail += 1,
            CheckStatus::Vacuous => self.vacuous += 1,
            CheckStatus::Skipped => self.skipped += 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub n_min: usize,
    pub n_max: usize,
    pub instances: usize,
    pub counts: BTreeMap<String, StatusCounts>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl CensusSummary {
    pub fn from_reports(n_min: usize, n_max: usize, instances: usize, reports: &[CheckReport]) -> Self {
        let mut counts = BTreeMap::new();
        for r in reports {
            counts
                .entry(r.prop.to_string())
                .or_insert_with(StatusCounts::default)
                .add(r.status);
        }
        CensusSummary {
            n_min,
            n_max,
            instances,
            counts,
            runtime: Duration::ZERO,
        }
    }

    pub fn failures(&self) -> usize {
        self.counts.values().map(|c| c.fail).sum()
    }
}

#[derive(Clone, Debug)]
pub struct CensusRun {
    pub summary: CensusSummary,
    pub reports: Vec<CheckReport>,
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidFamily(format!("thread pool: {e}")))
}

/// Runs `props` on every graph using `jobs` workers (0 = all cores). Reports
/// are ordered by instance, then by proposition, whatever the parallelism.
pub fn run_instances(
    graphs: &[Graph],
    props: &[PropId],
    opts: &SearchOptions,
    jobs: usize,
) -> Result<Vec<CheckReport>> {
    let per_graph: Vec<Vec<CheckReport>> = pool(jobs)?.install(|| {
        graphs
            .par_iter()
            .map(|g| run_propositions(props, g, opts))
            .collect()
    });
    Ok(per_graph.into_iter().flatten().collect())
}

/// Checks `props` on every connected graph of order `3..=n_max`.
pub fn run_census(n_max: usize, props: &[PropId], opts: &SearchOptions, jobs: usize) -> Result<CensusRun> {
    if !(3..=CENSUS_LIMIT).contains(&n_max) {
        return Err(Error::TooLarge {
            what: "census (n_max in 3..=7)",
            order: n_max,
            limit: CENSUS_LIMIT,
        });
    }
    let start = Instant::now();
    let graphs = census(3, n_max)?;
    let reports = run_instances(&graphs, props, opts, jobs)?;
    let mut summary = CensusSummary::from_reports(3, n_max, graphs.len(), &reports);
    summary.runtime = start.elapsed();
    Ok(CensusRun { summary, reports })
}
