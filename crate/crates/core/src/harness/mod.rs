//! Executable checks of the structural statements about `∂` and `R(G)`, run
//! on single graphs, families, or the census of small connected graphs.
//!
//! Every check evaluates its hypothesis first and reports `vacuous` when it
//! fails, so summary tables show how much of each statement was exercised.

mod census;
mod props;
mod report;

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::codec::write_graph6;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::roper::{build_r, RGraph};
use crate::solvers::{differential_exact, differential_of_r, DifferentialResult, RMode, SearchOptions};
use crate::vset::VertexSet;

pub use census::{run_census, run_instances, CensusRun, CensusSummary, StatusCounts};
pub use report::{reports_to_csv, summary_to_csv, Header, ReportDocument};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropId {
    P01,
    P02,
    P03,
    P04,
    P05,
    P06,
    P07,
    P08,
    P09,
    P10,
    P11,
    P12,
    P13,
    P14,
    P15,
    P16,
    P17,
    P18,
}

impl PropId {
    pub const ALL: [PropId; 18] = [
        PropId::P01,
        PropId::P02,
        PropId::P03,
        PropId::P04,
        PropId::P05,
        PropId::P06,
        PropId::P07,
        PropId::P08,
        PropId::P09,
        PropId::P10,
        PropId::P11,
        PropId::P12,
        PropId::P13,
        PropId::P14,
        PropId::P15,
        PropId::P16,
        PropId::P17,
        PropId::P18,
    ];

    pub fn number(self) -> usize {
        self as usize + 1
    }

    /// One-line statement of what the check verifies.
    pub fn title(self) -> &'static str {
        match self {
            PropId::P01 => "structure of R(G)",
            PropId::P02 => "V contains a minimum dominating set of R(G)",
            PropId::P03 => "every differential set of R(G) has an equal-size counterpart inside V",
            PropId::P04 => "V contains a differential set of R(G) dominating G",
            PropId::P05 => "delta >= 2: every differential set of R(G) inside V dominates G",
            PropId::P06 => "delta >= 2: |Y| >= |X| for differential sets X of G, Y of R(G)",
            PropId::P07 => "Delta = n-1 <=> diff = n-2; Delta = n-2 <=> diff = n-3; Delta = n-3 => diff = n-4",
            PropId::P08 => "diff(R(G)) = |V(R(G))|-2 <=> star; = |V(R(G))|-3 <=> star plus edge",
            PropId::P09 => "P is the only differential set of R(K_{p,q}), p < q",
            PropId::P10 => "exact values of diff(R(G)) for K_n, W_n, K_{p,q}",
            PropId::P11 => "tau(G) = gamma(R(G))",
            PropId::P12 => "vertex-cover differential sets of G are differential sets of R(G)",
            PropId::P13 => "<B_G(S)> is 2-dependent, 1-dependent for maximal S",
            PropId::P14 => "|C_R(S)| <= (n - mu)/2 for maximum differential sets S inside V",
            PropId::P15 => "lambda <= diff(R(G)) <= lambda + floor((n - mu)/2)",
            PropId::P16 => "tightness on K_{r,2r} and K'_{r,2r}",
            PropId::P17 => "diff(G) + gamma_R(G) = n",
            PropId::P18 => "a common differential set of P_7 and R(P_7) exists",
        }
    }
}

impl fmt::Display for PropId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{:02}", self.number())
    }
}

impl FromStr for PropId {
    type Err = Error;

    /// Accepts `P07`, `p7` or `7`.
    fn from_str(s: &str) -> Result<PropId> {
        let t = s.trim();
        let digits = t.strip_prefix(['P', 'p']).unwrap_or(t);
        digits
            .parse::<usize>()
            .ok()
            .and_then(|k| k.checked_sub(1))
            .and_then(|i| PropId::ALL.get(i).copied())
            .ok_or_else(|| Error::InvalidFamily(format!("unknown proposition '{s}' (expected P01..P18)")))
    }
}

impl Serialize for PropId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `all` or a comma-separated list of proposition ids.
pub fn parse_props(list: &str) -> Result<Vec<PropId>> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(PropId::ALL.to_vec());
    }
    let mut ids = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<PropId>>>()?;
    ids.sort();
    ids.dedup();
    if ids.is_empty() {
        return Err(Error::InvalidFamily("empty proposition list".into()));
    }
    Ok(ids)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Vacuous,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Vacuous => "vacuous",
            CheckStatus::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub prop: PropId,
    pub instance_g6: String,
    pub status: CheckStatus,
    pub witness_sets: Vec<Vec<usize>>,
    pub note: String,
    #[serde(skip)]
    pub elapsed: Duration,
    /// The skip was caused by the node budget rather than a size limit.
    #[serde(skip)]
    pub budget_exhausted: bool,
}

/// Status, sets and explanation produced by one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Verdict {
    status: CheckStatus,
    sets: Vec<VertexSet>,
    note: String,
}

impl Verdict {
    pub(crate) fn pass(sets: Vec<VertexSet>, note: impl Into<String>) -> Self {
        Verdict {
            status: CheckStatus::Pass,
            sets,
            note: note.into(),
        }
    }

    pub(crate) fn fail(sets: Vec<VertexSet>, note: impl Into<String>) -> Self {
        Verdict {
            status: CheckStatus::Fail,
            sets,
            note: note.into(),
        }
    }

    pub(crate) fn vacuous(note: impl Into<String>) -> Self {
        Verdict {
            status: CheckStatus::Vacuous,
            sets: Vec::new(),
            note: note.into(),
        }
    }

    pub(crate) fn check(ok: bool, sets: Vec<VertexSet>, note: impl Into<String>) -> Self {
        if ok {
            Verdict::pass(sets, note)
        } else {
            Verdict::fail(sets, note)
        }
    }
}

fn cached<T>(cell: &OnceCell<Result<T>>, init: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(init).as_ref().map_err(Clone::clone)
}

/// One graph under test, with the expensive searches computed at most once
/// and shared by every check run on it.
pub(crate) struct Instance<'a> {
    pub g: &'a Graph,
    pub opts: SearchOptions,
    r: OnceCell<Result<RGraph>>,
    g_diff: OnceCell<Result<DifferentialResult>>,
    r_diff_v: OnceCell<Result<DifferentialResult>>,
    r_diff_full: OnceCell<Result<DifferentialResult>>,
}

impl<'a> Instance<'a> {
    pub(crate) fn new(g: &'a Graph, opts: SearchOptions) -> Self {
        Instance {
            g,
            opts: SearchOptions {
                enumerate: false,
                ..opts
            },
            r: OnceCell::new(),
            g_diff: OnceCell::new(),
            r_diff_v: OnceCell::new(),
            r_diff_full: OnceCell::new(),
        }
    }

    pub(crate) fn n(&self) -> usize {
        self.g.order()
    }

    pub(crate) fn r(&self) -> Result<&RGraph> {
        cached(&self.r, || build_r(self.g))
    }

    /// All differential sets of `G`.
    pub(crate) fn g_diff(&self) -> Result<&DifferentialResult> {
        cached(&self.g_diff, || differential_exact(self.g, None, &self.opts.enumerating()))
    }

    /// All differential sets of `R(G)` inside `V`.
    pub(crate) fn r_diff_v(&self) -> Result<&DifferentialResult> {
        cached(&self.r_diff_v, || {
            differential_of_r(self.r()?, RMode::VRestricted, &self.opts.enumerating())
        })
    }

    /// All differential sets of `R(G)`.
    pub(crate) fn r_diff_full(&self) -> Result<&DifferentialResult> {
        cached(&self.r_diff_full, || {
            differential_of_r(self.r()?, RMode::Full, &self.opts.enumerating())
        })
    }

    pub(crate) fn run(&self, id: PropId) -> CheckReport {
        let start = Instant::now();
        let outcome = props::evaluate(id, self);
        let elapsed = start.elapsed();
        let (verdict, budget_exhausted) = match outcome {
            Ok(v) => (v, false),
            Err(e) => {
                let budget = matches!(e, Error::BudgetExceeded(_));
                (
                    Verdict {
                        status: CheckStatus::Skipped,
                        sets: Vec::new(),
                        note: e.to_string(),
                    },
                    budget,
                )
            }
        };
        CheckReport {
            prop: id,
            instance_g6: write_graph6(self.g),
            status: verdict.status,
            witness_sets: verdict.sets.into_iter().map(VertexSet::to_vec).collect(),
            note: verdict.note,
            elapsed,
            budget_exhausted,
        }
    }
}

/// Runs one check on one graph.
pub fn run_proposition(id: PropId, g: &Graph, opts: &SearchOptions) -> CheckReport {
    Instance::new(g, *opts).run(id)
}

/// Runs several checks on one graph, sharing intermediate searches; reports
/// come back in the order of `props`.
pub fn run_propositions(props: &[PropId], g: &Graph, opts: &SearchOptions) -> Vec<CheckReport> {
    let inst = Instance::new(g, *opts);
    props.iter().map(|&id| inst.run(id)).collect()
}

/// Process exit code for a batch of reports: 1 if any check failed,
/// otherwise 3 if any was cut short by the node budget, otherwise 0.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().any(|r| r.status == CheckStatus::Fail) {
        1
    } else if reports.iter().any(|r| r.budget_exhausted) {
        3
    } else {
        0
    }
}
