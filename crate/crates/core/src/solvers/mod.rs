//! Exact solvers for the differential and the classical invariants around it.
//!
//! All searches are exhaustive over vertex subsets, visited by cardinality in
//! lexicographic order, and charge one node per subset (or recursion node)
//! against a [`SearchOptions::budget`]. Exceeding the budget is an error, never
//! a partial answer.

mod cover;
mod differential;
mod record;
mod roman;

pub use cover::{
    domination_number, independence_number, is_dominating, is_vertex_cover, lambda_invariant,
    vertex_cover_number, Domination, Independence, VertexCover,
};
pub use differential::{
    differential_exact, differential_of_r, enclaveless_number, mu_from_result, mu_invariant,
    DifferentialResult, Enclaveless, RMode,
};
pub use record::{full_record, Field, InvariantRecord};
pub use roman::{roman_domination_number, RomanDomination, ROMAN_LIMIT};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Default node budget for a single search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: u64,
    /// Collect every optimal set, not just one witness.
    pub enumerate: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            enumerate: false,
        }
    }
}

impl SearchOptions {
    pub fn enumerating(self) -> Self {
        SearchOptions {
            enumerate: true,
            ..self
        }
    }

    pub fn with_budget(self, budget: u64) -> Self {
        SearchOptions { budget, ..self }
    }
}

pub(crate) struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}

/// Calls `visit(S, N(S))` for every `k`-subset `S` of `members` in
/// lexicographic order, where `N` is the open neighborhood in `host`.
pub(crate) fn for_each_k_subset<F>(
    host: &Graph,
    members: &[usize],
    k: usize,
    budget: &mut Budget,
    visit: &mut F,
) -> Result<()>
where
    F: FnMut(VertexSet, VertexSet),
{
    #[allow(clippy::too_many_arguments)]
    fn rec<F: FnMut(VertexSet, VertexSet)>(
        host: &Graph,
        members: &[usize],
        start: usize,
        left: usize,
        set: VertexSet,
        nbhd: VertexSet,
        budget: &mut Budget,
        visit: &mut F,
    ) -> Result<()> {
        if left == 0 {
            budget.tick()?;
            visit(set, nbhd);
            return Ok(());
        }
        for i in start..=members.len() - left {
            let v = members[i];
            rec(
                host,
                members,
                i + 1,
                left - 1,
                set.with(v),
                nbhd | host.neighbors(v),
                budget,
                visit,
            )?;
        }
        Ok(())
    }
    if k > members.len() {
        return Ok(());
    }
    rec(host, members, 0, k, VertexSet::EMPTY, VertexSet::EMPTY, budget, visit)
}

/// Outcome of maximising a subset score.
#[derive(Clone, Debug)]
pub(crate) struct Maximum {
    pub value: i64,
    pub witness: VertexSet,
    pub all: Vec<VertexSet>,
    pub nodes: u64,
}

/// Maximises `score(k, |B(S)|)` over subsets `S` of `candidates`, where
/// `bound(k)` is an upper bound on the score of any `k`-subset and is
/// non-increasing in `k`. Cardinalities whose bound falls strictly below the
/// running best are abandoned, so ties are never lost and the witness is the
/// lexicographically smallest maximiser.
pub(crate) fn maximize_subsets(
    host: &Graph,
    candidates: VertexSet,
    collect_all: bool,
    budget: u64,
    score: impl Fn(usize, usize) -> i64,
    bound: impl Fn(usize) -> i64,
) -> Result<Maximum> {
    let members = candidates.to_vec();
    let mut budget = Budget::new(budget);
    let mut best = i64::MIN;
    let mut witness = VertexSet::EMPTY;
    let mut all = Vec::new();
    for k in 0..=members.len() {
        if bound(k) < best {
            break;
        }
        for_each_k_subset(host, &members, k, &mut budget, &mut |s, nb| {
            let value = score(k, (nb - s).len());
            if value > best {
                best = value;
                witness = s;
                all.clear();
                if collect_all {
                    all.push(s);
                }
            } else if value == best {
                if s < witness {
                    witness = s;
                }
                if collect_all {
                    all.push(s);
                }
            }
        })?;
    }
    all.sort();
    Ok(Maximum {
        value: best,
        witness,
        all,
        nodes: budget.used(),
    })
}
