use serde::Serialize;

use super::{Budget, SearchOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Domination {
    pub gamma: usize,
    pub witness: VertexSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_min: Option<Vec<VertexSet>>,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCover {
    pub tau: usize,
    pub witness: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Independence {
    pub alpha: usize,
    pub witness: VertexSet,
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> Result<bool> {
    g.is_dominating(s)
}

pub fn is_vertex_cover(g: &Graph, s: VertexSet) -> Result<bool> {
    g.is_vertex_cover(s)
}

/// Searches `k`-subsets in lexicographic order for dominating sets. A branch
/// is cut as soon as the smallest undominated vertex can no longer be reached
/// by any vertex still eligible for selection.
fn dominating_k_subsets(
    g: &Graph,
    k: usize,
    collect_all: bool,
    budget: &mut Budget,
    found: &mut Vec<VertexSet>,
) -> Result<()> {
    let all = g.vertices();
    let n = g.order();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &Graph,
        all: VertexSet,
        n: usize,
        start: usize,
        left: usize,
        set: VertexSet,
        covered: VertexSet,
        collect_all: bool,
        budget: &mut Budget,
        found: &mut Vec<VertexSet>,
    ) -> Result<bool> {
        budget.tick()?;
        let Some(w) = (all - covered).min() else {
            if left == 0 {
                found.push(set);
                return Ok(!collect_all);
            }
            // Already dominating with picks to spare: only reachable when
            // a strictly smaller dominating set exists, which callers rule out.
            return Ok(false);
        };
        if left == 0 {
            return Ok(false);
        }
        let reach = g.neighbors(w).with(w);
        if (reach - VertexSet::full(start)).is_empty() {
            return Ok(false);
        }
        for v in start..=n - left {
            if rec(
                g,
                all,
                n,
                v + 1,
                left - 1,
                set.with(v),
                covered | g.neighbors(v).with(v),
                collect_all,
                budget,
                found,
            )? {
                return Ok(true);
            }
        }
        Ok(false)
    }
    if k > n {
        return Ok(());
    }
    rec(g, all, n, 0, k, VertexSet::EMPTY, VertexSet::EMPTY, collect_all, budget, found)?;
    Ok(())
}

/// `γ(G)` with closed neighborhoods: isolated vertices must be chosen.
pub fn domination_number(g: &Graph, enumerate_min: bool, opts: &SearchOptions) -> Result<Domination> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut budget = Budget::new(opts.budget);
    for k in 0..=g.order() {
        let mut found = Vec::new();
        dominating_k_subsets(g, k, enumerate_min, &mut budget, &mut found)?;
        if let Some(&witness) = found.first() {
            return Ok(Domination {
                gamma: k,
                witness,
                all_min: enumerate_min.then_some(found),
                nodes: budget.used(),
            });
        }
    }
    unreachable!("V(G) dominates G")
}

/// `τ(G)` by increasing cardinality. A branch is cut when two unselected
/// vertices below the selection frontier are adjacent.
pub fn vertex_cover_number(g: &Graph, opts: &SearchOptions) -> Result<VertexCover> {
    let n = g.order();
    let mut budget = Budget::new(opts.budget);
    fn rec(
        g: &Graph,
        n: usize,
        start: usize,
        left: usize,
        set: VertexSet,
        budget: &mut Budget,
    ) -> Result<Option<VertexSet>> {
        budget.tick()?;
        let excluded = VertexSet::full(start) - set;
        if excluded.iter().any(|v| !(g.neighbors(v) & excluded).is_empty()) {
            return Ok(None);
        }
        if left == 0 {
            let outside = VertexSet::full(n) - set;
            let cover = outside.iter().all(|v| g.neighbors(v).is_subset(set));
            return Ok(cover.then_some(set));
        }
        for v in start..=n - left {
            if let Some(s) = rec(g, n, v + 1, left - 1, set.with(v), budget)? {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }
    for k in 0..=n {
        if let Some(witness) = rec(g, n, 0, k, VertexSet::EMPTY, &mut budget)? {
            return Ok(VertexCover { tau: k, witness });
        }
    }
    unreachable!("V(G) covers every edge")
}

/// `α(G)` by include-first branch and bound. Leaves are reached in
/// lexicographic order of the chosen sets, so the first maximum found is the
/// lexicographically smallest one.
pub fn independence_number(g: &Graph, opts: &SearchOptions) -> Result<Independence> {
    struct State<'a> {
        g: &'a Graph,
        best: VertexSet,
        found: bool,
        budget: Budget,
    }
    fn rec(st: &mut State<'_>, chosen: VertexSet, candidates: VertexSet) -> Result<()> {
        st.budget.tick()?;
        if chosen.len() + candidates.len() < st.best.len() + usize::from(!st.found) {
            return Ok(());
        }
        let Some(v) = candidates.min() else {
            if !st.found || chosen.len() > st.best.len() {
                st.best = chosen;
                st.found = true;
            }
            return Ok(());
        };
        rec(st, chosen.with(v), candidates.without(v) - st.g.neighbors(v))?;
        rec(st, chosen, candidates.without(v))
    }
    let mut st = State {
        g,
        best: VertexSet::EMPTY,
        found: false,
        budget: Budget::new(opts.budget),
    };
    rec(&mut st, VertexSet::EMPTY, g.vertices())?;
    Ok(Independence {
        alpha: st.best.len(),
        witness: st.best,
    })
}

/// `λ(G) = |E| - |V| + 2α(G)`.
pub fn lambda_invariant(g: &Graph, opts: &SearchOptions) -> Result<i64> {
    let alpha = independence_number(g, opts)?.alpha;
    Ok(g.size() as i64 - g.order() as i64 + 2 * alpha as i64)
}
