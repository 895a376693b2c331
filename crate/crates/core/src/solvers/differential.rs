use serde::Serialize;

use super::{maximize_subsets, SearchOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::roper::{build_r, RGraph};
use crate::vset::VertexSet;

/// The maximum of `∂(S)` over a search space, with its maximisers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferentialResult {
    pub value: i64,
    /// Lexicographically smallest maximiser.
    pub witness: VertexSet,
    /// Every maximiser, sorted; only when enumeration was requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_sets: Option<Vec<VertexSet>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_card: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_card: Option<usize>,
    /// Subsets evaluated.
    pub search_space_size: u64,
}

impl DifferentialResult {
    /// Maximisers of largest cardinality (requires enumeration).
    pub fn maximum_sets(&self) -> Vec<VertexSet> {
        let Some(all) = &self.all_sets else {
            return Vec::new();
        };
        let top = self.max_card.unwrap_or(0);
        all.iter().copied().filter(|s| s.len() == top).collect()
    }
}

/// Searches `S ⊆ candidates` for the largest `|B(S)| - |S|` in `host`.
/// Any `k`-subset has `|B(S)| <= |V(host)| - k`, so `∂(S) <= |V(host)| - 2k`.
fn search(host: &Graph, candidates: VertexSet, opts: &SearchOptions) -> Result<DifferentialResult> {
    let order = host.order() as i64;
    let max = maximize_subsets(
        host,
        candidates,
        opts.enumerate,
        opts.budget,
        |k, boundary| boundary as i64 - k as i64,
        |k| order - 2 * k as i64,
    )?;
    let (all_sets, min_card, max_card) = if opts.enumerate {
        let min = max.all.iter().map(|s| s.len()).min();
        let top = max.all.iter().map(|s| s.len()).max();
        (Some(max.all), min, top)
    } else {
        (None, None, None)
    };
    Ok(DifferentialResult {
        value: max.value,
        witness: max.witness,
        all_sets,
        min_card,
        max_card,
        search_space_size: max.nodes,
    })
}

/// `∂(G)`, optionally restricted to subsets of `restrict`.
pub fn differential_exact(
    g: &Graph,
    restrict: Option<VertexSet>,
    opts: &SearchOptions,
) -> Result<DifferentialResult> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let candidates = match restrict {
        Some(r) => {
            // Range check via a primitive that validates membership.
            g.boundary(r)?;
            r
        }
        None => g.vertices(),
    };
    search(g, candidates, opts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RMode {
    /// Search all subsets of `V(R(G))`.
    Full,
    /// Search only subsets of the base vertices. Exact for connected `G`
    /// with `n >= 3`, where every maximiser has a same-size counterpart
    /// inside `V`.
    #[default]
    VRestricted,
}

/// `∂(R(G))`.
pub fn differential_of_r(rg: &RGraph, mode: RMode, opts: &SearchOptions) -> Result<DifferentialResult> {
    let base = rg.base();
    if base.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    match mode {
        RMode::Full => search(rg.total(), rg.total().vertices(), opts),
        RMode::VRestricted => {
            if base.order() < 3 || !base.is_connected() {
                return Err(Error::NotConnectedOrTooSmall);
            }
            search(rg.total(), rg.v_part(), opts)
        }
    }
}

/// `μ(G)` from an enumerated V-restricted result: the largest cardinality of
/// a differential set of R(G) inside `V`, with the lexicographically
/// smallest such set.
pub fn mu_from_result(res: &DifferentialResult) -> Option<(usize, VertexSet)> {
    let top = res.max_card?;
    let witness = res.maximum_sets().into_iter().min()?;
    Some((top, witness))
}

/// `μ(G)` for connected `G` with `n >= 3`.
pub fn mu_invariant(g: &Graph, opts: &SearchOptions) -> Result<(usize, VertexSet)> {
    if g.order() < 3 || !g.is_connected() {
        return Err(Error::NotConnectedOrTooSmall);
    }
    let rg = build_r(g)?;
    let res = differential_of_r(&rg, RMode::VRestricted, &opts.enumerating())?;
    Ok(mu_from_result(&res).expect("enumeration always yields a maximiser"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Enclaveless {
    pub psi: usize,
    pub witness: VertexSet,
}

/// `ψ(G) = max |B(S)|`.
pub fn enclaveless_number(g: &Graph, opts: &SearchOptions) -> Result<Enclaveless> {
    let order = g.order() as i64;
    let max = maximize_subsets(
        g,
        g.vertices(),
        false,
        opts.budget,
        |_, boundary| boundary as i64,
        |k| order - k as i64,
    )?;
    Ok(Enclaveless {
        psi: max.value as usize,
        witness: max.witness,
    })
}
