use serde::Serialize;

use super::{Budget, SearchOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Largest order accepted by [`roman_domination_number`]; the search visits
/// all `3^n` labelings.
pub const ROMAN_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RomanDomination {
    pub gamma_r: usize,
    /// `f(v)` in `{0, 1, 2}` for each vertex.
    pub labeling: Vec<u8>,
}

/// `γ_R(G)`: the minimum weight of `f: V -> {0,1,2}` such that every vertex
/// labeled 0 has a neighbor labeled 2.
///
/// Every labeling is visited once: the set of 2s ranges over all subsets and
/// the set of 1s over all subsets of the remaining vertices. Among labelings
/// of equal weight the first visited one is kept.
pub fn roman_domination_number(g: &Graph, opts: &SearchOptions) -> Result<RomanDomination> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > ROMAN_LIMIT {
        return Err(Error::TooLarge {
            what: "Roman domination",
            order: n,
            limit: ROMAN_LIMIT,
        });
    }
    let all = g.vertices();
    let mut budget = Budget::new(opts.budget);
    let mut best: Option<(usize, VertexSet, VertexSet)> = None;
    for twos in all.subsets() {
        let reached = twos | g.union_neighbors(twos);
        let rest = all - twos;
        for ones in rest.subsets() {
            budget.tick()?;
            let zeros = rest - ones;
            if !zeros.is_subset(reached) {
                continue;
            }
            let weight = 2 * twos.len() + ones.len();
            if best.is_none_or(|(w, _, _)| weight < w) {
                best = Some((weight, twos, ones));
            }
        }
    }
    let (gamma_r, twos, ones) = best.expect("all-ones labeling is valid");
    let labeling = (0..n)
        .map(|v| {
            if twos.contains(v) {
                2
            } else {
                u8::from(ones.contains(v))
            }
        })
        .collect();
    Ok(RomanDomination { gamma_r, labeling })
}
