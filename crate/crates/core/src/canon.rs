//! Canonical forms for small graphs and the connected-graph census.
//!
//! The encoding of a labeled graph is the pair (degree sequence in label
//! order, upper-triangle adjacency bits in graph6 pair order). The canonical
//! form is the minimum encoding over all `n!` relabelings. Any minimiser lists
//! degrees in ascending order, so the search only ranges over relabelings that
//! sort vertices by degree and prunes on the adjacency-bit prefix.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Largest order accepted by [`canonical_form`].
pub const CANON_LIMIT: usize = 8;

/// Largest order accepted by [`enumerate_connected`].
pub const CENSUS_LIMIT: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: u8,
    degrees: Vec<u8>,
    code: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Byte string: order, ascending degrees, then the adjacency bits as a
    /// big-endian word.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(1 + self.degrees.len() + 4);
        out.push(self.order);
        out.extend_from_slice(&self.degrees);
        out.extend_from_slice(&(self.code as u32).to_be_bytes());
        out
    }

    /// The graph in canonical labeling.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let total = n * n.saturating_sub(1) / 2;
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (total - 1 - k) & 1 == 1 {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
                k += 1;
            }
        }
        Graph::from_adjacency(adj)
    }
}

struct Search<'a> {
    adj: &'a [u64],
    sorted_degrees: Vec<usize>,
    degrees: Vec<usize>,
    perm: [usize; CANON_LIMIT],
    used: u64,
    total_bits: usize,
    best: Option<u64>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, code: u64) {
        let n = self.degrees.len();
        if pos == n {
            if self.best.is_none_or(|b| code < b) {
                self.best = Some(code);
            }
            return;
        }
        let prefix_bits = pos * (pos + 1) / 2;
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.degrees[v] != self.sorted_degrees[pos] {
                continue;
            }
            let mut c = code;
            for &u in &self.perm[..pos] {
                c = c << 1 | (self.adj[u] >> v & 1);
            }
            if let Some(b) = self.best {
                if c > b >> (self.total_bits - prefix_bits) {
                    continue;
                }
            }
            self.perm[pos] = v;
            self.used |= 1 << v;
            self.run(pos + 1, c);
            self.used &= !(1 << v);
        }
    }
}

fn canonical_from_words(adj: &[u64]) -> CanonicalForm {
    let n = adj.len();
    let degrees: Vec<usize> = adj.iter().map(|w| w.count_ones() as usize).collect();
    let mut sorted_degrees = degrees.clone();
    sorted_degrees.sort_unstable();
    let mut search = Search {
        adj,
        sorted_degrees,
        degrees,
        perm: [0; CANON_LIMIT],
        used: 0,
        total_bits: n * n.saturating_sub(1) / 2,
        best: None,
    };
    search.run(0, 0);
    CanonicalForm {
        order: n as u8,
        degrees: search.sorted_degrees.iter().map(|&d| d as u8).collect(),
        code: search.best.unwrap_or(0),
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > CANON_LIMIT {
        return Err(Error::TooLarge {
            what: "canonical form",
            order: n,
            limit: CANON_LIMIT,
        });
    }
    let words: Vec<u64> = (0..n).map(|v| g.neighbors(v).bits()).collect();
    Ok(canonical_from_words(&words))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn words_from_mask(n: usize, mask: u64) -> [u64; CENSUS_LIMIT] {
    let mut adj = [0u64; CENSUS_LIMIT];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    adj
}

fn words_connected(adj: &[u64]) -> bool {
    let n = adj.len();
    if n == 0 {
        return false;
    }
    let all = (1u64 << n) - 1;
    let (mut reached, mut frontier) = (1u64, 1u64);
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            next |= adj[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        frontier = next & !reached;
        reached |= frontier;
    }
    reached == all
}

fn check_census_order(n: usize) -> Result<()> {
    if n == 0 || n > CENSUS_LIMIT {
        return Err(Error::TooLarge {
            what: "connected-graph enumeration (orders 1..=7)",
            order: n,
            limit: CENSUS_LIMIT,
        });
    }
    Ok(())
}

/// Every labeled connected graph on `n` vertices, in edge-mask order.
pub fn labeled_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_census_order(n)?;
    let pairs = n * (n - 1) / 2;
    Ok((0..1u64 << pairs).filter_map(move |mask| {
        let words = words_from_mask(n, mask);
        words_connected(&words[..n]).then(|| {
            Graph::from_adjacency(words[..n].iter().map(|&w| VertexSet::from_bits(w)).collect())
        })
    }))
}

/// Connected graphs on `n` vertices (`1 <= n <= 7`). With `dedup`, one
/// canonical representative per isomorphism class, ordered by canonical form;
/// otherwise every labeled graph in edge-mask order.
pub fn enumerate_connected(n: usize, dedup: bool) -> Result<Vec<Graph>> {
    if !dedup {
        return Ok(labeled_connected(n)?.collect());
    }
    check_census_order(n)?;
    let pairs = n * (n - 1) / 2;
    let forms: HashSet<CanonicalForm> = (0..1u64 << pairs)
        .into_par_iter()
        .filter_map(|mask| {
            let words = words_from_mask(n, mask);
            words_connected(&words[..n]).then(|| canonical_from_words(&words[..n]))
        })
        .collect();
    let mut forms: Vec<_> = forms.into_iter().collect();
    forms.sort();
    Ok(forms.iter().map(CanonicalForm::to_graph).collect())
}

/// The census: representatives of all connected graphs with orders in
/// `min_order..=max_order`, grouped by order.
pub fn census(min_order: usize, max_order: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in min_order..=max_order {
        out.extend(enumerate_connected(n, true)?);
    }
    Ok(out)
}
