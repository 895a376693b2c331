//! The operator R(G): one new vertex per edge of G, joined to both ends.
//!
//! Base vertices keep their indices `0..n`; the vertex for the `i`-th edge in
//! lexicographic endpoint order gets index `n + i`.

use crate::canon;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::vset::{VertexSet, CAPACITY};

#[derive(Clone, Debug)]
pub struct RGraph {
    base: Graph,
    total: Graph,
    v_part: VertexSet,
    u_part: VertexSet,
    edge_map: Vec<(usize, usize)>,
}

/// Builds R(G).
pub fn build_r(base: &Graph) -> Result<RGraph> {
    let n = base.order();
    let m = base.size();
    if n + m > CAPACITY {
        return Err(Error::CapacityExceeded(n + m));
    }
    let edge_map: Vec<(usize, usize)> = base.edges().collect();
    let mut b = GraphBuilder::new(n + m)?;
    for &(x, y) in &edge_map {
        b.add_edge(x, y)?;
    }
    for (i, &(x, y)) in edge_map.iter().enumerate() {
        b.add_edge(n + i, x)?;
        b.add_edge(n + i, y)?;
    }
    Ok(RGraph {
        base: base.clone(),
        total: b.build(),
        v_part: VertexSet::full(n),
        u_part: VertexSet::full(n + m) - VertexSet::full(n),
        edge_map,
    })
}

impl RGraph {
    /// Assembles an `RGraph` from parts without checking anything. Meant for
    /// feeding [`RGraph::validate`] deliberately broken instances.
    pub fn from_parts(base: Graph, total: Graph, edge_map: Vec<(usize, usize)>) -> RGraph {
        let v_part = VertexSet::full(base.order());
        let u_part = total.vertices() - v_part;
        RGraph {
            base,
            total,
            v_part,
            u_part,
            edge_map,
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn total(&self) -> &Graph {
        &self.total
    }

    pub fn v_part(&self) -> VertexSet {
        self.v_part
    }

    pub fn u_part(&self) -> VertexSet {
        self.u_part
    }

    pub fn edge_map(&self) -> &[(usize, usize)] {
        &self.edge_map
    }

    /// The edge of the base graph that `u` subdivides, if `u` is in U.
    pub fn edge_of(&self, u: usize) -> Option<(usize, usize)> {
        u.checked_sub(self.base.order())
            .and_then(|i| self.edge_map.get(i).copied())
    }

    /// The U-vertex attached to the base edge `{a, b}`, in either order.
    pub fn u_vertex_of(&self, a: usize, b: usize) -> Result<usize> {
        let key = (a.min(b), a.max(b));
        self.edge_map
            .binary_search(&key)
            .map(|i| self.base.order() + i)
            .map_err(|_| Error::NotAnEdge(a, b))
    }

    /// Names of the structural facts about R(G) that this instance violates.
    /// Empty for anything produced by [`build_r`].
    pub fn validate(&self) -> Vec<&'static str> {
        let base = &self.base;
        let total = &self.total;
        let (n, m) = (base.order(), base.size());
        let mut bad = Vec::new();

        if total.order() != n + m {
            bad.push("vertex-count");
        }
        if total.size() != 3 * m {
            bad.push("edge-count");
        }
        let sorted_edges: Vec<_> = base.edges().collect();
        if self.edge_map != sorted_edges || self.u_part.len() != self.edge_map.len() {
            bad.push("edge-map");
        }
        // Everything below indexes `total` by base vertices.
        if total.order() < n {
            bad.push("induced-base");
            return bad;
        }
        let induced = (0..n).all(|v| total.neighbors(v) & self.v_part == base.neighbors(v));
        if !induced {
            bad.push("induced-base");
        }
        let u_ok = self.u_part.iter().all(|u| {
            let nb = total.neighbors(u);
            match self.edge_of(u) {
                Some((a, b)) => {
                    nb.len() == 2 && nb == VertexSet::singleton(a).with(b) && base.adjacent(a, b)
                }
                None => false,
            }
        });
        if !u_ok {
            bad.push("u-degree");
        }
        if !(0..n).all(|v| total.degree(v) == 2 * base.degree(v)) {
            bad.push("v-degree");
        }
        if isomorphic(base, total) != (m == 0) {
            bad.push("iso-iff-edgeless");
        }
        if base.is_connected() != total.is_connected() {
            bad.push("connectivity");
        }
        bad
    }
}

fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    match (canon::canonical_form(a), canon::canonical_form(b)) {
        (Ok(x), Ok(y)) => x == y,
        _ => a == b,
    }
}

/// Free-function alias of [`RGraph::validate`].
pub fn validate_r(rg: &RGraph) -> Vec<&'static str> {
    rg.validate()
}
