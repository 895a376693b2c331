//! Simple undirected graphs over `0..n` and the set-level primitives used by
//! every solver: neighborhoods, boundary, exterior, private neighbours and the
//! differential of a vertex subset.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vset::{VertexSet, CAPACITY};

/// An immutable simple graph. Build one with [`GraphBuilder`] or
/// [`Graph::from_edges`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    size: usize,
    labels: Option<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<VertexSet>,
    size: usize,
    labels: Option<Vec<String>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n > CAPACITY {
            return Err(Error::CapacityExceeded(n));
        }
        Ok(GraphBuilder {
            adj: vec![VertexSet::EMPTY; n],
            size: 0,
            labels: None,
        })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.adj.len() && self.adj[a].contains(b)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<&mut Self> {
        let n = self.adj.len();
        for v in [a, b] {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        if self.adj[a].contains(b) {
            return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        self.size += 1;
        Ok(self)
    }

    pub fn labels(&mut self, labels: Vec<String>) -> &mut Self {
        self.labels = Some(labels);
        self
    }

    pub fn build(&self) -> Graph {
        Graph {
            adj: self.adj.clone(),
            size: self.size,
            labels: self.labels.clone(),
        }
    }
}

/// Degree summary. Minimum and maximum are `None` on the graph with no
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    pub min: Option<usize>,
    pub max: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connectivity {
    pub is_connected: bool,
    pub components: Vec<VertexSet>,
}

/// Result of [`Graph::induced_subgraph`]: the subgraph and, for each old
/// vertex, its new index if it was kept.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        Ok(GraphBuilder::new(n)?.build())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n)?;
        for (x, y) in edges {
            b.add_edge(x, y)?;
        }
        Ok(b.build())
    }

    /// Builds a graph from per-vertex adjacency words, symmetrising nothing:
    /// the caller guarantees a symmetric irreflexive relation. Used by the
    /// enumerator and codecs where the relation is correct by construction.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(adj.len() <= CAPACITY);
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, nb)| !nb.contains(v) && nb.iter().all(|w| w < adj.len() && adj[w].contains(v))));
        let size = adj.iter().map(|s| s.len()).sum::<usize>() / 2;
        Graph {
            adj,
            size,
            labels: None,
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a < self.order() && self.adj[a].contains(b)
    }

    /// Unchecked `N(v)`; panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(a, b)` with `a < b`, ordered lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, nb)| {
            nb.iter().filter(move |&b| b > a).map(move |b| (a, b))
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices()).min() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            }),
            None => Ok(()),
        }
    }

    #[inline]
    pub(crate) fn union_neighbors(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// `|N(S) \ S| - |S|` without range checks.
    #[inline]
    pub(crate) fn differential_unchecked(&self, s: VertexSet) -> i64 {
        (self.union_neighbors(s) - s).len() as i64 - s.len() as i64
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].with(v))
    }

    pub fn set_neighborhood(&self, s: VertexSet, closed: bool) -> Result<VertexSet> {
        self.check_set(s)?;
        let open = self.union_neighbors(s);
        Ok(if closed { open | s } else { open })
    }

    /// `B(S) = N(S) \ S`.
    pub fn boundary(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(self.union_neighbors(s) - s)
    }

    /// `C(S) = V \ (B(S) ∪ S)`.
    pub fn exterior(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(self.vertices() - (self.union_neighbors(s) | s))
    }

    /// `|B(S)| - |S|`.
    pub fn set_differential(&self, s: VertexSet) -> Result<i64> {
        self.check_set(s)?;
        Ok(self.differential_unchecked(s))
    }

    /// Neighbours of `v` outside `S` that no other member of `S` reaches.
    pub fn external_private_neighbors(&self, v: usize, s: VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        if !s.contains(v) {
            return Err(Error::NotAMember(v));
        }
        let others = self.union_neighbors(s.without(v));
        Ok(self.adj[v] - s - others)
    }

    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Induced> {
        self.check_set(s)?;
        let mut old_to_new = vec![None; self.order()];
        for (new, old) in s.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let adj = s
            .iter()
            .map(|old| {
                (self.adj[old] & s)
                    .iter()
                    .filter_map(|w| old_to_new[w])
                    .collect()
            })
            .collect();
        let mut graph = Graph::from_adjacency(adj);
        if let Some(labels) = &self.labels {
            graph.labels = Some(s.iter().map(|v| labels[v].clone()).collect());
        }
        Ok(Induced { graph, old_to_new })
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = self.adj.iter().map(|s| s.len()).collect();
        DegreeStats {
            min: degrees.iter().copied().min(),
            max: degrees.iter().copied().max(),
            degrees,
        }
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(|s| s.len()).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(|s| s.len()).max()
    }

    /// Components in order of their smallest vertex.
    pub fn connectivity(&self) -> Connectivity {
        let mut unseen = self.vertices();
        let mut components = Vec::new();
        while let Some(start) = unseen.min() {
            let mut comp = VertexSet::singleton(start);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.adj[v] - comp {
                    comp.insert(w);
                    queue.push_back(w);
                }
            }
            unseen = unseen - comp;
            components.push(comp);
        }
        Connectivity {
            is_connected: components.len() == 1,
            components,
        }
    }

    pub fn is_connected(&self) -> bool {
        let Some(start) = self.vertices().min() else {
            return false;
        };
        let mut reached = VertexSet::singleton(start);
        let mut frontier = reached;
        while !frontier.is_empty() {
            frontier = self.union_neighbors(frontier) - reached;
            reached |= frontier;
        }
        reached == self.vertices()
    }

    /// True iff `⟨S⟩` has maximum degree at most `k`.
    pub fn is_k_dependent(&self, s: VertexSet, k: usize) -> Result<bool> {
        self.check_set(s)?;
        Ok(s.iter().all(|v| (self.adj[v] & s).len() <= k))
    }

    /// `S` is dominating: every vertex is in `S` or adjacent to it.
    pub fn is_dominating(&self, s: VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok((self.union_neighbors(s) | s) == self.vertices())
    }

    /// `S` is a vertex cover: every edge has an end in `S`.
    pub fn is_vertex_cover(&self, s: VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.edges().all(|(a, b)| s.contains(a) || s.contains(b)))
    }

    pub fn is_independent(&self, s: VertexSet) -> Result<bool> {
        self.is_k_dependent(s, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn open_and_closed_neighborhoods() {
        assert_eq!(complete(3).open_neighborhood(0).unwrap(), set(&[1, 2]));
        assert_eq!(path(3).open_neighborhood(1).unwrap(), set(&[0, 2]));
        let e5 = Graph::empty(5).unwrap();
        assert_eq!(e5.open_neighborhood(3).unwrap(), VertexSet::EMPTY);
        assert_eq!(complete(3).closed_neighborhood(0).unwrap(), set(&[0, 1, 2]));
        assert_eq!(e5.closed_neighborhood(3).unwrap(), set(&[3]));
        assert_eq!(path(3).closed_neighborhood(0).unwrap(), set(&[0, 1]));
        assert!(matches!(
            e5.open_neighborhood(5),
            Err(Error::VertexOutOfRange { vertex: 5, order: 5 })
        ));
        assert!(e5.closed_neighborhood(9).is_err());
    }

    #[test]
    fn set_neighborhoods() {
        let p4 = path(4);
        assert_eq!(p4.set_neighborhood(set(&[1]), false).unwrap(), set(&[0, 2]));
        assert_eq!(p4.set_neighborhood(set(&[0, 3]), false).unwrap(), set(&[1, 2]));
        assert_eq!(p4.set_neighborhood(set(&[0, 3]), true).unwrap(), set(&[0, 1, 2, 3]));
        assert!(p4.set_neighborhood(set(&[4]), false).is_err());
    }

    #[test]
    fn boundary_and_exterior() {
        assert_eq!(complete(4).boundary(set(&[0])).unwrap(), set(&[1, 2, 3]));
        assert_eq!(cycle(5).boundary(set(&[0, 1])).unwrap(), set(&[2, 4]));
        let c6 = cycle(6);
        assert_eq!(c6.boundary(c6.vertices()).unwrap(), VertexSet::EMPTY);
        assert_eq!(path(5).exterior(set(&[0])).unwrap(), set(&[2, 3, 4]));
        assert_eq!(complete(4).exterior(set(&[0])).unwrap(), VertexSet::EMPTY);
        assert_eq!(c6.exterior(set(&[0])).unwrap(), set(&[2, 3, 4]));
        assert!(c6.exterior(set(&[6])).is_err());
    }

    #[test]
    fn differential_of_sets() {
        for n in 2..8 {
            assert_eq!(complete(n).set_differential(set(&[0])).unwrap(), n as i64 - 2);
        }
        let p7 = path(7);
        assert_eq!(p7.set_differential(VertexSet::EMPTY).unwrap(), 0);
        assert_eq!(p7.set_differential(set(&[1, 5])).unwrap(), 2);
        assert_eq!(p7.set_differential(p7.vertices()).unwrap(), -7);
    }

    #[test]
    fn private_neighbors() {
        let p4 = path(4);
        assert_eq!(p4.external_private_neighbors(1, set(&[1, 2])).unwrap(), set(&[0]));
        assert_eq!(
            complete(4).external_private_neighbors(0, set(&[0, 1])).unwrap(),
            VertexSet::EMPTY
        );
        assert_eq!(
            star(4).external_private_neighbors(0, set(&[0])).unwrap(),
            set(&[1, 2, 3, 4])
        );
        assert_eq!(
            p4.external_private_neighbors(0, set(&[1])),
            Err(Error::NotAMember(0))
        );
    }

    #[test]
    fn induced_subgraphs() {
        let k3 = complete(5).induced_subgraph(set(&[0, 2, 4])).unwrap();
        assert_eq!(k3.graph, complete(3));
        assert_eq!(k3.old_to_new, vec![Some(0), None, Some(1), None, Some(2)]);
        assert_eq!(cycle(6).induced_subgraph(set(&[0, 1, 2])).unwrap().graph, path(3));
        assert_eq!(cycle(6).induced_subgraph(VertexSet::EMPTY).unwrap().graph.order(), 0);
    }

    #[test]
    fn degrees() {
        let w5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])
            .unwrap();
        let d = w5.degree_stats();
        assert_eq!(d.degrees[4], 4);
        assert_eq!((d.min, d.max), (Some(3), Some(4)));
        let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let d = k23.degree_stats();
        assert_eq!(d.degrees, vec![3, 3, 2, 2, 2]);
        assert_eq!((d.min, d.max), (Some(2), Some(3)));
        assert_eq!(path(2).degree_stats().min, Some(1));
        assert_eq!(path(2).degree_stats().max, Some(1));
        let e0 = Graph::empty(0).unwrap().degree_stats();
        assert_eq!((e0.min, e0.max), (None, None));
    }

    #[test]
    fn components() {
        let c = path(5).connectivity();
        assert!(c.is_connected);
        assert_eq!(c.components.len(), 1);
        let c = Graph::empty(3).unwrap().connectivity();
        assert!(!c.is_connected);
        assert_eq!(c.components.len(), 3);
        let two = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let c = two.connectivity();
        assert_eq!(c.components, vec![set(&[0, 1, 2]), set(&[3, 4])]);
        assert!(!two.is_connected());
        assert!(!Graph::empty(0).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn k_dependence() {
        let c5 = cycle(5);
        assert!(c5.is_k_dependent(set(&[0, 2]), 0).unwrap());
        assert!(!cycle(4).is_k_dependent(cycle(4).vertices(), 1).unwrap());
        assert!(path(4).is_k_dependent(set(&[0, 1]), 1).unwrap());
    }

    #[test]
    fn domination_and_cover_predicates() {
        let c4 = cycle(4);
        assert!(c4.is_dominating(set(&[0, 2])).unwrap());
        assert!(c4.is_vertex_cover(set(&[0, 2])).unwrap());
        assert!(!path(5).is_dominating(set(&[0])).unwrap());
        assert!(!complete(3).is_vertex_cover(set(&[0])).unwrap());
        assert!(Graph::empty(0).unwrap().is_dominating(VertexSet::EMPTY).unwrap());
    }

    #[test]
    fn builder_rejects_bad_edges() {
        let mut b = GraphBuilder::new(3).unwrap();
        assert_eq!(b.add_edge(1, 1).unwrap_err(), Error::SelfLoop(1));
        b.add_edge(0, 1).unwrap();
        assert_eq!(b.add_edge(1, 0).unwrap_err(), Error::DuplicateEdge(0, 1));
        assert!(b.add_edge(0, 3).is_err());
        assert!(GraphBuilder::new(65).is_err());
        assert!(GraphBuilder::new(64).is_ok());
    }

    #[test]
    fn edges_are_lexicographic() {
        let k4 = complete(4);
        let e: Vec<_> = k4.edges().collect();
        assert_eq!(e, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(k4.size(), 6);
    }
}
