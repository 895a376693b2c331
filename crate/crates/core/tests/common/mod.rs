//! Naive oracles shared by the integration tests.

#![allow(dead_code)]

use gdiff_core::{Graph, VertexSet};

pub fn adj(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.neighbors(v).bits()).collect()
}

/// Boundary from raw adjacency words.
pub fn naive_boundary(adj: &[u64], s: u64) -> u64 {
    let mut nb = 0;
    for (v, &a) in adj.iter().enumerate() {
        if s >> v & 1 == 1 {
            nb |= a;
        }
    }
    nb & !s
}

/// `(value, every maximiser)` by scanning subsets of `within`.
pub fn naive_differential(g: &Graph, within: u64) -> (i64, Vec<u64>) {
    let a = adj(g);
    let mut best = i64::MIN;
    let mut sets = Vec::new();
    let mut s = 0u64;
    loop {
        let d = naive_boundary(&a, s).count_ones() as i64 - s.count_ones() as i64;
        if d > best {
            best = d;
            sets.clear();
        }
        if d == best {
            sets.push(s);
        }
        if s == within {
            break;
        }
        s = (s.wrapping_sub(within)) & within;
    }
    (best, sets)
}

pub fn bits(sets: &[VertexSet]) -> Vec<u64> {
    let mut v: Vec<u64> = sets.iter().map(|s| s.bits()).collect();
    v.sort();
    v
}

/// Canonical code by trying every permutation: the smallest upper-triangle
/// bit string over all relabelings.
pub fn brute_canonical(g: &Graph) -> (usize, u64) {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = g.order();
    let edges: Vec<_> = g.edges().collect();
    let code = permutations(n)
        .iter()
        .map(|p| {
            edges.iter().fold(0u64, |acc, &(a, b)| {
                let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                acc | 1 << (y * (y - 1) / 2 + x)
            })
        })
        .min()
        .unwrap();
    (n, code)
}
