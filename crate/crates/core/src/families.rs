//! Named graph families and structural recognisers for them.
//!
//! Labeling conventions:
//! - `CompleteBipartite(p, q)`: parts `0..p` and `p..p+q`.
//! - `KPrime(r)`: `K_{r,2r}` on parts `P = 0..r`, `Q = r..3r`, plus the
//!   matching `{r+i, 2r+i}` for `i < r`.
//! - `Wheel(n)`: rim cycle on `0..n-1`, apex `n-1`.
//! - `Star(n)`: centre `0`; `StarPlusEdge(n)` adds the leaf edge `{1, 2}`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilySpec {
    Complete(usize),
    CompleteBipartite(usize, usize),
    KPrime(usize),
    Wheel(usize),
    Path(usize),
    Cycle(usize),
    /// `K_{1,n-1}` on `n` vertices.
    Star(usize),
    StarPlusEdge(usize),
    Empty(usize),
}

/// The family names accepted by [`FamilySpec::from_parts`].
pub const KINDS: &[&str] = &[
    "complete",
    "complete_bipartite",
    "kprime",
    "wheel",
    "path",
    "cycle",
    "star",
    "star_plus_edge",
    "empty",
];

impl FamilySpec {
    /// Builds a spec from a kind name and the CLI-style parameters; only the
    /// parameters the kind needs are consulted.
    pub fn from_parts(
        kind: &str,
        n: Option<usize>,
        p: Option<usize>,
        q: Option<usize>,
        r: Option<usize>,
    ) -> Result<FamilySpec> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| Error::InvalidFamily(format!("{kind} requires --{name}")))
        };
        let spec = match kind {
            "complete" => FamilySpec::Complete(need(n, "n")?),
            "complete_bipartite" => FamilySpec::CompleteBipartite(need(p, "p")?, need(q, "q")?),
            "kprime" => FamilySpec::KPrime(need(r, "r")?),
            "wheel" => FamilySpec::Wheel(need(n, "n")?),
            "path" => FamilySpec::Path(need(n, "n")?),
            "cycle" => FamilySpec::Cycle(need(n, "n")?),
            "star" => FamilySpec::Star(need(n, "n")?),
            "star_plus_edge" => FamilySpec::StarPlusEdge(need(n, "n")?),
            "empty" => FamilySpec::Empty(need(n, "n")?),
            other => {
                return Err(Error::InvalidFamily(format!(
                    "unknown kind '{other}' (expected one of {})",
                    KINDS.join(", ")
                )))
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidFamily(format!("{self}: {msg}")));
        match *self {
            FamilySpec::Wheel(n) if n < 4 => bad("wheel needs n >= 4"),
            FamilySpec::KPrime(r) if r < 2 => bad("kprime needs r >= 2"),
            FamilySpec::CompleteBipartite(p, q) if p < 1 || q < 1 => {
                bad("complete_bipartite needs p, q >= 1")
            }
            FamilySpec::StarPlusEdge(n) if n < 3 => bad("star_plus_edge needs n >= 3"),
            FamilySpec::Cycle(n) if n < 3 => bad("cycle needs n >= 3"),
            FamilySpec::Star(n) if n < 2 => bad("star needs n >= 2"),
            FamilySpec::Path(0) | FamilySpec::Complete(0) => bad("needs n >= 1"),
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Complete(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Star(n)
            | FamilySpec::StarPlusEdge(n)
            | FamilySpec::Empty(n) => n,
            FamilySpec::CompleteBipartite(p, q) => p + q,
            FamilySpec::KPrime(r) => 3 * r,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Complete(n) => write!(f, "K_{n}"),
            FamilySpec::CompleteBipartite(p, q) => write!(f, "K_{{{p},{q}}}"),
            FamilySpec::KPrime(r) => write!(f, "K'_{{{r},{}}}", 2 * r),
            FamilySpec::Wheel(n) => write!(f, "W_{n}"),
            FamilySpec::Path(n) => write!(f, "P_{n}"),
            FamilySpec::Cycle(n) => write!(f, "C_{n}"),
            FamilySpec::Star(n) => write!(f, "K_{{1,{}}}", n.saturating_sub(1)),
            FamilySpec::StarPlusEdge(n) => write!(f, "K_{{1,{}}}+e", n.saturating_sub(1)),
            FamilySpec::Empty(n) => write!(f, "E_{n}"),
        }
    }
}

/// Parses `kind:a[,b]`, e.g. `wheel:6`, `complete_bipartite:2,3`, `kprime:2`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let (kind, args) = s.split_once(':').unwrap_or((s, ""));
        let nums = args
            .split(',')
            .filter(|a| !a.is_empty())
            .map(|a| {
                a.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidFamily(format!("bad parameter '{a}' in '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        let first = nums.first().copied();
        match kind {
            "complete_bipartite" => FamilySpec::from_parts(kind, None, first, nums.get(1).copied(), None),
            "kprime" => FamilySpec::from_parts(kind, None, None, None, first),
            _ => FamilySpec::from_parts(kind, first, None, None, None),
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.order();
    let mut b = GraphBuilder::new(n)?;
    match *spec {
        FamilySpec::Complete(n) => {
            for a in 0..n {
                for c in a + 1..n {
                    b.add_edge(a, c)?;
                }
            }
        }
        FamilySpec::CompleteBipartite(p, q) => {
            for a in 0..p {
                for c in p..p + q {
                    b.add_edge(a, c)?;
                }
            }
        }
        FamilySpec::KPrime(r) => {
            for a in 0..r {
                for c in r..3 * r {
                    b.add_edge(a, c)?;
                }
            }
            for i in 0..r {
                b.add_edge(r + i, 2 * r + i)?;
            }
        }
        FamilySpec::Wheel(n) => {
            let rim = n - 1;
            for i in 0..rim {
                b.add_edge(i, (i + 1) % rim)?;
                b.add_edge(i, rim)?;
            }
        }
        FamilySpec::Path(n) => {
            for i in 1..n {
                b.add_edge(i - 1, i)?;
            }
        }
        FamilySpec::Cycle(n) => {
            for i in 0..n {
                b.add_edge(i, (i + 1) % n)?;
            }
        }
        FamilySpec::Star(n) => {
            for i in 1..n {
                b.add_edge(0, i)?;
            }
        }
        FamilySpec::StarPlusEdge(n) => {
            for i in 1..n {
                b.add_edge(0, i)?;
            }
            b.add_edge(1, 2)?;
        }
        FamilySpec::Empty(_) => {}
    }
    Ok(b.build())
}

/// True iff `g` is `K_n`.
pub fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    g.size() == n * n.saturating_sub(1) / 2
}

/// If `g` is a complete bipartite graph `K_{p,q}` with `p, q >= 1`, returns
/// its parts `(P, Q)` with `|P| <= |Q|`; on ties `P` holds vertex 0.
pub fn complete_bipartite_parts(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    if !g.is_connected() || g.order() < 2 {
        return None;
    }
    // In a connected complete bipartite graph one side is N(0).
    let other = g.neighbors(0);
    let side = g.vertices() - other;
    if g.size() != side.len() * other.len() {
        return None;
    }
    let complete = side.iter().all(|v| g.neighbors(v) == other)
        && other.iter().all(|v| g.neighbors(v) == side);
    if !complete {
        return None;
    }
    Some(if other.len() < side.len() {
        (other, side)
    } else {
        (side, other)
    })
}

/// True iff `g` is the wheel `W_n` (`n >= 4`).
pub fn is_wheel(g: &Graph) -> bool {
    let n = g.order();
    if n < 4 || g.size() != 2 * (n - 1) {
        return false;
    }
    (0..n).filter(|&v| g.degree(v) == n - 1).any(|apex| {
        let rim = g.vertices().without(apex);
        let Ok(sub) = g.induced_subgraph(rim) else {
            return false;
        };
        let c = sub.graph;
        c.is_connected() && (0..c.order()).all(|v| c.degree(v) == 2)
    })
}

/// True iff `g` is `K_{1,n-1}`.
pub fn is_star(g: &Graph) -> bool {
    let n = g.order();
    n >= 2 && g.size() == n - 1 && (0..n).any(|v| g.degree(v) == n - 1)
}

/// True iff `g` is `K_{1,n-1}` plus one edge between two leaves.
pub fn is_star_plus_edge(g: &Graph) -> bool {
    let n = g.order();
    n >= 3 && g.size() == n && (0..n).any(|v| g.degree(v) == n - 1)
}

/// True iff `g` is the path `P_n`.
pub fn is_path(g: &Graph) -> bool {
    let n = g.order();
    if n == 1 {
        return true;
    }
    n >= 2
        && g.size() == n - 1
        && g.is_connected()
        && (0..n).all(|v| g.degree(v) <= 2)
}

/// If `g` is `K_{r,2r}`, returns `r`.
pub fn as_k_r_2r(g: &Graph) -> Option<usize> {
    let (p, q) = complete_bipartite_parts(g)?;
    (q.len() == 2 * p.len()).then_some(p.len())
}

/// If `g` is `K'_{r,2r}` with `r >= 2`, returns `r` and the part `P`.
pub fn as_kprime(g: &Graph) -> Option<(usize, VertexSet)> {
    let n = g.order();
    if n < 6 || !n.is_multiple_of(3) {
        return None;
    }
    let r = n / 3;
    if g.size() != 2 * r * r + r {
        return None;
    }
    // P vertices have degree 2r, Q vertices r + 1; these differ for r >= 2.
    let p: VertexSet = (0..n).filter(|&v| g.degree(v) == 2 * r).collect();
    let q = g.vertices() - p;
    if p.len() != r {
        return None;
    }
    let ok = p.iter().all(|v| g.neighbors(v) == q)
        && q.iter()
            .all(|v| (g.neighbors(v) & p) == p && (g.neighbors(v) & q).len() == 1);
    ok.then_some((r, p))
}

/// Erdős–Rényi graph `G(n, p)` from a seeded ChaCha8 stream; the same
/// seed gives the same graph on every platform.
pub fn random_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n)?;
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(edge_prob.clamp(0.0, 1.0)) {
                b.add_edge(i, j)?;
            }
        }
    }
    Ok(b.build())
}

/// A connected random graph: the first connected draw of `G(n, p)` over the
/// seed sequence `seed, seed + 1, ...`. Needs `n >= 1` and `edge_prob > 0`.
pub fn random_connected(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if n == 0 || edge_prob.is_nan() || edge_prob <= 0.0 {
        return Err(Error::InvalidFamily(format!(
            "random connected graph needs n >= 1 and p > 0 (n={n}, p={edge_prob})"
        )));
    }
    let mut s = seed;
    loop {
        let g = random_graph(n, edge_prob, s)?;
        if g.is_connected() {
            return Ok(g);
        }
        s = s.wrapping_add(1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_graphs_are_reproducible() {
        let a = random_graph(12, 0.3, 7).unwrap();
        assert_eq!(a, random_graph(12, 0.3, 7).unwrap());
        assert_eq!(random_graph(6, 1.0, 1).unwrap().size(), 15);
        assert_eq!(random_graph(6, 0.0, 1).unwrap().size(), 0);
        let c = random_connected(9, 0.2, 3).unwrap();
        assert!(c.is_connected() && c.order() == 9);
        assert!(random_connected(0, 0.5, 1).is_err());
        assert!(random_connected(4, 0.0, 1).is_err());
    }

    #[test]
    fn edge_counts() {
        for n in 1..=10 {
            assert_eq!(generate(&FamilySpec::Complete(n)).unwrap().size(), n * (n - 1) / 2);
        }
        for n in 4..=12 {
            assert_eq!(generate(&FamilySpec::Wheel(n)).unwrap().size(), 2 * (n - 1));
        }
        for r in 2..=5 {
            assert_eq!(generate(&FamilySpec::KPrime(r)).unwrap().size(), 2 * r * r + r);
        }
    }

    #[test]
    fn small_members() {
        let w4 = generate(&FamilySpec::Wheel(4)).unwrap();
        assert_eq!(w4, generate(&FamilySpec::Complete(4)).unwrap());

        let kp = generate(&FamilySpec::KPrime(2)).unwrap();
        assert_eq!((kp.order(), kp.size()), (6, 10));
        assert!(kp.adjacent(2, 4) && kp.adjacent(3, 5));

        let spe = generate(&FamilySpec::StarPlusEdge(4)).unwrap();
        let star = generate(&FamilySpec::Star(4)).unwrap();
        assert_eq!(spe.size(), star.size() + 1);
        assert!(spe.adjacent(1, 2) && !star.adjacent(1, 2));
    }

    #[test]
    fn parameter_ranges() {
        assert!(generate(&FamilySpec::Wheel(3)).is_err());
        assert!(generate(&FamilySpec::KPrime(1)).is_err());
        assert!(generate(&FamilySpec::CompleteBipartite(0, 3)).is_err());
        assert!(generate(&FamilySpec::StarPlusEdge(2)).is_err());
        assert!(generate(&FamilySpec::Complete(65)).is_err());
        assert!(FamilySpec::from_parts("hexagon", Some(3), None, None, None).is_err());
        assert!(FamilySpec::from_parts("wheel", None, None, None, None).is_err());
    }

    #[test]
    fn parse_from_str() {
        assert_eq!("wheel:6".parse::<FamilySpec>().unwrap(), FamilySpec::Wheel(6));
        assert_eq!(
            "complete_bipartite:2,3".parse::<FamilySpec>().unwrap(),
            FamilySpec::CompleteBipartite(2, 3)
        );
        assert_eq!("kprime:3".parse::<FamilySpec>().unwrap(), FamilySpec::KPrime(3));
        assert!("wheel:x".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn recognisers() {
        let k23 = generate(&FamilySpec::CompleteBipartite(2, 3)).unwrap();
        let (p, q) = complete_bipartite_parts(&k23).unwrap();
        assert_eq!((p.len(), q.len()), (2, 3));
        assert_eq!(p, VertexSet::full(2));
        assert!(complete_bipartite_parts(&generate(&FamilySpec::Cycle(5)).unwrap()).is_none());
        assert!(complete_bipartite_parts(&generate(&FamilySpec::Cycle(4)).unwrap()).is_some());

        for n in 4..=8 {
            assert!(is_wheel(&generate(&FamilySpec::Wheel(n)).unwrap()));
        }
        assert!(!is_wheel(&generate(&FamilySpec::Complete(5)).unwrap()));
        assert!(!is_wheel(&generate(&FamilySpec::StarPlusEdge(5)).unwrap()));

        assert!(is_star(&generate(&FamilySpec::Star(5)).unwrap()));
        assert!(!is_star(&generate(&FamilySpec::Path(4)).unwrap()));
        assert!(is_star_plus_edge(&generate(&FamilySpec::StarPlusEdge(5)).unwrap()));
        assert!(is_star_plus_edge(&generate(&FamilySpec::Complete(3)).unwrap()));
        assert!(!is_star_plus_edge(&generate(&FamilySpec::Cycle(4)).unwrap()));
        assert!(is_path(&generate(&FamilySpec::Path(7)).unwrap()));
        assert!(!is_path(&generate(&FamilySpec::Star(4)).unwrap()));

        assert_eq!(as_k_r_2r(&generate(&FamilySpec::CompleteBipartite(2, 4)).unwrap()), Some(2));
        assert_eq!(as_k_r_2r(&generate(&FamilySpec::CompleteBipartite(2, 3)).unwrap()), None);
        for r in 2..=4 {
            let g = generate(&FamilySpec::KPrime(r)).unwrap();
            assert_eq!(as_kprime(&g), Some((r, VertexSet::full(r))));
        }
        assert!(as_kprime(&generate(&FamilySpec::CompleteBipartite(2, 4)).unwrap()).is_none());
    }
}
