//! graph6 and edge-list codecs.
//!
//! graph6: the order `n` is one byte `n + 63` for `n <= 62`, otherwise `126`
//! followed by three 6-bit groups (or `126 126` and six groups for `n >=
//! 258048`). The upper triangle follows column by column (`x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`), six bits per byte, most significant first, offset
//! by 63, zero padded. Only the minimal length encoding is accepted, so
//! parsing and writing are mutually inverse.
//!
//! Edge list: a header line `n <count>`, then one `a b` pair per line with
//! 0-based indices. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::vset::{VertexSet, CAPACITY};

const HEADER: &str = ">>graph6<<";

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn six_bit_groups(bytes: &[u8]) -> Result<u64> {
    bytes.iter().try_fold(0u64, |acc, &b| {
        if !(63..=126).contains(&b) {
            return Err(g6_err(format!("invalid byte 0x{b:02x}")));
        }
        Ok(acc << 6 | u64::from(b - 63))
    })
}

/// Parses one graph6 string (surrounding whitespace and an optional
/// `>>graph6<<` header are ignored).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let bytes = text.strip_prefix(HEADER).unwrap_or(text).as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(g6_err("empty input"));
    };
    let (n, rest) = if first != 126 {
        (six_bit_groups(&bytes[..1])? as usize, &bytes[1..])
    } else if bytes.get(1) == Some(&126) {
        let head = bytes.get(2..8).ok_or_else(|| g6_err("truncated order"))?;
        let n = six_bit_groups(head)?;
        if n < 258_048 {
            return Err(g6_err("non-minimal order encoding"));
        }
        (n as usize, &bytes[8..])
    } else {
        let head = bytes.get(1..4).ok_or_else(|| g6_err("truncated order"))?;
        let n = six_bit_groups(head)?;
        if n < 63 {
            return Err(g6_err("non-minimal order encoding"));
        }
        (n as usize, &bytes[4..])
    };
    if n > CAPACITY {
        return Err(Error::CapacityExceeded(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if rest.len() < nbytes {
        return Err(g6_err(format!(
            "expected {nbytes} data bytes for order {n}, found {}",
            rest.len()
        )));
    }
    if rest.len() > nbytes {
        return Err(g6_err(format!(
            "{} trailing bytes after the adjacency data",
            rest.len() - nbytes
        )));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(g6_err(format!("invalid byte 0x{byte:02x}")));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if let Some(&last) = rest.last() {
        if !(63..=126).contains(&last) {
            return Err(g6_err(format!("invalid byte 0x{last:02x}")));
        }
        let pad = nbytes * 6 - nbits;
        if (last - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(g6_err("nonzero padding bits"));
        }
    }
    Ok(Graph::from_adjacency(adj))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.adjacent(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// One graph per non-blank line. Errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l).map_err(|e| with_line(e, i + 1)))
        .collect()
}

fn with_line(e: Error, line: usize) -> Error {
    match e {
        Error::Graph6(msg) => Error::Graph6(format!("line {line}: {msg}")),
        Error::CapacityExceeded(n) => Error::Graph6(format!(
            "line {line}: order {n} exceeds the vertex capacity of {CAPACITY}"
        )),
        other => other,
    }
}

fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Parses a single edge-list graph.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut graphs = parse_edgelist_stream(text)?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        0 => Err(Error::EdgeList {
            line: 1,
            msg: "missing 'n <count>' header".into(),
        }),
        _ => Err(Error::EdgeList {
            line: 1,
            msg: format!("expected one graph, found {}", graphs.len()),
        }),
    }
}

/// Parses consecutive edge-list graphs; each starts at an `n <count>` line.
pub fn parse_edgelist_stream(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut current: Option<GraphBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = content(raw);
        if l.is_empty() {
            continue;
        }
        let err = |msg: String| Error::EdgeList { line, msg };
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields[0] == "n" {
            if fields.len() != 2 {
                return Err(err("header must be 'n <count>'".into()));
            }
            let n: usize = fields[1]
                .parse()
                .map_err(|_| err(format!("invalid vertex count '{}'", fields[1])))?;
            let b = GraphBuilder::new(n).map_err(|e| err(e.to_string()))?;
            if let Some(done) = current.replace(b) {
                graphs.push(done.build());
            }
            continue;
        }
        let Some(b) = current.as_mut() else {
            return Err(err("edge before 'n <count>' header".into()));
        };
        if fields.len() != 2 {
            return Err(err(format!("expected 'a b', found '{l}'")));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("invalid vertex index '{s}'")))
        };
        let (a, c) = (parse(fields[0])?, parse(fields[1])?);
        b.add_edge(a, c).map_err(|e| err(e.to_string()))?;
    }
    if let Some(done) = current {
        graphs.push(done.build());
    }
    Ok(graphs)
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.order());
    for (a, b) in g.edges() {
        writeln!(s, "{a} {b}").unwrap();
    }
    s
}

/// Interchange format selector shared by the CLI and the FFI layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl Format {
    pub fn parse_many(self, text: &str) -> Result<Vec<Graph>> {
        match self {
            Format::Graph6 => parse_graph6_lines(text),
            Format::EdgeList => parse_edgelist_stream(text),
        }
    }

    pub fn write(self, g: &Graph) -> String {
        match self {
            Format::Graph6 => write_graph6(g) + "\n",
            Format::EdgeList => write_edgelist(g),
        }
    }
}
