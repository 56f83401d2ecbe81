//! Text formats: edge lists, graph6, poset documents and Graphviz output.
//!
//! Edge list: a header line `n m`, then `m` lines `u v`. Blank lines and
//! lines starting with `#` are skipped. When every endpoint is an integer
//! below `n` the endpoints are vertex indices; otherwise they are labels,
//! numbered in order of first appearance, and exactly `n` distinct labels
//! must occur.
//!
//! Poset documents come in a line format
//!
//! ```text
//! elements a b c
//! cover a b
//! cover a c
//! rank a 0
//! ```
//!
//! and a JSON format with the same content (see [`PosetDocument`]). Ranks
//! are optional and are only written for graded posets.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::poset::{Poset, PosetError};

/// Version stamp written into every JSON document.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("invalid graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("JSON: {0}")]
    Json(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("ranks do not match the poset: {0}")]
    BadRanks(String),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Graph6,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, FormatError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let syntax = |line: usize, msg: &str| FormatError::Syntax { line, msg: msg.to_string() };
    let mut lines = data_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "missing `n m` header"))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = nums[..] else {
        return Err(syntax(hline, "header must be `n m`"));
    };
    let n: usize = n.parse().map_err(|_| syntax(hline, "vertex count is not a number"))?;
    let m: usize = m.parse().map_err(|_| syntax(hline, "edge count is not a number"))?;
    let mut raw: Vec<(usize, String, String)> = Vec::with_capacity(m);
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = toks[..] else {
            return Err(syntax(line, "edge line must hold two endpoints"));
        };
        raw.push((line, a.to_string(), b.to_string()));
    }
    if raw.len() != m {
        return Err(syntax(hline, &format!("header promises {m} edges, found {}", raw.len())));
    }
    let as_index = |s: &str| s.parse::<usize>().ok().filter(|&v| v < n);
    let indexed = raw.iter().all(|(_, a, b)| as_index(a).is_some() && as_index(b).is_some());
    if indexed {
        let edges: Vec<_> = raw.iter().map(|(_, a, b)| (as_index(a).unwrap(), as_index(b).unwrap())).collect();
        return Ok(Graph::new(n, &edges)?);
    }
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::with_capacity(m);
    for (_, a, b) in &raw {
        let mut id = |s: &String| {
            *ids.entry(s.clone()).or_insert_with(|| {
                labels.push(s.clone());
                labels.len() - 1
            })
        };
        let (x, y) = (id(a), id(b));
        edges.push((x, y));
    }
    if labels.len() != n {
        return Err(syntax(hline, &format!("header declares {n} vertices but {} labels appear", labels.len())));
    }
    Ok(Graph::new(n, &edges)?.with_labels(labels)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
    }
    out
}

/// Decodes one graph6 string; an optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let bad = |m: &str| FormatError::Graph6(m.to_string());
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("characters must lie in '?'..='~'"));
    }
    let (n, rest) = match bytes {
        [] => return Err(bad("empty input")),
        [126, 126, r @ ..] => {
            if r.len() < 6 {
                return Err(bad("truncated size field"));
            }
            (r[..6].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize), &r[6..])
        }
        [126, r @ ..] => {
            if r.len() < 3 {
                return Err(bad("truncated size field"));
            }
            (r[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize), &r[3..])
        }
        [b, r @ ..] => ((b - 63) as usize, r),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(bad(&format!("expected {} data bytes for {n} vertices, got {}", bits.div_ceil(6), rest.len())));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Serialized form of a poset over named elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    #[serde(default = "schema_version")]
    pub schema_version: u32,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ranks: Option<BTreeMap<String, usize>>,
}

fn schema_version() -> u32 {
    SCHEMA_VERSION
}

impl PosetDocument {
    /// Describes `p` with element `v` named `name(v)`.
    pub fn from_poset(p: &Poset, name: impl Fn(usize) -> String) -> Self {
        let elements: Vec<String> = (0..p.n()).map(&name).collect();
        let covers = p.covers().map(|(a, b)| (elements[a].clone(), elements[b].clone())).collect();
        let ranks =
            p.rank_function().map(|r| r.into_iter().enumerate().map(|(v, k)| (elements[v].clone(), k)).collect());
        PosetDocument { schema_version: SCHEMA_VERSION, elements, covers, ranks }
    }

    /// Rebuilds the poset, with element `i` being `self.elements[i]`.
    pub fn to_poset(&self) -> Result<Poset, FormatError> {
        let index: HashMap<&str, usize> = self.elements.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
        if index.len() != self.elements.len() {
            return Err(FormatError::Syntax { line: 0, msg: "element names repeat".into() });
        }
        let lookup = |s: &str| index.get(s).copied().ok_or_else(|| FormatError::UnknownElement(s.to_string()));
        let covers =
            self.covers.iter().map(|(a, b)| Ok((lookup(a)?, lookup(b)?))).collect::<Result<Vec<_>, FormatError>>()?;
        let p = Poset::new(self.elements.len(), &covers)?;
        if let Some(ranks) = &self.ranks {
            let actual = p.rank_function().ok_or_else(|| FormatError::BadRanks("poset is not graded".into()))?;
            for (name, &r) in ranks {
                let v = lookup(name)?;
                if actual[v] != r {
                    return Err(FormatError::BadRanks(format!("{name} has rank {}, not {r}", actual[v])));
                }
            }
        }
        Ok(p)
    }

    /// Reorders the poset onto the vertices of `g`: element named `x`
    /// becomes the vertex labelled `x`.
    pub fn to_poset_on(&self, g: &Graph) -> Result<Poset, FormatError> {
        let p = self.to_poset()?;
        if p.n() != g.n() {
            return Err(FormatError::Syntax {
                line: 0,
                msg: format!("poset has {} elements, graph has {} vertices", p.n(), g.n()),
            });
        }
        let perm = self
            .elements
            .iter()
            .map(|e| g.vertex_by_label(e).ok_or_else(|| FormatError::UnknownElement(e.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(p.relabel(&perm))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("elements {}\n", self.elements.join(" "));
        for (a, b) in &self.covers {
            let _ = writeln!(out, "cover {a} {b}");
        }
        if let Some(ranks) = &self.ranks {
            for e in &self.elements {
                let _ = writeln!(out, "rank {e} {}", ranks[e]);
            }
        }
        out
    }

    /// Parses either format, choosing JSON when the text starts with `{`.
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        if text.trim_start().starts_with('{') {
            return serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()));
        }
        let syntax = |line: usize, msg: &str| FormatError::Syntax { line, msg: msg.to_string() };
        let mut elements = None;
        let mut covers = Vec::new();
        let mut ranks: Option<BTreeMap<String, usize>> = None;
        for (line, l) in data_lines(text) {
            let toks: Vec<&str> = l.split_whitespace().collect();
            match toks[..] {
                ["elements", ref rest @ ..] => {
                    if elements.replace(rest.iter().map(|s| s.to_string()).collect::<Vec<_>>()).is_some() {
                        return Err(syntax(line, "`elements` given twice"));
                    }
                }
                ["cover", a, b] => covers.push((a.to_string(), b.to_string())),
                ["rank", a, r] => {
                    let r = r.parse().map_err(|_| syntax(line, "rank is not a number"))?;
                    ranks.get_or_insert_with(BTreeMap::new).insert(a.to_string(), r);
                }
                _ => return Err(syntax(line, "expected `elements ...`, `cover a b` or `rank a r`")),
            }
        }
        let elements = elements.ok_or_else(|| syntax(1, "missing `elements` line"))?;
        Ok(PosetDocument { schema_version: SCHEMA_VERSION, elements, covers, ranks })
    }
}

/// Hasse diagram in Graphviz syntax, drawn bottom to top.
pub fn hasse_dot(p: &Poset, name: impl Fn(usize) -> String) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for v in 0..p.n() {
        let _ = writeln!(out, "  {:?};", name(v));
    }
    for (a, b) in p.covers() {
        let _ = writeln!(out, "  {:?} -> {:?};", name(a), name(b));
    }
    out.push_str("}\n");
    out
}

/// The graph in Graphviz syntax.
pub fn graph_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {:?};", g.label(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {:?} -- {:?};", g.label(u), g.label(v));
    }
    out.push_str("}\n");
    out
}
