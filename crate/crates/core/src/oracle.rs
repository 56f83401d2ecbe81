//! Brute-force reference implementations for small graphs.
//!
//! Labeled posets are enumerated by inserting elements one at a time: the
//! new element `k` picks a down-closed set `D` of predecessors and an
//! up-closed set `U` of successors among `0..k`, with every member of `D`
//! below every member of `U`. Each labeled poset arises exactly once, so no
//! deduplication is needed.

#![allow(clippy::needless_range_loop)] // bit-matrix loops index two arrays by the same vertex

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::format;
use crate::graph::Graph;
use crate::poset::Poset;

/// Largest poset size the bitmask enumeration supports.
pub const MAX_ENUMERATION_N: usize = 7;

/// Default ceiling for oracle calls; size 7 (6,129,859 posets) must be
/// requested explicitly.
pub const DEFAULT_ORACLE_MAX_N: usize = 6;

/// Largest graph for the subset-based cycle and chordality checks.
pub const MAX_SUBSET_N: usize = 12;

/// Number of labeled posets on `n` elements for `n = 0..=7`.
pub const LABELED_POSET_COUNTS: [u64; 8] = [1, 1, 3, 19, 219, 4231, 130023, 6129859];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle limited to {max} vertices, graph has {n}")]
    TooLarge { n: usize, max: usize },
    #[error("oracle cache I/O: {0}")]
    Io(String),
    #[error("oracle cache is malformed: {0}")]
    Cache(String),
}

/// A strict order on at most [`MAX_ENUMERATION_N`] elements: bit `v` of
/// `above[u]` is set when `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    above: [u8; MAX_ENUMERATION_N],
}

impl Relation {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.above[a] >> b & 1 == 1
    }

    fn below(&self) -> [u8; MAX_ENUMERATION_N] {
        let mut below = [0u8; MAX_ENUMERATION_N];
        for u in 0..self.n {
            for v in 0..self.n {
                if self.less(u, v) {
                    below[v] |= 1 << u;
                }
            }
        }
        below
    }

    /// Adjacency masks of the cover-incomparability graph.
    pub fn ci_masks(&self) -> [u8; MAX_ENUMERATION_N] {
        let below = self.below();
        let full = ((1u16 << self.n) - 1) as u8;
        let mut adj = [0u8; MAX_ENUMERATION_N];
        for u in 0..self.n {
            let mut covers = 0u8;
            let mut up = self.above[u];
            while up != 0 {
                let v = up.trailing_zeros() as usize;
                up &= up - 1;
                if self.above[u] & below[v] == 0 {
                    covers |= 1 << v;
                }
            }
            let mut covered_by = 0u8;
            let mut down = below[u];
            while down != 0 {
                let w = down.trailing_zeros() as usize;
                down &= down - 1;
                if self.above[w] & below[u] == 0 {
                    covered_by |= 1 << w;
                }
            }
            let incomparable = full & !(self.above[u] | below[u]) & !(1 << u);
            adj[u] = incomparable | covers | covered_by;
        }
        adj
    }

    pub fn to_poset(&self) -> Poset {
        let pairs: Vec<_> =
            (0..self.n).flat_map(|u| (0..self.n).filter(move |&v| self.less(u, v)).map(move |v| (u, v))).collect();
        Poset::from_order_pairs(self.n, &pairs).expect("enumerated relations are strict orders")
    }
}

#[derive(Debug, Clone)]
struct Frame {
    above: [u8; MAX_ENUMERATION_N],
    k: usize,
    choices: Vec<(u8, u8)>,
    next: usize,
}

impl Frame {
    fn new(above: [u8; MAX_ENUMERATION_N], k: usize, n: usize) -> Self {
        let choices = if k < n { extensions(&above, k) } else { Vec::new() };
        Frame { above, k, choices, next: 0 }
    }
}

/// All valid `(D, U)` choices for inserting element `k`.
fn extensions(above: &[u8; MAX_ENUMERATION_N], k: usize) -> Vec<(u8, u8)> {
    let full = ((1u16 << k) - 1) as u8;
    let mut below = [0u8; MAX_ENUMERATION_N];
    for u in 0..k {
        for v in 0..k {
            if above[u] >> v & 1 == 1 {
                below[v] |= 1 << u;
            }
        }
    }
    let mut out = Vec::new();
    for d in 0..=full {
        let members = (0..k).filter(|&x| d >> x & 1 == 1);
        if members.clone().any(|x| below[x] & !d != 0) {
            continue;
        }
        let common = members.fold(full, |acc, x| acc & above[x]) & !d;
        // every submask of `common`, including the empty set
        let mut u = common;
        loop {
            let up_closed = (0..k).filter(|&x| u >> x & 1 == 1).all(|x| above[x] & !u == 0);
            if up_closed {
                out.push((d, u));
            }
            if u == 0 {
                break;
            }
            u = (u - 1) & common;
        }
    }
    out
}

/// Restartable stream of every labeled poset on `n` elements, in a fixed
/// order. Streams for a prefix split the full stream into chunks whose
/// concatenation is the full stream.
#[derive(Debug, Clone)]
pub struct PosetStream {
    n: usize,
    frames: Vec<Frame>,
}

impl PosetStream {
    /// # Panics
    /// If `n` is 0 or above [`MAX_ENUMERATION_N`].
    pub fn new(n: usize) -> Self {
        assert!((1..=MAX_ENUMERATION_N).contains(&n), "poset enumeration supports 1..=7 elements");
        PosetStream { n, frames: vec![Frame::new([0; MAX_ENUMERATION_N], 0, n)] }
    }

    /// Splits the enumeration by the poset induced on the first
    /// `prefix_len` elements. Chunks come in stream order.
    pub fn chunks(n: usize, prefix_len: usize) -> Vec<PosetStream> {
        assert!(prefix_len <= n);
        let mut seeds = PosetStream { n: prefix_len, frames: vec![Frame::new([0; MAX_ENUMERATION_N], 0, prefix_len)] };
        if prefix_len == 0 {
            return vec![PosetStream::new(n)];
        }
        let mut out = Vec::new();
        while let Some(r) = seeds.next_relation() {
            out.push(PosetStream { n, frames: vec![Frame::new(r.above, prefix_len, n)] });
        }
        out
    }

    pub fn next_relation(&mut self) -> Option<Relation> {
        loop {
            let top = self.frames.last_mut()?;
            if top.k == self.n {
                let r = Relation { n: self.n, above: top.above };
                self.frames.pop();
                return Some(r);
            }
            if top.next == top.choices.len() {
                self.frames.pop();
                continue;
            }
            let (d, u) = top.choices[top.next];
            top.next += 1;
            let k = top.k;
            let mut above = top.above;
            for x in 0..k {
                if d >> x & 1 == 1 {
                    above[x] |= 1 << k;
                }
            }
            above[k] = u;
            let child = Frame::new(above, k + 1, self.n);
            self.frames.push(child);
        }
    }

    /// The remaining posets as bitmask relations.
    pub fn relations(self) -> impl Iterator<Item = Relation> {
        let mut s = self;
        std::iter::from_fn(move || s.next_relation())
    }
}

impl Iterator for PosetStream {
    type Item = Poset;

    fn next(&mut self) -> Option<Poset> {
        self.next_relation().map(|r| r.to_poset())
    }
}

pub fn enumerate_labeled_posets(n: usize) -> PosetStream {
    PosetStream::new(n)
}

fn graph_masks(g: &Graph) -> [u8; MAX_ENUMERATION_N] {
    let mut m = [0u8; MAX_ENUMERATION_N];
    for (u, v) in g.edges() {
        m[u] |= 1 << v;
        m[v] |= 1 << u;
    }
    m
}

fn check_size(n: usize, max_n: usize) -> Result<(), OracleError> {
    let max = max_n.min(MAX_ENUMERATION_N);
    if n > max {
        Err(OracleError::TooLarge { n, max })
    } else {
        Ok(())
    }
}

/// First poset in stream order whose cover-incomparability graph is `g`.
pub fn is_ci_graph_bruteforce(g: &Graph, max_n: usize) -> Result<Option<Poset>, OracleError> {
    check_size(g.n(), max_n)?;
    let target = graph_masks(g);
    Ok(PosetStream::new(g.n()).relations().find(|r| r.ci_masks() == target).map(|r| r.to_poset()))
}

/// Same answer as [`is_ci_graph_bruteforce`], with chunks of the stream
/// spread over `workers` threads. The reported poset is the first match in
/// stream order, independent of scheduling.
pub fn is_ci_graph_bruteforce_parallel(g: &Graph, max_n: usize, workers: usize) -> Result<Option<Poset>, OracleError> {
    check_size(g.n(), max_n)?;
    let target = graph_masks(g);
    let chunks = PosetStream::chunks(g.n(), g.n().saturating_sub(2).min(4));
    let next = AtomicUsize::new(0);
    let best = AtomicUsize::new(usize::MAX);
    let found: Mutex<BTreeMap<usize, Relation>> = Mutex::new(BTreeMap::new());
    std::thread::scope(|s| {
        for _ in 0..workers.max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= chunks.len() || i > best.load(Ordering::Relaxed) {
                    break;
                }
                if let Some(r) = chunks[i].clone().relations().find(|r| r.ci_masks() == target) {
                    found.lock().unwrap().insert(i, r);
                    best.fetch_min(i, Ordering::Relaxed);
                }
            });
        }
    });
    let found = found.into_inner().unwrap();
    Ok(found.into_values().next().map(|r| r.to_poset()))
}

/// Every labeled cover-incomparability graph on `n` vertices, keyed by its
/// upper-triangle edge mask, with the first poset producing it.
pub fn ci_graph_table(n: usize) -> HashMap<u32, Relation> {
    let mut table = HashMap::new();
    for r in PosetStream::new(n).relations() {
        table.entry(edge_mask(&r.ci_masks(), n)).or_insert(r);
    }
    table
}

fn edge_mask(adj: &[u8], n: usize) -> u32 {
    let mut mask = 0u32;
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 1 {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

/// Upper-triangle edge mask of a graph on at most 8 vertices, pairs
/// ordered `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn graph_edge_mask(g: &Graph) -> u32 {
    assert!(g.n() <= 8, "edge masks cover at most 8 vertices");
    let mut mask = 0u32;
    let mut bit = 0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

fn graph_from_edge_mask(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges).expect("mask encodes a simple graph")
}

/// One representative of every isomorphism class of connected graphs on
/// `n` vertices (`1 <= n <= 7`): the labeling with the smallest edge mask.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "isomorphism sweep supports 1..=7 vertices");
    let pairs = n * (n - 1) / 2;
    let mut index = vec![vec![0usize; n]; n];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            index[u][v] = bit;
            index[v][u] = bit;
            bit += 1;
        }
    }
    let perm_tables: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|p| {
            let mut t = Vec::with_capacity(pairs);
            for u in 0..n {
                for v in u + 1..n {
                    t.push(index[p[u]][p[v]]);
                }
            }
            t
        })
        .collect();
    let mut out = Vec::new();
    for mask in 0..(1u32 << pairs) {
        let g = graph_from_edge_mask(n, mask);
        if !g.is_connected() {
            continue;
        }
        let canonical = perm_tables.iter().all(|t| {
            let mut image = 0u32;
            for (b, &target) in t.iter().enumerate() {
                image |= (mask >> b & 1) << target;
            }
            image >= mask
        });
        if canonical {
            out.push(g);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap_permute(&mut p, n, &mut out);
    out
}

fn heap_permute(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap_permute(p, k - 1, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
}

/// Length of a longest induced cycle (triangles count), 0 for forests.
pub fn max_induced_cycle(g: &Graph) -> Result<usize, OracleError> {
    let n = g.n();
    if n > MAX_SUBSET_N {
        return Err(OracleError::TooLarge { n, max: MAX_SUBSET_N });
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let mut best = 0;
    for s in 1u32..(1 << n) {
        let size = s.count_ones() as usize;
        if size < 3 || size <= best {
            continue;
        }
        let members = (0..n).filter(|&v| s >> v & 1 == 1);
        if !members.clone().all(|v| (adj[v] & s).count_ones() == 2) {
            continue;
        }
        // 2-regular: a cycle exactly when connected
        let start = s.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & s & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        if seen == s {
            best = size;
        }
    }
    Ok(best)
}

/// No induced cycle of length four or more.
pub fn is_chordal_bruteforce(g: &Graph) -> Result<bool, OracleError> {
    let n = g.n();
    if n > MAX_SUBSET_N {
        return Err(OracleError::TooLarge { n, max: MAX_SUBSET_N });
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    for s in 1u32..(1 << n) {
        if s.count_ones() < 4 {
            continue;
        }
        let members = (0..n).filter(|&v| s >> v & 1 == 1);
        if !members.clone().all(|v| (adj[v] & s).count_ones() == 2) {
            continue;
        }
        let start = s.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & s & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        if seen == s {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An induced path on four vertices, `a - b - c - d`, by checking every
/// quadruple.
pub fn find_induced_p4_bruteforce(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in a + 1..n {
                    let distinct = a != b && a != c && b != c && b != d && c != d;
                    if distinct
                        && g.has_edge(a, b)
                        && g.has_edge(b, c)
                        && g.has_edge(c, d)
                        && !g.has_edge(a, c)
                        && !g.has_edge(b, d)
                        && !g.has_edge(a, d)
                    {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

pub fn is_cograph_bruteforce(g: &Graph) -> bool {
    find_induced_p4_bruteforce(g).is_none()
}

/// Persistent memo of oracle answers keyed by graph6 string. `None`
/// records that no poset exists.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCache {
    entries: BTreeMap<String, Option<Vec<(usize, usize)>>>,
}

impl OracleCache {
    pub fn load(path: &Path) -> Result<Self, OracleError> {
        if !path.exists() {
            return Ok(OracleCache::default());
        }
        let text = std::fs::read_to_string(path).map_err(|e| OracleError::Io(e.to_string()))?;
        serde_json::from_str(&text).map_err(|e| OracleError::Cache(e.to_string()))
    }

    pub fn save(&self, path: &Path) -> Result<(), OracleError> {
        let text = serde_json::to_string_pretty(self).map_err(|e| OracleError::Cache(e.to_string()))?;
        std::fs::write(path, text).map_err(|e| OracleError::Io(e.to_string()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Cached answer for `g`: outer `None` when unknown. A stored poset
    /// that is invalid or does not produce `g` counts as unknown.
    pub fn get(&self, g: &Graph) -> Option<Option<Poset>> {
        match self.entries.get(&format::to_graph6(g))? {
            None => Some(None),
            Some(covers) => {
                let p = Poset::new(g.n(), covers).ok()?;
                p.check_ci_graph(g).ok()?;
                Some(Some(p))
            }
        }
    }

    pub fn insert(&mut self, g: &Graph, answer: Option<&Poset>) {
        self.entries.insert(format::to_graph6(g), answer.map(|p| p.covers().collect()));
    }

    /// Cached lookup falling back to [`is_ci_graph_bruteforce`].
    pub fn query(&mut self, g: &Graph, max_n: usize) -> Result<Option<Poset>, OracleError> {
        if let Some(hit) = self.get(g) {
            return Ok(hit);
        }
        let answer = is_ci_graph_bruteforce(g, max_n)?;
        self.insert(g, answer.as_ref());
        Ok(answer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        for n in 1..=5 {
            assert_eq!(PosetStream::new(n).relations().count() as u64, LABELED_POSET_COUNTS[n], "n = {n}");
        }
    }

    #[test]
    fn chunks_concatenate_to_stream() {
        let full: Vec<_> = PosetStream::new(5).relations().collect();
        let chunked: Vec<_> = PosetStream::chunks(5, 3).into_iter().flat_map(|c| c.relations()).collect();
        assert_eq!(full, chunked);
        assert_eq!(PosetStream::chunks(5, 3).len(), 19);
    }

    #[test]
    fn masks_agree_with_poset_ci_graph() {
        for r in PosetStream::new(4).relations() {
            let p = r.to_poset();
            let g = p.ci_graph();
            assert_eq!(graph_masks(&g), r.ci_masks());
        }
    }

    #[test]
    fn oracle_on_landmarks() {
        let claw = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(is_ci_graph_bruteforce(&claw, 6), Ok(None));
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let p = is_ci_graph_bruteforce(&p4, 6).unwrap().unwrap();
        assert!(p.ci_graph().same_edges(&p4));
        let big = Graph::new(7, &[]).unwrap();
        assert_eq!(is_ci_graph_bruteforce(&big, 6), Err(OracleError::TooLarge { n: 7, max: 6 }));
    }

    #[test]
    fn parallel_matches_sequential() {
        let bowtie = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(
            is_ci_graph_bruteforce(&bowtie, 6).unwrap(),
            is_ci_graph_bruteforce_parallel(&bowtie, 6, 3).unwrap()
        );
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<_> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn induced_cycles() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(max_induced_cycle(&c5), Ok(5));
        assert_eq!(is_chordal_bruteforce(&c5), Ok(false));
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(max_induced_cycle(&p3), Ok(0));
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(max_induced_cycle(&k4), Ok(3));
        assert_eq!(is_chordal_bruteforce(&k4), Ok(true));
    }

    #[test]
    fn p4_detection() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(find_induced_p4_bruteforce(&p4), Some([0, 1, 2, 3]));
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(is_cograph_bruteforce(&c4));
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("cigraph-cache-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("oracle.json");
        let mut cache = OracleCache::default();
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let claw = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let found = cache.query(&p4, 6).unwrap();
        cache.query(&claw, 6).unwrap();
        cache.save(&path).unwrap();
        let loaded = OracleCache::load(&path).unwrap();
        assert_eq!(loaded.len(), 2);
        assert_eq!(loaded.get(&p4), Some(found));
        assert_eq!(loaded.get(&claw), Some(None));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
