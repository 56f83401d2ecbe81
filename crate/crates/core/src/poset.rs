//! Finite posets stored by their cover relation, with a reachability
//! closure built once at construction.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Largest poset the closure matrix is allowed to cover (about 128 MiB).
pub const MAX_ELEMENTS: usize = 1 << 15;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("a poset needs at least one element")]
    Empty,
    #[error("{n} elements exceed the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("element {element} out of range for a poset on {n} elements")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("element {0} listed as covering itself")]
    SelfCover(usize),
    #[error("cover {0} < {1} listed more than once")]
    DuplicateCover(usize, usize),
    #[error("cover relation has a cycle through {0:?}")]
    Cycle(Vec<usize>),
    #[error("{lower} < {upper} is listed as a cover but {lower} < {via} < {upper}")]
    NotReduced { lower: usize, upper: usize, via: usize },
    #[error("layers do not partition 0..{n}: {detail}")]
    BadLayers { n: usize, detail: String },
}

/// Why a poset fails to certify a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateMismatch {
    #[error("graph has {graph} vertices but the poset has {poset} elements")]
    VertexCount { graph: usize, poset: usize },
    #[error("pair {a}, {b}: graph edge is {graph_edge} but the poset says otherwise")]
    Pair { a: usize, b: usize, graph_edge: bool },
}

/// A partial order on `0..n`.
///
/// Stored as its Hasse diagram. Equality compares the cover relation.
#[derive(Clone)]
pub struct Poset {
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    up: Vec<FixedBitSet>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.succ == other.succ
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset from its cover pairs `(lower, upper)`.
    ///
    /// Fails unless the pairs form an acyclic relation that is its own
    /// transitive reduction.
    pub fn new(n: usize, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        let (succ, pred) = adjacency(n, covers)?;
        let order = topological_order(&succ, &pred)?;
        let up = closure(&succ, &order);
        for (u, list) in succ.iter().enumerate() {
            if list.len() < 2 {
                continue;
            }
            let mut two_step = FixedBitSet::with_capacity(n);
            for &w in list {
                two_step.union_with(&up[w]);
            }
            if let Some(&v) = list.iter().find(|&&v| two_step.contains(v)) {
                let via = *list.iter().find(|&&w| up[w].contains(v)).unwrap();
                return Err(PosetError::NotReduced { lower: u, upper: v, via });
            }
        }
        Ok(Poset { succ, pred, up })
    }

    /// Poset generated by arbitrary order pairs `(a, b)` meaning `a < b`.
    /// Redundant pairs are dropped; cycles are rejected.
    pub fn from_order_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, PosetError> {
        let mut pairs = pairs.to_vec();
        pairs.sort_unstable();
        pairs.dedup();
        let (succ, pred) = adjacency(n, &pairs)?;
        let order = topological_order(&succ, &pred)?;
        let up = closure(&succ, &order);
        let mut covers = Vec::new();
        for (u, list) in succ.iter().enumerate() {
            let mut two_step = FixedBitSet::with_capacity(n);
            for &w in list {
                two_step.union_with(&up[w]);
            }
            // every strict successor that is not reachable in two steps is a cover
            covers.extend(up[u].ones().filter(|&v| !two_step.contains(v)).map(|v| (u, v)));
        }
        Poset::new(n, &covers)
    }

    pub fn chain(n: usize) -> Result<Self, PosetError> {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::new(n, &covers)
    }

    pub fn antichain(n: usize) -> Result<Self, PosetError> {
        Poset::new(n, &[])
    }

    /// Every element of one layer is covered by every element of the next.
    pub fn completely_ranked(layers: &RankedLayers) -> Result<Self, PosetError> {
        let mut covers = Vec::new();
        for pair in layers.layers.windows(2) {
            for &a in &pair[0] {
                covers.extend(pair[1].iter().map(|&b| (a, b)));
            }
        }
        Poset::new(layers.n(), &covers)
    }

    /// Disjoint union of posets; summand `i` occupies the index range after
    /// summands `0..i`.
    pub fn sum(parts: &[Poset]) -> Result<Self, PosetError> {
        let mut covers = Vec::new();
        let mut offset = 0;
        for p in parts {
            covers.extend(p.covers().map(|(a, b)| (a + offset, b + offset)));
            offset += p.n();
        }
        Poset::new(offset, &covers)
    }

    pub fn n(&self) -> usize {
        self.succ.len()
    }

    /// Cover pairs `(lower, upper)` in lexicographic order.
    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ.iter().enumerate().flat_map(|(u, l)| l.iter().map(move |&v| (u, v)))
    }

    pub fn cover_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// Elements covering `v`.
    pub fn upper_covers(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    /// Elements covered by `v`.
    pub fn lower_covers(&self, v: usize) -> &[usize] {
        &self.pred[v]
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.succ[a].binary_search(&b).is_ok()
    }

    /// Strict order `a < b`.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// Whether `a` and `b` are comparable.
    ///
    /// # Panics
    /// If `a == b` or either is out of range.
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        assert!(a != b, "comparability is asked of two distinct elements");
        self.up[a].contains(b) || self.up[b].contains(a)
    }

    /// `a < b` without `a` being covered by `b`.
    pub fn far_below(&self, a: usize, b: usize) -> bool {
        self.less(a, b) && !self.is_cover(a, b)
    }

    /// Strict up-set of `v`.
    pub fn above(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.up[v].ones()
    }

    pub fn maximal_elements(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.succ[v].is_empty()).collect()
    }

    pub fn minimal_elements(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.pred[v].is_empty()).collect()
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        let order = topological_order(&self.succ, &self.pred).expect("validated at construction");
        let mut len = vec![1usize; self.n()];
        for &u in &order {
            for &v in &self.succ[u] {
                len[v] = len[v].max(len[u] + 1);
            }
        }
        len.into_iter().max().unwrap_or(0)
    }

    /// Rank of every element when the poset is graded: minimal elements have
    /// rank 0 and every cover raises the rank by exactly one.
    pub fn rank_function(&self) -> Option<Vec<usize>> {
        let order = topological_order(&self.succ, &self.pred).expect("validated at construction");
        let mut rank: Vec<Option<usize>> = vec![None; self.n()];
        for &u in &order {
            let r = match self.pred[u].first() {
                None => 0,
                Some(&p) => rank[p].expect("predecessor ranked first") + 1,
            };
            if self.pred[u].iter().any(|&p| rank[p] != Some(r - 1)) {
                return None;
            }
            rank[u] = Some(r);
        }
        Some(rank.into_iter().map(|r| r.unwrap()).collect())
    }

    /// The cover-incomparability graph: `a ~ b` when one covers the other or
    /// they are incomparable. Non-edges are exactly the pairs `a < b` that
    /// are not covers.
    pub fn ci_graph(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                let joined = if self.up[u].contains(v) {
                    self.is_cover(u, v)
                } else if self.up[v].contains(u) {
                    self.is_cover(v, u)
                } else {
                    true
                };
                if joined {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Confirms that the cover-incomparability graph of this poset is `g`,
    /// reporting the first disagreeing pair otherwise.
    pub fn check_ci_graph(&self, g: &Graph) -> Result<(), CertificateMismatch> {
        if g.n() != self.n() {
            return Err(CertificateMismatch::VertexCount { graph: g.n(), poset: self.n() });
        }
        for u in 0..self.n() {
            let nb = g.neighbors(u);
            for v in u + 1..self.n() {
                let joined = !self.comparable(u, v) || self.is_cover(u, v) || self.is_cover(v, u);
                let edge = nb.binary_search(&v).is_ok();
                if joined != edge {
                    return Err(CertificateMismatch::Pair { a: u, b: v, graph_edge: edge });
                }
            }
        }
        Ok(())
    }

    /// Renames element `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let covers: Vec<_> = self.covers().map(|(a, b)| (perm[a], perm[b])).collect();
        Poset::new(self.n(), &covers).expect("relabelling preserves validity")
    }

    /// The order reversed. Its cover-incomparability graph is the same.
    pub fn dual(&self) -> Poset {
        let covers: Vec<_> = self.covers().map(|(a, b)| (b, a)).collect();
        Poset::new(self.n(), &covers).expect("reversal preserves validity")
    }

    /// Subposet on `keep`, with `keep[i]` becoming element `i`.
    pub fn induced(&self, keep: &[usize]) -> Result<Poset, PosetError> {
        let mut pairs = Vec::new();
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                if self.less(a, b) {
                    pairs.push((i, j));
                }
            }
        }
        Poset::from_order_pairs(keep.len(), &pairs)
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset(n={}, covers=[", self.n())?;
        for (i, (a, b)) in self.covers().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}<{b}")?;
        }
        write!(f, "])")
    }
}

/// An ordered partition of `0..n` into nonempty layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedLayers {
    layers: Vec<VertexSet>,
}

impl RankedLayers {
    pub fn new(layers: Vec<VertexSet>) -> Result<Self, PosetError> {
        let n: usize = layers.iter().map(Vec::len).sum();
        let bad = |detail: String| Err(PosetError::BadLayers { n, detail });
        let mut seen = vec![false; n];
        for (i, layer) in layers.iter().enumerate() {
            if layer.is_empty() {
                return bad(format!("layer {i} is empty"));
            }
            for &v in layer {
                if v >= n {
                    return bad(format!("element {v} out of range"));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return bad(format!("element {v} appears twice"));
                }
            }
        }
        let mut layers = layers;
        layers.iter_mut().for_each(|l| l.sort_unstable());
        Ok(RankedLayers { layers })
    }

    /// Layers of the given sizes filled with consecutive indices.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self, PosetError> {
        let mut next = 0;
        let layers = sizes
            .iter()
            .map(|&s| {
                let l = (next..next + s).collect();
                next += s;
                l
            })
            .collect();
        RankedLayers::new(layers)
    }

    pub fn layers(&self) -> &[VertexSet] {
        &self.layers
    }

    pub fn n(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// Longest chain of the completely ranked poset: one element per layer.
    pub fn height(&self) -> usize {
        self.layers.len()
    }
}

type Adjacency = (Vec<Vec<usize>>, Vec<Vec<usize>>);

fn adjacency(n: usize, pairs: &[(usize, usize)]) -> Result<Adjacency, PosetError> {
    if n == 0 {
        return Err(PosetError::Empty);
    }
    if n > MAX_ELEMENTS {
        return Err(PosetError::TooLarge { n, max: MAX_ELEMENTS });
    }
    let mut succ = vec![Vec::new(); n];
    let mut pred = vec![Vec::new(); n];
    for &(a, b) in pairs {
        for x in [a, b] {
            if x >= n {
                return Err(PosetError::ElementOutOfRange { element: x, n });
            }
        }
        if a == b {
            return Err(PosetError::SelfCover(a));
        }
        succ[a].push(b);
        pred[b].push(a);
    }
    for (a, list) in succ.iter_mut().enumerate() {
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(PosetError::DuplicateCover(a, w[0]));
        }
    }
    pred.iter_mut().for_each(|l| l.sort_unstable());
    Ok((succ, pred))
}

fn topological_order(succ: &[Vec<usize>], pred: &[Vec<usize>]) -> Result<Vec<usize>, PosetError> {
    let n = succ.len();
    let mut indeg: Vec<usize> = pred.iter().map(Vec::len).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in &succ[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                queue.push_back(v);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // Every leftover vertex has a leftover predecessor; walking back must repeat.
    let start = (0..n).find(|&v| indeg[v] > 0).unwrap();
    let mut pos = vec![usize::MAX; n];
    let mut walk = Vec::new();
    let mut v = start;
    while pos[v] == usize::MAX {
        pos[v] = walk.len();
        walk.push(v);
        v = *pred[v].iter().find(|&&p| indeg[p] > 0).unwrap();
    }
    let mut cycle = walk.split_off(pos[v]);
    cycle.reverse();
    Err(PosetError::Cycle(cycle))
}

fn closure(succ: &[Vec<usize>], order: &[usize]) -> Vec<FixedBitSet> {
    let n = succ.len();
    let mut up = vec![FixedBitSet::with_capacity(n); n];
    for &u in order.iter().rev() {
        let mut row = FixedBitSet::with_capacity(n);
        for &w in &succ[u] {
            row.insert(w);
            row.union_with(&up[w]);
        }
        up[u] = row;
    }
    up
}
