//! Simple undirected graphs on dense vertex indices `0..n`.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// A sorted list of distinct vertex indices.
pub type VertexSet = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("edge {{{0}, {1}}} listed more than once")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("label {0:?} used for two vertices")]
    DuplicateLabel(String),
}

/// Undirected simple graph with sorted adjacency lists and optional vertex labels.
///
/// Equality compares vertex count, edges and labels.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Self-loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj, m: edges.len(), labels: None })
    }

    /// Builds a graph from adjacency lists that are already symmetric and
    /// loop-free. Lists are sorted here.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut deg_sum = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            deg_sum += list.len();
        }
        Graph { adj, m: deg_sum / 2, labels: None }
    }

    /// Attaches display labels, one per vertex, all distinct.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount { expected: self.n(), got: labels.len() });
        }
        let mut seen = HashMap::with_capacity(labels.len());
        for l in &labels {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `v`; the index itself when the graph is unlabeled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == label),
            None => label.parse().ok().filter(|&v| v < self.n()),
        }
    }

    /// True when both graphs have the same vertex count and edge set,
    /// regardless of labels.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n()
    }

    /// Subgraph induced by `vs`; vertex `vs[i]` becomes vertex `i`.
    /// Labels carry over.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vs.iter().enumerate() {
            index[v] = i;
        }
        let adj = vs
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&w| (index[w] != usize::MAX).then_some(index[w])).collect())
            .collect();
        let mut g = Graph::from_adjacency(adj);
        if let Some(l) = &self.labels {
            g.labels = Some(vs.iter().map(|&v| l[v].clone()).collect());
        }
        g
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let mut adj = vec![Vec::new(); self.n()];
        for (v, list) in self.adj.iter().enumerate() {
            adj[perm[v]] = list.iter().map(|&w| perm[w]).collect();
        }
        let mut g = Graph::from_adjacency(adj);
        if let Some(l) = &self.labels {
            let mut nl = vec![String::new(); self.n()];
            for (v, s) in l.iter().enumerate() {
                nl[perm[v]] = s.clone();
            }
            g.labels = Some(nl);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| {
                let mut it = self.adj[u].iter().peekable();
                (0..n)
                    .filter(|&v| {
                        while it.peek().is_some_and(|&&w| w < v) {
                            it.next();
                        }
                        v != u && it.peek() != Some(&&v)
                    })
                    .collect()
            })
            .collect();
        Graph::from_adjacency(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Whether the neighbourhood of `v` is a clique.
///
/// # Panics
/// If `v` is not a vertex of `g`.
pub fn is_simplicial(g: &Graph, v: usize) -> bool {
    assert!(v < g.n(), "vertex {v} out of range");
    let nb = g.neighbors(v);
    nb.iter().enumerate().all(|(i, &a)| {
        // every later neighbour of v must appear in N(a)
        let na = g.neighbors(a);
        nb[i + 1..].iter().all(|b| na.binary_search(b).is_ok())
    })
}

pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&v| is_simplicial(g, v)).collect()
}

/// Largest number of pairwise non-adjacent simplicial vertices.
///
/// Two adjacent simplicial vertices have the same closed neighbourhood, so
/// adjacency restricted to simplicial vertices is an equivalence relation and
/// the answer is the number of its classes.
pub fn independent_simplicial_count(g: &Graph) -> usize {
    independent_simplicial_vertices(g).len()
}

/// One representative (the smallest index) of each class of mutually
/// adjacent simplicial vertices.
pub fn independent_simplicial_vertices(g: &Graph) -> VertexSet {
    let simp = simplicial_vertices(g);
    let mut is_simp = vec![false; g.n()];
    for &s in &simp {
        is_simp[s] = true;
    }
    simp.into_iter().filter(|&s| !g.neighbors(s).iter().any(|&w| w < s && is_simp[w])).collect()
}

/// An induced claw `[centre, a, b, c]`, if one exists.
pub fn find_claw(g: &Graph) -> Option<[usize; 4]> {
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in &nb[j + 1..] {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return Some([v, a, b, c]);
                    }
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}
