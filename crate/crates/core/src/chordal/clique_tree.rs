//! Clique trees of chordal graphs, built by one sweep over a perfect
//! elimination ordering.

use crate::chordal::ordering::EliminationOrdering;
use crate::graph::{is_simplicial, Graph, VertexSet};

/// Maximal cliques arranged in a tree where, for every vertex, the nodes
/// containing it form a subtree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueTree {
    cliques: Vec<VertexSet>,
    adj: Vec<Vec<usize>>,
    membership: Vec<Vec<usize>>,
}

impl CliqueTree {
    /// Builds the tree from a perfect elimination ordering of a connected
    /// chordal graph. The result is unspecified if `peo` is not perfect.
    pub fn from_peo(g: &Graph, peo: &EliminationOrdering) -> Self {
        let n = g.n();
        let mut cliques: Vec<VertexSet> = Vec::new();
        let mut adj: Vec<Vec<usize>> = Vec::new();
        let mut node_of = vec![usize::MAX; n];
        for &v in peo.order().iter().rev() {
            let later = peo.later_neighbors(g, v);
            let parent = later.iter().copied().min_by_key(|&w| peo.position(w));
            match parent {
                Some(p) if cliques[node_of[p]].len() == later.len() => {
                    // the node of p is exactly the later neighbourhood of v
                    let k = node_of[p];
                    cliques[k].push(v);
                    node_of[v] = k;
                }
                _ => {
                    let k = cliques.len();
                    let mut c = later;
                    c.push(v);
                    cliques.push(c);
                    adj.push(Vec::new());
                    let anchor = match parent {
                        Some(p) => Some(node_of[p]),
                        None if k > 0 => Some(k - 1),
                        None => None,
                    };
                    if let Some(a) = anchor {
                        adj[a].push(k);
                        adj[k].push(a);
                    }
                    node_of[v] = k;
                }
            }
        }
        for c in &mut cliques {
            c.sort_unstable();
        }
        let mut membership = vec![Vec::new(); n];
        for (k, c) in cliques.iter().enumerate() {
            for &v in c {
                membership[v].push(k);
            }
        }
        CliqueTree { cliques, adj, membership }
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Tree neighbours of node `k`.
    pub fn tree_neighbors(&self, k: usize) -> &[usize] {
        &self.adj[k]
    }

    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(a, l)| l.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
            .collect();
        e.sort_unstable();
        e
    }

    /// Nodes containing vertex `v`, ascending.
    pub fn nodes_of(&self, v: usize) -> &[usize] {
        &self.membership[v]
    }

    /// Nodes of degree at most one. A single node counts as one leaf.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.adj[k].len() <= 1).collect()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves().len()
    }

    pub fn is_path(&self) -> bool {
        self.adj.iter().all(|l| l.len() <= 2)
    }

    /// Node indices from one end of the path to the other, starting at the
    /// end with the smaller index. `None` unless the tree is a path.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        if !self.is_path() {
            return None;
        }
        let start = *self.leaves().first()?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = self.adj[cur].iter().find(|&&x| x != prev) {
            prev = cur;
            cur = next;
            order.push(cur);
        }
        Some(order)
    }

    /// A vertex that belongs to `node` and to no other node.
    pub fn private_vertex(&self, node: usize) -> Option<usize> {
        self.cliques[node].iter().copied().find(|&v| self.membership[v].len() == 1)
    }

    /// Checks the defining properties against `g`: every node is a maximal
    /// clique, no clique is listed twice, every maximal clique containing a
    /// vertex is covered, the tree is connected and acyclic, and the nodes
    /// holding each vertex form a subtree.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let k = self.len();
        if k == 0 {
            return Err("no nodes".into());
        }
        for (i, c) in self.cliques.iter().enumerate() {
            if !g.is_clique(c) {
                return Err(format!("node {i} is not a clique"));
            }
            // maximal: nobody outside is adjacent to all members
            let outside = (0..g.n()).find(|&x| c.binary_search(&x).is_err() && c.iter().all(|&y| g.has_edge(x, y)));
            if let Some(x) = outside {
                return Err(format!("node {i} extends by vertex {x}"));
            }
        }
        let mut sorted = self.cliques.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err("a clique appears twice".into());
        }
        if self.tree_edges().len() != k - 1 || !self.connected_within(&(0..k).collect::<Vec<_>>()) {
            return Err("nodes do not form a tree".into());
        }
        for v in 0..g.n() {
            if self.membership[v].is_empty() {
                return Err(format!("vertex {v} is in no node"));
            }
            if !self.connected_within(&self.membership[v]) {
                return Err(format!("nodes containing {v} are not a subtree"));
            }
        }
        // every edge lies in some clique
        for (u, v) in g.edges() {
            let shared = self.membership[u].iter().any(|x| self.membership[v].binary_search(x).is_ok());
            if !shared {
                return Err(format!("edge {u}-{v} in no node"));
            }
        }
        Ok(())
    }

    /// Every leaf holds a vertex that is simplicial in `g`.
    pub fn leaves_have_simplicial(&self, g: &Graph) -> bool {
        self.leaves().into_iter().all(|k| self.cliques[k].iter().any(|&v| is_simplicial(g, v)))
    }

    fn connected_within(&self, nodes: &[usize]) -> bool {
        let mut inside = vec![false; self.len()];
        for &x in nodes {
            inside[x] = true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![nodes[0]];
        seen[nodes[0]] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if inside[y] && !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == nodes.len()
    }
}

/// On a clique path `C_1, ..., C_k`, a vertex lying only in one internal
/// clique `C_i` with `1 < i < k`.
pub fn internal_private_vertex(t: &CliqueTree, path: &[usize]) -> Option<usize> {
    if path.len() < 3 {
        return None;
    }
    path[1..path.len() - 1].iter().find_map(|&k| t.private_vertex(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::ordering::lex_bfs;

    fn tree(g: &Graph) -> CliqueTree {
        CliqueTree::from_peo(g, &lex_bfs(g).reversed())
    }

    #[test]
    fn path_graph_gives_path_of_edges() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let t = tree(&g);
        t.validate(&g).unwrap();
        assert_eq!(t.len(), 3);
        assert!(t.is_path());
        let order = t.path_order().unwrap();
        let cl: Vec<_> = order.iter().map(|&k| t.cliques()[k].clone()).collect();
        assert!(cl == vec![vec![0, 1], vec![1, 2], vec![2, 3]] || cl == vec![vec![2, 3], vec![1, 2], vec![0, 1]]);
        assert_eq!(internal_private_vertex(&t, &order), None);
    }

    #[test]
    fn claw_has_internal_private_vertex_or_three_leaves() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = tree(&g);
        t.validate(&g).unwrap();
        assert_eq!(t.len(), 3);
        if let Some(order) = t.path_order() {
            assert!(internal_private_vertex(&t, &order).is_some());
        } else {
            assert!(t.leaf_count() >= 3);
        }
    }

    #[test]
    fn spider_is_not_a_path() {
        // triangle 0,1,2 with a pendant on each corner
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        let t = tree(&g);
        t.validate(&g).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t.leaf_count(), 3);
        assert!(t.path_order().is_none());
        assert!(t.leaves_have_simplicial(&g));
    }

    #[test]
    fn complete_graph_is_one_node() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let t = tree(&g);
        assert_eq!(t.cliques(), &[vec![0, 1, 2]]);
        assert_eq!(t.leaf_count(), 1);
        assert_eq!(t.path_order(), Some(vec![0]));
    }
}
