//! Vertex orderings: Lex-BFS, maximum cardinality search and perfect
//! elimination checks.

use std::collections::VecDeque;

use crate::graph::Graph;

/// A permutation of the vertices with O(1) position lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl EliminationOrdering {
    /// # Panics
    /// If `order` is not a permutation of `0..order.len()`.
    pub fn from_order(order: Vec<usize>) -> Self {
        let mut position = vec![usize::MAX; order.len()];
        for (i, &v) in order.iter().enumerate() {
            assert!(v < order.len() && position[v] == usize::MAX, "not a permutation");
            position[v] = i;
        }
        EliminationOrdering { order, position }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        EliminationOrdering::from_order(order)
    }

    /// Neighbours of `v` placed after it.
    pub fn later_neighbors(&self, g: &Graph, v: usize) -> Vec<usize> {
        let p = self.position[v];
        g.neighbors(v).iter().copied().filter(|&w| self.position[w] > p).collect()
    }
}

/// Which search produces the candidate elimination ordering.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum SearchEngine {
    #[default]
    LexBfs,
    Mcs,
}

/// Lexicographic breadth-first search by partition refinement, starting at
/// vertex 0 and breaking ties by the initial index order.
///
/// Returns the visit order; its reverse is a perfect elimination ordering
/// exactly when the graph is chordal.
pub fn lex_bfs(g: &Graph) -> EliminationOrdering {
    let n = g.n();
    let mut seq: Vec<usize> = (0..n).collect();
    let mut pos: Vec<usize> = (0..n).collect();
    // cells are contiguous ranges [start, end) of `seq`, kept in order
    let mut start = vec![0usize];
    let mut end = vec![n];
    let mut cell = vec![0usize; n];
    let mut split_round = vec![usize::MAX];
    let mut split_into = vec![0usize];

    for i in 0..n {
        let pivot = seq[i];
        let c = cell[pivot];
        start[c] += 1;
        for &w in g.neighbors(pivot) {
            if pos[w] <= i {
                continue;
            }
            let c = cell[w];
            if split_round[c] != i {
                split_round[c] = i;
                split_into[c] = start.len();
                start.push(start[c]);
                end.push(start[c]);
                split_round.push(usize::MAX);
                split_into.push(0);
            }
            let fresh = split_into[c];
            // move w to the front of its cell, then shift the boundary past it
            let front = start[c];
            let other = seq[front];
            seq.swap(front, pos[w]);
            pos[other] = pos[w];
            pos[w] = front;
            start[c] += 1;
            end[fresh] += 1;
            cell[w] = fresh;
        }
    }
    EliminationOrdering::from_order(seq)
}

/// Maximum cardinality search from vertex 0, ties broken by smallest index
/// among the most recently promoted vertices. Returns the visit order.
pub fn mcs(g: &Graph) -> EliminationOrdering {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    buckets[0] = (0..n).rev().collect();
    let mut top = 0usize;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let v = loop {
            match buckets[top].pop() {
                Some(v) if !visited[v] && weight[v] == top => break v,
                Some(_) => {}
                None => top -= 1,
            }
        };
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
                buckets[weight[w]].push(w);
                top = top.max(weight[w]);
            }
        }
    }
    EliminationOrdering::from_order(order)
}

/// Runs the chosen search and returns the candidate elimination ordering
/// (the reversed visit order).
pub fn candidate_peo(g: &Graph, engine: SearchEngine) -> EliminationOrdering {
    match engine {
        SearchEngine::LexBfs => lex_bfs(g).reversed(),
        SearchEngine::Mcs => mcs(g).reversed(),
    }
}

/// First violation of the perfect elimination property: a vertex `v` with
/// two later neighbours `p` and `w` that are not adjacent, where `p` is the
/// earliest later neighbour of `v`.
pub fn peo_violation(g: &Graph, peo: &EliminationOrdering) -> Option<(usize, usize, usize)> {
    for &v in peo.order() {
        let later = peo.later_neighbors(g, v);
        let Some(&p) = later.iter().min_by_key(|&&w| peo.position(w)) else {
            continue;
        };
        if let Some(&w) = later.iter().find(|&&w| w != p && !g.has_edge(p, w)) {
            return Some((v, p, w));
        }
    }
    None
}

pub fn is_peo(g: &Graph, peo: &EliminationOrdering) -> bool {
    peo.len() == g.n() && peo_violation(g, peo).is_none()
}

/// Tries to close a violation `(v, p, w)` into a chordless cycle
/// `v, p, ..., w` through vertices outside the neighbourhood of `v`.
pub fn chordless_cycle_through(g: &Graph, v: usize, p: usize, w: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &x in g.neighbors(v) {
        blocked[x] = x != p && x != w;
    }
    let mut parent = vec![usize::MAX; n];
    parent[p] = p;
    let mut queue = VecDeque::from([p]);
    while let Some(u) = queue.pop_front() {
        if u == w {
            let mut path = vec![w];
            let mut x = w;
            while x != p {
                x = parent[x];
                path.push(x);
            }
            path.push(v);
            path.reverse();
            return Some(path);
        }
        for &x in g.neighbors(u) {
            if !blocked[x] && parent[x] == usize::MAX {
                parent[x] = u;
                queue.push_back(x);
            }
        }
    }
    None
}

/// Whether `cycle` lists the vertices of an induced cycle of length at least 4.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mut distinct = cycle.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn lex_bfs_on_small_graphs() {
        // 0-1, 0-2, 1-3, 2-3, 2-4: after 0 the labels of 1 and 2 tie;
        // 1 comes first, then 2, then 3 (label {1,2}) beats 4 (label {2})
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (2, 4)]).unwrap();
        assert_eq!(lex_bfs(&g).order(), &[0, 1, 2, 3, 4]);
        let p = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(is_peo(&p, &lex_bfs(&p).reversed()));
    }

    #[test]
    fn lex_bfs_prefers_lexicographically_larger_labels() {
        // star centre 0 with leaves 1,2,3 plus edge 3-4 and 1-4
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (3, 4), (1, 4)]).unwrap();
        let order = lex_bfs(&g);
        assert_eq!(order.order()[0], 0);
        // 2 and 3 were reached from 0, which outranks 4's only visited neighbour 1
        assert_eq!(order.order(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn cycles_are_not_chordal() {
        for n in 4..8 {
            let g = cycle(n);
            for peo in [lex_bfs(&g).reversed(), mcs(&g).reversed()] {
                let (v, p, w) = peo_violation(&g, &peo).expect("cycle has no peo");
                let c = chordless_cycle_through(&g, v, p, w).expect("cycle found");
                assert!(is_chordless_cycle(&g, &c), "{c:?}");
                assert_eq!(c.len(), n);
            }
        }
    }

    #[test]
    fn mcs_gives_peo_on_chordal() {
        let fan = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]).unwrap();
        assert!(is_peo(&fan, &mcs(&fan).reversed()));
        assert!(is_peo(&fan, &lex_bfs(&fan).reversed()));
    }

    #[test]
    fn chordless_cycle_validator() {
        let g = cycle(5);
        assert!(is_chordless_cycle(&g, &[0, 1, 2, 3, 4]));
        assert!(!is_chordless_cycle(&g, &[0, 1, 2]));
        assert!(!is_chordless_cycle(&g, &[0, 2, 1, 3, 4]));
    }
}
