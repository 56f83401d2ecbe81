//! Graph and poset generators for test corpora and the `gen` command.
//!
//! Random generators take any [`Rng`]; [`seeded`] gives the reproducible
//! generator used by the command-line tool.

use rand::seq::SliceRandom;
use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::chordal::{attach_vertex, pendant_frontier, Side};
use crate::cograph::{normalize_cotree, NodeKind, RawCotree};
use crate::graph::Graph;
use crate::poset::{Poset, RankedLayers};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall { what: &'static str, min: usize, got: usize },
}

fn at_least(what: &'static str, got: usize, min: usize) -> Result<(), GenerateError> {
    if got < min {
        Err(GenerateError::TooSmall { what, min, got })
    } else {
        Ok(())
    }
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph, GenerateError> {
    at_least("path length", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::new(n, &edges).expect("path edges are valid"))
}

pub fn complete(n: usize) -> Result<Graph, GenerateError> {
    at_least("clique size", n, 1)?;
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(Graph::new(n, &edges).expect("clique edges are valid"))
}

/// The path `0 - ... - (k-1)` joined with a hub vertex `k`.
pub fn fan(k: usize) -> Result<Graph, GenerateError> {
    at_least("fan rim length", k, 1)?;
    let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    edges.extend((0..k).map(|i| (i, k)));
    Ok(Graph::new(k + 1, &edges).expect("fan edges are valid"))
}

/// The completely ranked poset with layer sizes `2, 1, 2, 1, ..., 2`
/// holding `k` bowties, and its cover-incomparability graph: `k` bowties
/// glued in a row.
pub fn bowtie_chain(k: usize) -> Result<(Graph, Poset), GenerateError> {
    at_least("bowtie count", k, 1)?;
    let sizes: Vec<usize> = (0..2 * k + 1).map(|i| if i % 2 == 0 { 2 } else { 1 }).collect();
    let p = Poset::completely_ranked(&RankedLayers::from_sizes(&sizes).expect("sizes are positive"))
        .expect("layered poset is valid");
    Ok((p.ci_graph(), p))
}

fn random_permutation(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Splits `n` into `parts` positive sizes.
fn random_composition(n: usize, parts: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut sizes = vec![1; parts];
    for _ in parts..n {
        sizes[rng.random_range(0..parts)] += 1;
    }
    sizes
}

/// A ranked poset on `n` elements built layer by layer: each element of a
/// layer covers a random non-empty subset of the layer below.
fn random_layered_poset(n: usize, rng: &mut impl Rng) -> Poset {
    let height = rng.random_range(1..=n);
    let sizes = random_composition(n, height, rng);
    let mut covers = Vec::new();
    let mut start = 0;
    for w in sizes.windows(2) {
        let (lo, hi) = (start..start + w[0], start + w[0]..start + w[0] + w[1]);
        let density = rng.random_range(0.2..=1.0);
        for v in hi.clone() {
            let mut below: Vec<usize> = lo.clone().filter(|_| rng.random_bool(density)).collect();
            if below.is_empty() {
                below.push(rng.random_range(lo.clone()));
            }
            covers.extend(below.into_iter().map(|u| (u, v)));
        }
        start += w[0];
    }
    Poset::new(n, &covers).expect("covers between consecutive layers form a valid poset")
}

/// A random poset on `n` elements: a sum of one to three random layered
/// posets, with elements shuffled. Its cover-incomparability graph is a
/// guaranteed yes-instance.
pub fn random_poset(n: usize, rng: &mut impl Rng) -> Result<Poset, GenerateError> {
    at_least("poset size", n, 1)?;
    let parts = rng.random_range(1..=n.min(3));
    let parts: Vec<Poset> =
        random_composition(n, parts, rng).into_iter().map(|k| random_layered_poset(k, rng)).collect();
    let p = Poset::sum(&parts).expect("sum of valid posets");
    Ok(p.relabel(&random_permutation(n, rng)))
}

/// A connected chordal cover-incomparability graph on `n` vertices with a
/// poset that certifies it.
///
/// Starts from a small completely ranked poset and repeatedly adds an
/// extremal element on a random side whose graph neighbourhood is a random
/// clique between the extremal elements and the pendant frontier. The new
/// vertex is simplicial, so the graph stays chordal. Vertices are shuffled
/// at the end.
pub fn random_chordal_ci(n: usize, rng: &mut impl Rng) -> Result<(Graph, Poset), GenerateError> {
    at_least("graph size", n, 1)?;
    let seed_n = rng.random_range(1..=n.min(5));
    let seed_sizes = match seed_n {
        1 | 2 => vec![seed_n],
        _ => {
            let a = rng.random_range(1..seed_n - 1);
            vec![a, 1, seed_n - 1 - a]
        }
    };
    let mut p = Poset::completely_ranked(&RankedLayers::from_sizes(&seed_sizes).expect("positive sizes"))
        .expect("layered poset is valid");
    while p.n() < n {
        p = grow_once(&p, rng);
    }
    let perm = random_permutation(n, rng);
    let p = p.relabel(&perm);
    Ok((p.ci_graph(), p))
}

fn grow_once(p: &Poset, rng: &mut impl Rng) -> Poset {
    let side = if rng.random_bool(0.5) { Side::Top } else { Side::Bottom };
    let f = pendant_frontier(p);
    let (extremal, frontier) = match side {
        Side::Top => (&f.maximal, &f.top),
        Side::Bottom => (&f.minimal, &f.bottom),
    };
    let keep = rng.random_range(0.0..=1.0);
    let mut nbrs = extremal.clone();
    nbrs.extend(frontier.iter().copied().filter(|u| !extremal.contains(u) && rng.random_bool(keep)));
    nbrs.sort_unstable();
    if let Ok(a) = attach_vertex(p, &nbrs, side) {
        let g = a.poset.ci_graph();
        let e = p.n();
        if g.neighbors(e) == nbrs.as_slice() && g.is_clique(&nbrs) {
            return a.poset;
        }
    }
    // a new element above or below every extremal element sees exactly them
    attach_vertex(p, extremal, side).expect("extremal attachment always applies").poset
}

/// A connected chordal graph on `n` vertices. Each new vertex is joined to
/// a random clique inside the closed neighbourhood of a random earlier
/// vertex. Vertices are shuffled at the end.
pub fn random_chordal(n: usize, rng: &mut impl Rng) -> Result<Graph, GenerateError> {
    at_least("graph size", n, 1)?;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        let mut candidates = adj[u].clone();
        candidates.shuffle(rng);
        let keep = rng.random_range(0.0..=1.0);
        let mut clique = vec![u];
        for w in candidates {
            if rng.random_bool(keep) && clique.iter().all(|c| adj[w].contains(c)) {
                clique.push(w);
            }
        }
        for &w in &clique {
            adj[w].push(v);
            adj[v].push(w);
            edges.push((w, v));
        }
    }
    let g = Graph::new(n, &edges).expect("generated edges are valid");
    Ok(g.relabel(&random_permutation(n, rng)))
}

/// A random cotree in the family of cover-incomparability cographs on `n`
/// vertices: a join of universal leaves and union nodes, each union having
/// two children that are cliques, with at least as many universal leaves
/// as unions. Leaves are assigned to vertices at random.
pub fn random_tc_cotree(n: usize, rng: &mut impl Rng) -> Result<RawCotree, GenerateError> {
    at_least("cograph size", n, 1)?;
    let mut labels = random_permutation(n, rng).into_iter();
    let mut leaf = || RawCotree::leaf(labels.next().expect("enough labels"));
    let max_unions = n / 3;
    let unions = if max_unions == 0 || rng.random_bool(0.05) { 0 } else { rng.random_range(1..=max_unions) };
    let universal = if unions == 0 { n } else { rng.random_range(unions..=n - 2 * unions) };
    let sizes = if unions == 0 { Vec::new() } else { random_composition(n - universal, 2 * unions, rng) };
    let clique = |k: usize, leaf: &mut dyn FnMut() -> RawCotree| {
        if k == 1 {
            leaf()
        } else {
            RawCotree::combine(NodeKind::Join, (0..k).map(|_| leaf()).collect())
        }
    };
    let mut children: Vec<RawCotree> = (0..universal).map(|_| leaf()).collect();
    for pair in sizes.chunks(2) {
        let a = clique(pair[0], &mut leaf);
        let b = clique(pair[1], &mut leaf);
        children.push(RawCotree::combine(NodeKind::Union, vec![a, b]));
    }
    children.shuffle(rng);
    Ok(if n == 1 { children.pop().expect("one leaf") } else { RawCotree::combine(NodeKind::Join, children) })
}

/// A random connected cograph on `n` vertices, as a raw cotree that may
/// contain unary nodes and same-label parent/child pairs.
pub fn random_connected_cotree(n: usize, rng: &mut impl Rng) -> Result<RawCotree, GenerateError> {
    at_least("cograph size", n, 1)?;
    let vertices = random_permutation(n, rng);
    Ok(random_cotree_on(&vertices, NodeKind::Join, rng))
}

fn random_cotree_on(vs: &[usize], kind: NodeKind, rng: &mut impl Rng) -> RawCotree {
    if vs.len() == 1 {
        return RawCotree::leaf(vs[0]);
    }
    let parts = rng.random_range(2..=vs.len().min(4));
    let sizes = random_composition(vs.len(), parts, rng);
    let flip = match kind {
        NodeKind::Join => NodeKind::Union,
        _ => NodeKind::Join,
    };
    let mut start = 0;
    let mut children = Vec::new();
    for k in sizes {
        let child_kind = if rng.random_bool(0.1) { kind } else { flip };
        children.push(random_cotree_on(&vs[start..start + k], child_kind, rng));
        start += k;
    }
    let node = RawCotree::combine(kind, children);
    if rng.random_bool(0.05) {
        RawCotree::combine(kind, vec![node])
    } else {
        node
    }
}

/// The graph of a raw cotree.
pub fn cotree_graph(raw: &RawCotree) -> Graph {
    normalize_cotree(raw).expect("generated cotrees are well formed").to_graph()
}
