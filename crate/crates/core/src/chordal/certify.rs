//! Building posets whose cover-incomparability graph is a given chordal
//! graph.
//!
//! Two constructions live here. The peeling construction strips simplicial
//! vertices off a perfect elimination ordering down to a three-layer seed
//! and then re-attaches them one at a time at the top or bottom of the
//! poset. The interval construction reads an interval order straight off
//! the clique path.

use thiserror::Error;

use crate::chordal::clique_tree::CliqueTree;
use crate::chordal::ordering::EliminationOrdering;
use crate::graph::{Graph, VertexSet};
use crate::poset::{CertificateMismatch, Poset, PosetError, RankedLayers};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("no attachment rule places vertex {vertex} consistently")]
    StepFailed { vertex: usize },
    #[error("constructed poset does not reproduce the graph: {0}")]
    Mismatch(#[from] CertificateMismatch),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// The boundary of a poset at which a new extremal element can be hung.
///
/// On the top side `maximal` is the set of maximal elements, `covered` the
/// elements covered by one of them, and `frontier` the maximal elements
/// together with those covered elements that are not far below another
/// covered element. The bottom side is the mirror image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantFrontier {
    pub maximal: VertexSet,
    pub covered: VertexSet,
    pub top: VertexSet,
    pub minimal: VertexSet,
    pub covering: VertexSet,
    pub bottom: VertexSet,
}

pub fn pendant_frontier(p: &Poset) -> PendantFrontier {
    let (maximal, covered, top) = top_side(p);
    let (minimal, covering, bottom) = top_side(&p.dual());
    PendantFrontier { maximal, covered, top, minimal, covering, bottom }
}

fn top_side(p: &Poset) -> (VertexSet, VertexSet, VertexSet) {
    let maximal = p.maximal_elements();
    let mut covered: VertexSet = maximal.iter().flat_map(|&u| p.lower_covers(u).iter().copied()).collect();
    covered.sort_unstable();
    covered.dedup();
    let mut frontier: VertexSet = covered
        .iter()
        .copied()
        .filter(|&u| !covered.iter().any(|&w| p.far_below(u, w)))
        .chain(maximal.iter().copied())
        .collect();
    frontier.sort_unstable();
    (maximal, covered, frontier)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Top,
    Bottom,
}

/// Which rule produced the new covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttachCase {
    /// The neighbourhood is exactly the extremal elements.
    Extremal,
    /// The neighbourhood is the whole frontier.
    Frontier,
    /// Strictly between the two. `shared` records whether a single extremal
    /// element lies beyond every frontier element outside the neighbourhood;
    /// otherwise one such element is chosen per excluded frontier element.
    Mixed { shared: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attachment {
    pub poset: Poset,
    pub case: AttachCase,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AttachError {
    #[error("neighbourhood does not sit between the extremal elements and the frontier")]
    NotApplicable,
    #[error("new covers do not form a valid poset: {0}")]
    Invalid(PosetError),
}

/// Extends `p` by one new element, index `p.n()`, that is extremal on the
/// given side and adjacent in the cover-incomparability graph to exactly
/// `nbrs` when the rules succeed. The caller checks the graph.
pub fn attach_vertex(p: &Poset, nbrs: &[usize], side: Side) -> Result<Attachment, AttachError> {
    match side {
        Side::Top => attach_top(p, nbrs),
        Side::Bottom => {
            let a = attach_top(&p.dual(), nbrs)?;
            Ok(Attachment { poset: a.poset.dual(), case: a.case })
        }
    }
}

fn attach_top(p: &Poset, nbrs: &[usize]) -> Result<Attachment, AttachError> {
    let (maximal, _, frontier) = top_side(p);
    let mut x = nbrs.to_vec();
    x.sort_unstable();
    let contains = |set: &[usize], y: &usize| set.binary_search(y).is_ok();
    if !maximal.iter().all(|u| contains(&x, u)) || !x.iter().all(|u| contains(&frontier, u)) {
        return Err(AttachError::NotApplicable);
    }
    let e = p.n();
    let (below, case): (VertexSet, AttachCase) = if x == maximal {
        (maximal.clone(), AttachCase::Extremal)
    } else if x == frontier {
        (frontier.iter().copied().filter(|u| !contains(&maximal, u)).collect(), AttachCase::Frontier)
    } else {
        let mut below: VertexSet = x.iter().copied().filter(|u| !contains(&maximal, u)).collect();
        let excluded: VertexSet = frontier.iter().copied().filter(|u| !contains(&x, u)).collect();
        let shared = maximal.iter().copied().find(|&u| excluded.iter().all(|&r| p.less(r, u)));
        match shared {
            Some(u) => below.push(u),
            None => {
                for &r in &excluded {
                    if let Some(u) = maximal.iter().copied().find(|&u| p.less(r, u)) {
                        below.push(u);
                    }
                }
            }
        }
        below.sort_unstable();
        below.dedup();
        (below, AttachCase::Mixed { shared: shared.is_some() })
    };
    let mut covers: Vec<_> = p.covers().collect();
    covers.extend(below.iter().map(|&u| (u, e)));
    let poset = Poset::new(e + 1, &covers).map_err(AttachError::Invalid)?;
    Ok(Attachment { poset, case })
}

/// Peeling construction along a perfect elimination ordering.
///
/// Vertices are stripped from the front of `peo` until the rest is a
/// clique `R`. The last stripped vertex `v` with later neighbourhood `C`
/// seeds the completely ranked poset `{v} < C < R \ C`; earlier vertices
/// are then re-attached in reverse, trying the top side first.
pub fn certify_by_peeling(g: &Graph, peo: &EliminationOrdering) -> Result<Poset, CertifyError> {
    let n = g.n();
    let order = peo.order();
    let later: Vec<Vec<usize>> = order.iter().map(|&v| peo.later_neighbors(g, v)).collect();
    let mut j = n;
    while j > 0 && later[j - 1].len() == n - j {
        j -= 1;
    }
    if j == 0 {
        return Ok(Poset::antichain(n)?);
    }
    let k = j - 1;
    let seed_vertex = order[k];
    let c = &later[k];
    let rest: Vec<usize> = order[j..].iter().copied().filter(|v| !c.contains(v)).collect();

    let mut elems: Vec<usize> = Vec::with_capacity(n);
    elems.push(seed_vertex);
    elems.extend(c);
    elems.extend(&rest);
    let mut slot = vec![usize::MAX; n];
    for (i, &v) in elems.iter().enumerate() {
        slot[v] = i;
    }
    let layers = RankedLayers::from_sizes(&[1, c.len(), rest.len()])?;
    let mut p = Poset::completely_ranked(&layers)?;

    for i in (0..k).rev() {
        let v = order[i];
        let nbrs: Vec<usize> = later[i].iter().map(|&w| slot[w]).collect();
        let placed = [Side::Top, Side::Bottom].into_iter().find_map(|side| {
            let a = attach_vertex(&p, &nbrs, side).ok()?;
            new_row_matches(g, &a.poset, &elems, v).then_some(a.poset)
        });
        match placed {
            Some(q) => {
                p = q;
                slot[v] = elems.len();
                elems.push(v);
            }
            None => return Err(CertifyError::StepFailed { vertex: v }),
        }
    }
    let p = p.relabel(&elems);
    p.check_ci_graph(g)?;
    Ok(p)
}

/// Whether the newest element of `q` (graph vertex `v`) relates to every
/// earlier element as `g` demands. Pairs of earlier elements cannot change
/// when an extremal element is added.
fn new_row_matches(g: &Graph, q: &Poset, elems: &[usize], v: usize) -> bool {
    let e = q.n() - 1;
    elems.iter().enumerate().all(|(y, &w)| {
        let joined = q.is_cover(y, e) || q.is_cover(e, y) || !q.comparable(y, e);
        joined == g.has_edge(v, w)
    })
}

/// Interval `[s, t]` of every vertex read off a clique path `C_1..C_k`:
/// vertices only in `C_1` get `[0, 0]`, vertices only in `C_k` get
/// `[k, k]`, and a vertex in `C_l..C_r` otherwise gets `[l, r - 1]`.
/// Two vertices are adjacent exactly when their intervals overlap or touch.
pub fn interval_model(t: &CliqueTree, path: &[usize], n: usize) -> Vec<(usize, usize)> {
    let k = path.len();
    let mut index = vec![0usize; t.len()];
    for (i, &node) in path.iter().enumerate() {
        index[node] = i + 1;
    }
    (0..n)
        .map(|v| {
            let ids = t.nodes_of(v).iter().map(|&x| index[x]);
            let l = ids.clone().min().expect("every vertex lies in a clique");
            let r = ids.max().unwrap();
            match (l, r) {
                (1, 1) => (0, 0),
                (l, r) if l == k && r == k => (k, k),
                (l, r) => (l, r.max(l + 1) - 1),
            }
        })
        .collect()
}

/// Whether every separator position `1..k-1` of the interval model holds a
/// single-point interval.
pub fn has_point_at_every_separator(model: &[(usize, usize)], k: usize) -> bool {
    let mut point = vec![false; k + 1];
    for &(s, t) in model {
        if s == t {
            point[s] = true;
        }
    }
    (1..k).all(|j| point[j])
}

/// Interval construction: `u < v` exactly when the interval of `u` ends
/// before that of `v` starts. Always yields a poset; it reproduces the
/// graph whenever every separator holds a point interval, and the result is
/// checked either way.
pub fn certify_by_interval_order(g: &Graph, t: &CliqueTree, path: &[usize]) -> Result<Poset, CertifyError> {
    let n = g.n();
    let k = path.len();
    if k < 2 {
        return Ok(Poset::antichain(n)?);
    }
    let model = interval_model(t, path, n);
    let mut min_end_from = vec![usize::MAX; k + 2];
    let mut by_start = vec![Vec::new(); k + 1];
    for (v, &(s, e)) in model.iter().enumerate() {
        min_end_from[s] = min_end_from[s].min(e);
        by_start[s].push(v);
    }
    for i in (0..=k).rev() {
        min_end_from[i] = min_end_from[i].min(min_end_from[i + 1]);
    }
    let mut covers = Vec::new();
    for (u, &(_, e)) in model.iter().enumerate() {
        let a = e + 1;
        if a > k {
            continue;
        }
        // nothing fits strictly between u and any v starting no later than this
        let limit = min_end_from[a];
        for bucket in &by_start[a..=limit.min(k)] {
            covers.extend(bucket.iter().map(|&v| (u, v)));
        }
    }
    let p = Poset::new(n, &covers)?;
    p.check_ci_graph(g)?;
    Ok(p)
}
