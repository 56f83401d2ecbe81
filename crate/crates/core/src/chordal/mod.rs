//! Chordal graphs: recognition, clique trees, and deciding which connected
//! chordal graphs are cover-incomparability graphs.
//!
//! A connected chordal graph passes the structural test when its clique
//! tree is a path and no internal clique of that path owns a vertex of its
//! own. The test is necessary but not sufficient, so an accepted graph is
//! only reported as a cover-incomparability graph once a poset reproducing
//! it has been built and checked.

mod certify;
mod clique_tree;
mod ordering;

pub use certify::{
    attach_vertex, certify_by_interval_order, certify_by_peeling, has_point_at_every_separator, interval_model,
    pendant_frontier, AttachCase, AttachError, Attachment, CertifyError, PendantFrontier, Side,
};
pub use clique_tree::{internal_private_vertex, CliqueTree};
pub use ordering::{
    candidate_peo, chordless_cycle_through, is_chordless_cycle, is_peo, lex_bfs, mcs, peo_violation,
    EliminationOrdering, SearchEngine,
};

use thiserror::Error;

use crate::exact::{self, ExactError};
use crate::graph::{Graph, VertexSet};
use crate::poset::Poset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordalError {
    #[error("input graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error(
        "no constructive route certified the graph and exact search is limited to {limit} vertices (graph has {n})"
    )]
    Undecided { n: usize, limit: usize },
    #[error("exact search failed: {0}")]
    Exact(String),
}

/// Outcome of chordality testing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    /// Carries a perfect elimination ordering.
    Chordal(EliminationOrdering),
    /// Carries a chordless cycle of length at least four when one was found.
    NotChordal { witness: Option<Vec<usize>> },
}

pub fn recognize_chordal(g: &Graph, engine: SearchEngine) -> Result<Chordality, ChordalError> {
    require_connected(g)?;
    Ok(chordality(g, engine))
}

fn chordality(g: &Graph, engine: SearchEngine) -> Chordality {
    let peo = candidate_peo(g, engine);
    match peo_violation(g, &peo) {
        None => Chordality::Chordal(peo),
        Some((v, p, w)) => Chordality::NotChordal { witness: chordless_cycle_through(g, v, p, w) },
    }
}

fn require_connected(g: &Graph) -> Result<(), ChordalError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(ChordalError::Disconnected { components: g.components().len() })
    }
}

/// Why a chordal graph is not a cover-incomparability graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotCiReason {
    /// The clique tree has three or more leaves.
    CliqueTreeNotPath,
    /// An internal clique of the clique path owns a vertex.
    InternalPrivateVertex,
    /// The structural test passed but exhaustive search found no poset.
    NoCertificate,
}

impl NotCiReason {
    pub fn as_str(self) -> &'static str {
        match self {
            NotCiReason::CliqueTreeNotPath => "clique_tree_not_path",
            NotCiReason::InternalPrivateVertex => "internal_private_vertex",
            NotCiReason::NoCertificate => "no_certificate",
        }
    }
}

/// Result of the structural test alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalClass {
    NotChordal {
        witness: Option<Vec<usize>>,
    },
    /// `witness` holds three pairwise non-adjacent simplicial vertices.
    Rejected {
        reason: NotCiReason,
        witness: VertexSet,
    },
    /// Clique path `C_1..C_k` as node indices of `tree`.
    Accepted {
        peo: EliminationOrdering,
        tree: CliqueTree,
        path: Vec<usize>,
    },
}

/// Runs the linear-time structural test on a connected graph: chordality,
/// clique tree shape, and private vertices of internal cliques.
pub fn classify_chordal_ci(g: &Graph, engine: SearchEngine) -> Result<ChordalClass, ChordalError> {
    require_connected(g)?;
    let peo = match chordality(g, engine) {
        Chordality::Chordal(peo) => peo,
        Chordality::NotChordal { witness } => return Ok(ChordalClass::NotChordal { witness }),
    };
    let tree = CliqueTree::from_peo(g, &peo);
    let Some(path) = tree.path_order() else {
        let mut witness: VertexSet =
            tree.leaves().iter().take(3).map(|&k| tree.private_vertex(k).expect("leaves own a vertex")).collect();
        witness.sort_unstable();
        return Ok(ChordalClass::Rejected { reason: NotCiReason::CliqueTreeNotPath, witness });
    };
    if let Some(x) = internal_private_vertex(&tree, &path) {
        let ends = [path[0], path[path.len() - 1]].map(|k| tree.private_vertex(k).expect("ends own a vertex"));
        let mut witness = vec![x, ends[0], ends[1]];
        witness.sort_unstable();
        return Ok(ChordalClass::Rejected { reason: NotCiReason::InternalPrivateVertex, witness });
    }
    Ok(ChordalClass::Accepted { peo, tree, path })
}

/// How a certificate was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateRoute {
    /// Complete graph, certified by an antichain.
    Complete,
    Peeling,
    IntervalOrder,
    ExactSearch,
}

impl CertificateRoute {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateRoute::Complete => "complete",
            CertificateRoute::Peeling => "peeling",
            CertificateRoute::IntervalOrder => "interval_order",
            CertificateRoute::ExactSearch => "exact_search",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalVerdict {
    NotChordal { witness: Option<Vec<usize>> },
    NotCi { reason: NotCiReason, witness: VertexSet },
    Ci { certificate: Poset, route: CertificateRoute },
}

impl ChordalVerdict {
    pub fn is_ci(&self) -> bool {
        matches!(self, ChordalVerdict::Ci { .. })
    }
}

/// Tuning for the chordal pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChordalOptions {
    pub engine: SearchEngine,
    /// The peeling construction rebuilds the poset at every step, so it is
    /// skipped above this many vertices.
    pub peeling_max_n: usize,
    /// Largest graph handed to the exact search.
    pub exact_max_n: usize,
}

impl Default for ChordalOptions {
    fn default() -> Self {
        ChordalOptions { engine: SearchEngine::LexBfs, peeling_max_n: 2048, exact_max_n: exact::DEFAULT_MAX_N }
    }
}

/// Full decision for a connected graph, with a checked certificate on
/// success.
///
/// Graphs passing the structural test are certified by, in order, an
/// antichain (complete graphs), the peeling construction, the interval
/// construction, and finally exact search. Only the exact search can turn
/// an accepted graph into a rejection.
pub fn recognize_chordal_ci(g: &Graph, opts: &ChordalOptions) -> Result<ChordalVerdict, ChordalError> {
    match classify_chordal_ci(g, opts.engine)? {
        ChordalClass::NotChordal { witness } => Ok(ChordalVerdict::NotChordal { witness }),
        ChordalClass::Rejected { reason, witness } => Ok(ChordalVerdict::NotCi { reason, witness }),
        ChordalClass::Accepted { peo, tree, path } => match certify_accepted(g, opts, &peo, &tree, &path)? {
            Some((certificate, route)) => Ok(ChordalVerdict::Ci { certificate, route }),
            None => Ok(ChordalVerdict::NotCi { reason: NotCiReason::NoCertificate, witness: Vec::new() }),
        },
    }
}

fn certify_accepted(
    g: &Graph,
    opts: &ChordalOptions,
    peo: &EliminationOrdering,
    tree: &CliqueTree,
    path: &[usize],
) -> Result<Option<(Poset, CertificateRoute)>, ChordalError> {
    if path.len() == 1 {
        let p = Poset::antichain(g.n()).expect("graph is nonempty");
        return Ok(Some((p, CertificateRoute::Complete)));
    }
    if g.n() <= opts.peeling_max_n {
        if let Ok(p) = certify_by_peeling(g, peo) {
            return Ok(Some((p, CertificateRoute::Peeling)));
        }
    }
    if let Ok(p) = certify_by_interval_order(g, tree, path) {
        return Ok(Some((p, CertificateRoute::IntervalOrder)));
    }
    match exact::find_ci_poset(g, opts.exact_max_n) {
        Ok(found) => Ok(found.map(|p| (p, CertificateRoute::ExactSearch))),
        Err(ExactError::TooLarge { n, max }) => Err(ChordalError::Undecided { n, limit: max }),
        Err(e) => Err(ChordalError::Exact(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e).unwrap()
    }

    fn verdict(gr: &Graph) -> ChordalVerdict {
        recognize_chordal_ci(gr, &ChordalOptions::default()).unwrap()
    }

    #[test]
    fn path_is_ci_with_chain_certificate() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        match verdict(&p4) {
            ChordalVerdict::Ci { certificate, .. } => {
                assert!(certificate.ci_graph().same_edges(&p4));
                assert_eq!(certificate.height(), 4);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn claw_is_rejected_with_three_simplicial_vertices() {
        let claw = g(4, &[(0, 1), (0, 2), (0, 3)]);
        match verdict(&claw) {
            ChordalVerdict::NotCi { reason, witness } => {
                assert_eq!(reason, NotCiReason::InternalPrivateVertex);
                assert_eq!(witness, vec![1, 2, 3]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn c4_is_not_chordal() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        match verdict(&c4) {
            ChordalVerdict::NotChordal { witness: Some(c) } => assert!(is_chordless_cycle(&c4, &c)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn complete_graph_gets_antichain() {
        let k3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
        match verdict(&k3) {
            ChordalVerdict::Ci { certificate, route } => {
                assert_eq!(route, CertificateRoute::Complete);
                assert_eq!(certificate.cover_count(), 0);
            }
            other => panic!("{other:?}"),
        }
        let k1 = g(1, &[]);
        assert!(verdict(&k1).is_ci());
    }

    #[test]
    fn disconnected_input_is_an_error() {
        let two = g(2, &[]);
        assert_eq!(
            recognize_chordal_ci(&two, &ChordalOptions::default()),
            Err(ChordalError::Disconnected { components: 2 })
        );
    }

    #[test]
    fn spider_fails_path_test() {
        let spider = g(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]);
        match classify_chordal_ci(&spider, SearchEngine::LexBfs).unwrap() {
            ChordalClass::Rejected { reason, witness } => {
                assert_eq!(reason, NotCiReason::CliqueTreeNotPath);
                assert_eq!(witness, vec![3, 4, 5]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn structurally_accepted_graph_without_poset() {
        // passes the path and private-vertex tests, yet no poset on six
        // elements has it as cover-incomparability graph
        let gr = g(6, &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]);
        assert!(matches!(classify_chordal_ci(&gr, SearchEngine::LexBfs).unwrap(), ChordalClass::Accepted { .. }));
        assert_eq!(verdict(&gr), ChordalVerdict::NotCi { reason: NotCiReason::NoCertificate, witness: vec![] });
    }
}
