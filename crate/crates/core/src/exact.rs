//! Exact search for a poset with a prescribed cover-incomparability graph,
//! as a SAT instance.
//!
//! Variables `lt(u, v)` describe a strict order. A non-edge `{u, v}` forces
//! the two elements to be comparable with some element strictly between
//! them; an edge forbids any element strictly between them in either
//! direction. Reversing a solution gives another solution, so the first
//! non-edge is oriented up front.

use thiserror::Error;
use varisat::{CnfFormula, ExtendFormula, Lit, Solver, Var};

use crate::graph::Graph;
use crate::poset::Poset;

/// Default ceiling on graph size. The instance has cubic size and the
/// solver has no time budget, so larger graphs are refused.
pub const DEFAULT_MAX_N: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("exact search handles at most {max} vertices, graph has {n}")]
    TooLarge { n: usize, max: usize },
    #[error("SAT solver failed: {0}")]
    Solver(String),
}

/// A poset whose cover-incomparability graph is `g`, or `None` when no
/// poset qualifies.
pub fn find_ci_poset(g: &Graph, max_n: usize) -> Result<Option<Poset>, ExactError> {
    let n = g.n();
    if n > max_n {
        return Err(ExactError::TooLarge { n, max: max_n });
    }
    let lt = |u: usize, v: usize| Var::from_index(u * n + v);
    let mut next_aux = n * n;
    let mut f = CnfFormula::new();

    for u in 0..n {
        for v in u + 1..n {
            f.add_clause(&[lt(u, v).negative(), lt(v, u).negative()]);
        }
    }
    for u in 0..n {
        for w in 0..n {
            for v in 0..n {
                if u != w && w != v && u != v {
                    f.add_clause(&[lt(u, w).negative(), lt(w, v).negative(), lt(u, v).positive()]);
                }
            }
        }
    }
    let mut oriented = false;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                for w in (0..n).filter(|&w| w != u && w != v) {
                    f.add_clause(&[lt(u, w).negative(), lt(w, v).negative()]);
                    f.add_clause(&[lt(v, w).negative(), lt(w, u).negative()]);
                }
                continue;
            }
            if oriented {
                f.add_clause(&[lt(u, v).positive(), lt(v, u).positive()]);
            } else {
                f.add_clause(&[lt(u, v).positive()]);
                oriented = true;
            }
            for (a, b) in [(u, v), (v, u)] {
                // lt(a, b) implies some w with lt(a, w) and lt(w, b)
                let mut witness: Vec<Lit> = vec![lt(a, b).negative()];
                for w in (0..n).filter(|&w| w != a && w != b) {
                    let aux = Var::from_index(next_aux);
                    next_aux += 1;
                    f.add_clause(&[aux.negative(), lt(a, w).positive()]);
                    f.add_clause(&[aux.negative(), lt(w, b).positive()]);
                    witness.push(aux.positive());
                }
                f.add_clause(&witness);
            }
        }
    }

    let mut solver = Solver::new();
    solver.add_formula(&f);
    let sat = solver.solve().map_err(|e| ExactError::Solver(e.to_string()))?;
    if !sat {
        return Ok(None);
    }
    let model = solver.model().expect("satisfiable instance has a model");
    let mut pairs = Vec::new();
    for lit in model {
        let i = lit.var().index();
        if lit.is_positive() && i < n * n {
            pairs.push((i / n, i % n));
        }
    }
    let p = Poset::from_order_pairs(n, &pairs).map_err(|e| ExactError::Solver(e.to_string()))?;
    p.check_ci_graph(g).map_err(|e| ExactError::Solver(format!("decoded model is wrong: {e}")))?;
    Ok(Some(p))
}
