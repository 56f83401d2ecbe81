//! Verdict documents shared by the command-line tool and library users.
//!
//! The JSON layout is versioned by `schema_version`. Fields that do not
//! apply to a verdict are omitted. Vertices are referred to by label.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chordal::ChordalVerdict;
use crate::cograph::{CographVerdict, Cotree};
use crate::format::{PosetDocument, SCHEMA_VERSION};
use crate::graph::Graph;
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pipeline {
    Chordal,
    Cograph,
    Oracle,
}

impl Pipeline {
    pub fn as_str(self) -> &'static str {
        match self {
            Pipeline::Chordal => "chordal",
            Pipeline::Cograph => "cograph",
            Pipeline::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ci,
    ChordalCi,
    CographCi,
    NotChordal,
    NotCograph,
    NotCi,
    Disconnected,
}

impl Status {
    pub fn is_ci(self) -> bool {
        matches!(self, Status::Ci | Status::ChordalCi | Status::CographCi)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ci => "ci",
            Status::ChordalCi => "chordal_ci",
            Status::CographCi => "cograph_ci",
            Status::NotChordal => "not_chordal",
            Status::NotCograph => "not_cograph",
            Status::NotCi => "not_ci",
            Status::Disconnected => "disconnected",
        }
    }
}

/// One summand `c1 < c2 < c3` of a cograph certificate, by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchDocument {
    pub c1: Vec<String>,
    pub c2: Vec<String>,
    pub c3: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub schema_version: u32,
    pub pipeline: Pipeline,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<PosetDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cotree: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<BranchDocument>>,
}

impl Verdict {
    fn bare(pipeline: Pipeline, status: Status) -> Self {
        Verdict {
            schema_version: SCHEMA_VERSION,
            pipeline,
            status,
            reason: None,
            witness: None,
            route: None,
            certificate: None,
            cotree: None,
            decomposition: None,
        }
    }

    pub fn disconnected(pipeline: Pipeline, components: usize) -> Self {
        Verdict { reason: Some(format!("{components} components")), ..Verdict::bare(pipeline, Status::Disconnected) }
    }

    pub fn from_chordal(g: &Graph, v: &ChordalVerdict) -> Self {
        let labels = |vs: &[usize]| Some(vs.iter().map(|&x| g.label(x)).collect());
        match v {
            ChordalVerdict::NotChordal { witness } => Verdict {
                reason: Some("chordless_cycle".into()),
                witness: witness.as_deref().and_then(labels),
                ..Verdict::bare(Pipeline::Chordal, Status::NotChordal)
            },
            ChordalVerdict::NotCi { reason, witness } => Verdict {
                reason: Some(reason.as_str().into()),
                witness: if witness.is_empty() { None } else { labels(witness) },
                ..Verdict::bare(Pipeline::Chordal, Status::NotCi)
            },
            ChordalVerdict::Ci { certificate, route } => Verdict {
                route: Some(route.as_str().into()),
                certificate: Some(PosetDocument::from_poset(certificate, |x| g.label(x))),
                ..Verdict::bare(Pipeline::Chordal, Status::ChordalCi)
            },
        }
    }

    pub fn from_cograph(g: &Graph, v: &CographVerdict) -> Self {
        let labels = |vs: &[usize]| vs.iter().map(|&x| g.label(x)).collect::<Vec<_>>();
        let text = |t: &Cotree| Some(t.to_text(|x| g.label(x)));
        match v {
            CographVerdict::NotCograph { p4 } => Verdict {
                reason: Some("induced_p4".into()),
                witness: Some(labels(p4)),
                ..Verdict::bare(Pipeline::Cograph, Status::NotCograph)
            },
            CographVerdict::NotCi { violation, cotree } => Verdict {
                reason: Some(violation.as_str().into()),
                witness: violation.node().map(|n| labels(&cotree.leaves_under(n))),
                cotree: text(cotree),
                ..Verdict::bare(Pipeline::Cograph, Status::NotCi)
            },
            CographVerdict::Ci { certificate, cotree, decomposition } => Verdict {
                certificate: Some(PosetDocument::from_poset(certificate, |x| g.label(x))),
                cotree: text(cotree),
                decomposition: Some(
                    decomposition
                        .branches
                        .iter()
                        .map(|b| BranchDocument { c1: labels(&b.c1), c2: labels(&b.c2), c3: labels(&b.c3) })
                        .collect(),
                ),
                ..Verdict::bare(Pipeline::Cograph, Status::CographCi)
            },
        }
    }

    /// Answer of the exhaustive search over labelled posets.
    pub fn from_oracle(g: &Graph, found: Option<&Poset>) -> Self {
        match found {
            Some(p) => Verdict {
                certificate: Some(PosetDocument::from_poset(p, |x| g.label(x))),
                ..Verdict::bare(Pipeline::Oracle, Status::Ci)
            },
            None => Verdict { reason: Some("no_poset".into()), ..Verdict::bare(Pipeline::Oracle, Status::NotCi) },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdicts serialize")
    }

    /// Human-readable `key: value` rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "pipeline: {}", self.pipeline.as_str());
        let _ = writeln!(out, "status: {}", self.status.as_str());
        if let Some(r) = &self.reason {
            let _ = writeln!(out, "reason: {r}");
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "witness: {}", w.join(" "));
        }
        if let Some(r) = &self.route {
            let _ = writeln!(out, "route: {r}");
        }
        if let Some(t) = &self.cotree {
            let _ = writeln!(out, "cotree: {t}");
        }
        if let Some(d) = &self.decomposition {
            for (i, b) in d.iter().enumerate() {
                let _ =
                    writeln!(out, "summand {}: {} < {} < {}", i + 1, b.c1.join(","), b.c2.join(","), b.c3.join(","));
            }
        }
        if let Some(c) = &self.certificate {
            out.push_str("certificate:\n");
            for line in c.to_text().lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        out
    }
}

/// Output of one recognition run: one verdict per pipeline that was run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub vertices: usize,
    pub edges: usize,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn new(g: &Graph, verdicts: Vec<Verdict>) -> Self {
        Report { schema_version: SCHEMA_VERSION, vertices: g.n(), edges: g.m(), verdicts }
    }

    /// Recognised when any pipeline accepted the graph.
    pub fn is_ci(&self) -> bool {
        self.verdicts.iter().any(|v| v.status.is_ci())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("vertices: {}\nedges: {}\n", self.vertices, self.edges);
        for v in &self.verdicts {
            out.push('\n');
            out.push_str(&v.to_text());
        }
        out
    }
}
