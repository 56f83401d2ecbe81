//! Cographs, their cotrees, and the cotree shape that characterises the
//! connected cographs that are cover-incomparability graphs.
//!
//! Internal cotree nodes are labelled 1 (join: children fully connected to
//! each other) or 0 (disjoint union). Two vertices are adjacent exactly when
//! their lowest common ancestor is a 1-node.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::poset::{CertificateMismatch, Poset, PosetError, RankedLayers};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CographError {
    #[error("input graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("malformed cotree: {0}")]
    Malformed(String),
    #[error("cotree syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("certificate construction failed: {0}")]
    Poset(#[from] PosetError),
    #[error("certificate does not reproduce the graph: {0}")]
    Mismatch(#[from] CertificateMismatch),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Leaf(usize),
    /// 0-node.
    Union,
    /// 1-node.
    Join,
}

impl NodeKind {
    fn digit(self) -> char {
        match self {
            NodeKind::Union => '0',
            NodeKind::Join => '1',
            NodeKind::Leaf(_) => unreachable!("leaves have no digit"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotreeNode {
    pub kind: NodeKind,
    pub children: Vec<usize>,
}

/// A rooted labelled tree that may violate the cotree shape rules: nodes
/// with one child, or a child with its parent's label, are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawCotree {
    pub nodes: Vec<CotreeNode>,
    pub root: usize,
}

impl RawCotree {
    pub fn leaf(v: usize) -> Self {
        RawCotree { nodes: vec![CotreeNode { kind: NodeKind::Leaf(v), children: vec![] }], root: 0 }
    }

    /// A new root of the given kind over the given subtrees.
    pub fn combine(kind: NodeKind, parts: Vec<RawCotree>) -> Self {
        let mut nodes = Vec::new();
        let mut roots = Vec::new();
        for part in parts {
            let off = nodes.len();
            roots.push(part.root + off);
            nodes.extend(part.nodes.into_iter().map(|mut nd| {
                nd.children.iter_mut().for_each(|c| *c += off);
                nd
            }));
        }
        let root = nodes.len();
        nodes.push(CotreeNode { kind, children: roots });
        RawCotree { nodes, root }
    }

    /// Parses the bracket notation `1( 0( a b ) c )`. A token directly
    /// followed by `(` is a node label and must be `0` or `1`; other tokens
    /// are leaves, resolved to vertex indices by `resolve`.
    pub fn parse(text: &str, resolve: impl Fn(&str) -> Option<usize>) -> Result<Self, CographError> {
        let bytes = text.as_bytes();
        let mut nodes: Vec<CotreeNode> = Vec::new();
        let mut open: Vec<usize> = Vec::new();
        let mut root = None;
        let mut i = 0;
        let err = |pos: usize, msg: &str| Err(CographError::Syntax { pos, msg: msg.to_string() });
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_ascii_whitespace() {
                i += 1;
                continue;
            }
            if c == b')' {
                if open.pop().is_none() {
                    return err(i, "unbalanced ')'");
                }
                i += 1;
                continue;
            }
            if c == b'(' {
                return err(i, "'(' without a node label");
            }
            let start = i;
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() && bytes[i] != b'(' && bytes[i] != b')' {
                i += 1;
            }
            let token = &text[start..i];
            let mut j = i;
            while j < bytes.len() && bytes[j].is_ascii_whitespace() {
                j += 1;
            }
            let id = nodes.len();
            if j < bytes.len() && bytes[j] == b'(' {
                let kind = match token {
                    "0" => NodeKind::Union,
                    "1" => NodeKind::Join,
                    _ => return err(start, "node label must be 0 or 1"),
                };
                nodes.push(CotreeNode { kind, children: vec![] });
                i = j + 1;
            } else {
                let Some(v) = resolve(token) else {
                    return err(start, &format!("unknown vertex {token:?}"));
                };
                nodes.push(CotreeNode { kind: NodeKind::Leaf(v), children: vec![] });
            }
            match open.last() {
                Some(&parent) => nodes[parent].children.push(id),
                None if root.is_none() => root = Some(id),
                None => return err(start, "more than one top-level tree"),
            }
            if matches!(nodes[id].kind, NodeKind::Union | NodeKind::Join) {
                open.push(id);
            }
        }
        if !open.is_empty() {
            return err(bytes.len(), "unclosed '('");
        }
        match root {
            Some(root) => Ok(RawCotree { nodes, root }),
            None => err(0, "empty input"),
        }
    }
}

/// A canonical cotree: labels alternate along every root-to-leaf path,
/// internal nodes have at least two children, children are ordered by
/// their smallest leaf, and nodes are numbered in preorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cotree {
    nodes: Vec<CotreeNode>,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    leaf_node: Vec<usize>,
}

impl Cotree {
    pub fn root(&self) -> usize {
        0
    }

    pub fn nodes(&self) -> &[CotreeNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &CotreeNode {
        &self.nodes[id]
    }

    pub fn parent(&self, id: usize) -> Option<usize> {
        self.parent[id]
    }

    pub fn vertex_count(&self) -> usize {
        self.leaf_node.len()
    }

    /// Vertices in the subtree of `id`, ascending.
    pub fn leaves_under(&self, id: usize) -> VertexSet {
        let mut out = Vec::new();
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            match self.nodes[x].kind {
                NodeKind::Leaf(v) => out.push(v),
                _ => stack.extend(&self.nodes[x].children),
            }
        }
        out.sort_unstable();
        out
    }

    /// Kind of the lowest common ancestor of two distinct vertices.
    pub fn lca_kind(&self, u: usize, v: usize) -> NodeKind {
        let (mut a, mut b) = (self.leaf_node[u], self.leaf_node[v]);
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].unwrap();
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].unwrap();
        }
        while a != b {
            a = self.parent[a].unwrap();
            b = self.parent[b].unwrap();
        }
        self.nodes[a].kind
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.lca_kind(u, v) == NodeKind::Join
    }

    /// The graph this cotree describes.
    pub fn to_graph(&self) -> Graph {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for nd in &self.nodes {
            if nd.kind != NodeKind::Join {
                continue;
            }
            let parts: Vec<VertexSet> = nd.children.iter().map(|&c| self.leaves_under(c)).collect();
            for (i, a) in parts.iter().enumerate() {
                for b in &parts[i + 1..] {
                    for &x in a {
                        for &y in b {
                            adj[x].push(y);
                            adj[y].push(x);
                        }
                    }
                }
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Bracket notation, e.g. `1(0(1(a b) 1(d e)) c)`.
    pub fn to_text(&self, label: impl Fn(usize) -> String) -> String {
        let mut out = String::new();
        self.write_text(0, &label, &mut out);
        out
    }

    fn write_text(&self, id: usize, label: &impl Fn(usize) -> String, out: &mut String) {
        match self.nodes[id].kind {
            NodeKind::Leaf(v) => out.push_str(&label(v)),
            k => {
                out.push(k.digit());
                out.push('(');
                for (i, &c) in self.nodes[id].children.iter().enumerate() {
                    if i > 0 {
                        out.push(' ');
                    }
                    self.write_text(c, label, out);
                }
                out.push(')');
            }
        }
    }

    /// Graphviz rendering of the tree.
    pub fn to_dot(&self, label: impl Fn(usize) -> String) -> String {
        let mut out = String::from("digraph cotree {\n");
        for (id, nd) in self.nodes.iter().enumerate() {
            let text = match nd.kind {
                NodeKind::Leaf(v) => label(v),
                k => k.digit().to_string(),
            };
            let shape = if matches!(nd.kind, NodeKind::Leaf(_)) { "box" } else { "circle" };
            let _ = writeln!(out, "  n{id} [label={text:?}, shape={shape}];");
            for &c in &nd.children {
                let _ = writeln!(out, "  n{id} -> n{c};");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Coalesces same-label parent/child pairs, removes single-child internal
/// nodes, and orders the result canonically. Leaves must carry each of
/// `0..k` exactly once, where `k` is the number of leaves.
pub fn normalize_cotree(raw: &RawCotree) -> Result<Cotree, CographError> {
    let bad = |m: String| Err(CographError::Malformed(m));
    let m = raw.nodes.len();
    if raw.root >= m {
        return bad("root out of range".into());
    }
    // Reachability and single-parent check, also yielding a postorder.
    let mut seen = vec![false; m];
    let mut pre = Vec::with_capacity(m);
    let mut stack = vec![raw.root];
    seen[raw.root] = true;
    while let Some(x) = stack.pop() {
        pre.push(x);
        let nd = &raw.nodes[x];
        match nd.kind {
            NodeKind::Leaf(_) if !nd.children.is_empty() => return bad(format!("leaf node {x} has children")),
            NodeKind::Union | NodeKind::Join if nd.children.is_empty() => {
                return bad(format!("internal node {x} has no children"))
            }
            _ => {}
        }
        for &c in &nd.children {
            if c >= m {
                return bad(format!("child {c} out of range"));
            }
            if std::mem::replace(&mut seen[c], true) {
                return bad(format!("node {c} reached twice"));
            }
            stack.push(c);
        }
    }
    let leaves: Vec<usize> = pre
        .iter()
        .filter_map(|&x| match raw.nodes[x].kind {
            NodeKind::Leaf(v) => Some(v),
            _ => None,
        })
        .collect();
    let k = leaves.len();
    let mut hit = vec![false; k];
    for &v in &leaves {
        if v >= k || std::mem::replace(&mut hit[v], true) {
            return bad(format!("leaf labels must be 0..{k} without repeats (saw {v})"));
        }
    }

    // Bottom-up: each raw node becomes either a leaf vertex or a flattened
    // (kind, children) pair in a scratch arena.
    let mut scratch: Vec<CotreeNode> = Vec::new();
    let mut image = vec![usize::MAX; m];
    for &x in pre.iter().rev() {
        let nd = &raw.nodes[x];
        if let NodeKind::Leaf(_) = nd.kind {
            image[x] = scratch.len();
            scratch.push(nd.clone());
            continue;
        }
        let mut kids = Vec::new();
        for &c in &nd.children {
            let ci = image[c];
            if scratch[ci].kind == nd.kind {
                kids.extend(scratch[ci].children.clone());
            } else {
                kids.push(ci);
            }
        }
        if kids.len() == 1 {
            image[x] = kids[0];
        } else {
            image[x] = scratch.len();
            scratch.push(CotreeNode { kind: nd.kind, children: kids });
        }
    }
    Ok(canonical_order(&scratch, image[raw.root], k))
}

/// Renumbers the subtree at `root` in preorder with children sorted by
/// smallest leaf, filling in the navigation tables.
fn canonical_order(arena: &[CotreeNode], root: usize, n: usize) -> Cotree {
    let mut min_leaf_of = vec![usize::MAX; arena.len()];
    let mut post = Vec::new();
    let mut stack = vec![(root, false)];
    while let Some((x, done)) = stack.pop() {
        if done {
            post.push(x);
            continue;
        }
        stack.push((x, true));
        stack.extend(arena[x].children.iter().map(|&c| (c, false)));
    }
    for &x in &post {
        min_leaf_of[x] = match arena[x].kind {
            NodeKind::Leaf(v) => v,
            _ => arena[x].children.iter().map(|&c| min_leaf_of[c]).min().unwrap(),
        };
    }
    let mut nodes: Vec<CotreeNode> = Vec::with_capacity(post.len());
    let mut parent = Vec::with_capacity(post.len());
    let mut depth = Vec::with_capacity(post.len());
    let mut leaf_node = vec![usize::MAX; n];
    let mut stack = vec![(root, None::<usize>, 0usize)];
    while let Some((x, par, d)) = stack.pop() {
        let id = nodes.len();
        if let Some(p) = par {
            nodes[p].children.push(id);
        }
        if let NodeKind::Leaf(v) = arena[x].kind {
            leaf_node[v] = id;
        }
        nodes.push(CotreeNode { kind: arena[x].kind, children: Vec::new() });
        parent.push(par);
        depth.push(d);
        let mut kids = arena[x].children.clone();
        kids.sort_unstable_by_key(|&c| std::cmp::Reverse(min_leaf_of[c]));
        stack.extend(kids.into_iter().map(|c| (c, Some(id), d + 1)));
    }
    Cotree { nodes, parent, depth, leaf_node }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CographRecognition {
    Cograph(Cotree),
    /// An induced path `a - b - c - d`.
    NotCograph {
        p4: [usize; 4],
    },
}

/// Builds the cotree of `g` by splitting vertex sets into components or
/// co-components; a set that is connected and co-connected yields an
/// induced P4 instead.
pub fn recognize_cograph(g: &Graph) -> CographRecognition {
    let n = g.n();
    let mut raw: Vec<CotreeNode> = Vec::new();
    let mut member = vec![usize::MAX; n];
    let mut mark = vec![usize::MAX; n];
    let mut round = 0usize;
    let mut work: Vec<(usize, VertexSet)> = vec![(0, (0..n).collect())];
    raw.push(CotreeNode { kind: NodeKind::Union, children: vec![] });
    while let Some((id, set)) = work.pop() {
        if set.len() == 1 {
            raw[id].kind = NodeKind::Leaf(set[0]);
            continue;
        }
        round += 1;
        for &v in &set {
            member[v] = round;
        }
        let comps = components_within(g, &set, &member, round);
        let (kind, parts) = if comps.len() > 1 {
            (NodeKind::Union, comps)
        } else {
            let cocomps = co_components_within(g, &set, &member, round, &mut mark);
            if cocomps.len() > 1 {
                (NodeKind::Join, cocomps)
            } else {
                let p4 = find_p4_within(g, &set, &member, round, &mut mark)
                    .expect("a connected, co-connected graph on two or more vertices has an induced P4");
                return CographRecognition::NotCograph { p4 };
            }
        };
        raw[id].kind = kind;
        for part in parts {
            let child = raw.len();
            raw.push(CotreeNode { kind: NodeKind::Union, children: vec![] });
            raw[id].children.push(child);
            work.push((child, part));
        }
    }
    let tree = normalize_cotree(&RawCotree { nodes: raw, root: 0 }).expect("splitting yields a well-formed tree");
    CographRecognition::Cograph(tree)
}

fn components_within(g: &Graph, set: &[usize], member: &[usize], round: usize) -> Vec<VertexSet> {
    let mut seen = std::collections::HashSet::with_capacity(set.len());
    let mut out = Vec::new();
    for &s in set {
        if !seen.insert(s) {
            continue;
        }
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbors(u) {
                if member[w] == round && seen.insert(w) {
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Components of the complement of `g[set]`, in time linear in the size of
/// `g[set]`.
fn co_components_within(
    g: &Graph,
    set: &[usize],
    member: &[usize],
    round: usize,
    mark: &mut [usize],
) -> Vec<VertexSet> {
    let mut unvisited: Vec<usize> = set.to_vec();
    let mut out = Vec::new();
    let mut stamp = round * 2 * g.n().max(1);
    while let Some(s) = unvisited.pop() {
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            stamp += 1;
            for &w in g.neighbors(u) {
                if member[w] == round {
                    mark[w] = stamp;
                }
            }
            let mut keep = Vec::with_capacity(unvisited.len());
            for &w in &unvisited {
                if mark[w] == stamp {
                    keep.push(w);
                } else {
                    comp.push(w);
                }
            }
            unvisited = keep;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort();
    out
}

/// Searches every edge `b - c` of `g[set]` for `a` adjacent to `b` only and
/// `d` adjacent to `c` only with `a`, `d` non-adjacent.
fn find_p4_within(g: &Graph, set: &[usize], member: &[usize], round: usize, mark: &mut [usize]) -> Option<[usize; 4]> {
    let inside = |x: usize| member[x] == round;
    let mut stamp = usize::MAX / 2;
    for &b in set {
        for &c in g.neighbors(b).iter().filter(|&&c| inside(c)) {
            let a_side: Vec<usize> =
                g.neighbors(b).iter().copied().filter(|&a| inside(a) && a != c && !g.has_edge(a, c)).collect();
            let d_side: Vec<usize> =
                g.neighbors(c).iter().copied().filter(|&d| inside(d) && d != b && !g.has_edge(d, b)).collect();
            if a_side.is_empty() || d_side.is_empty() {
                continue;
            }
            stamp += 1;
            for &d in &d_side {
                mark[d] = stamp;
            }
            for &a in &a_side {
                let hits = g.neighbors(a).iter().filter(|&&x| mark[x] == stamp).count();
                if hits < d_side.len() {
                    let d = *d_side.iter().find(|&&d| !g.has_edge(a, d)).unwrap();
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Why a connected cograph is not a cover-incomparability graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TcViolation {
    /// The root is a 0-node, so the graph is disconnected.
    RootIsUnion,
    /// The root has no leaf child.
    OnlyZeroChildren,
    /// The root has more 0-node children than leaf children.
    TooFewUniversal,
    /// A 0-node below the root does not have exactly two children.
    ZeroNodeArity { node: usize },
    /// A 1-node below a 0-node has a child that is not a leaf.
    DeepOneNode { node: usize },
}

impl TcViolation {
    pub fn as_str(self) -> &'static str {
        match self {
            TcViolation::RootIsUnion => "root_is_union",
            TcViolation::OnlyZeroChildren => "only_zero_children",
            TcViolation::TooFewUniversal => "too_few_universal",
            TcViolation::ZeroNodeArity { .. } => "zero_node_arity",
            TcViolation::DeepOneNode { .. } => "deep_one_node",
        }
    }

    pub fn node(self) -> Option<usize> {
        match self {
            TcViolation::ZeroNodeArity { node } | TcViolation::DeepOneNode { node } => Some(node),
            _ => None,
        }
    }
}

/// Checks the cotree shape of a connected cograph that is a
/// cover-incomparability graph: the root's leaf children (universal
/// vertices) are at least as many as its 0-node children, and each of
/// those 0-nodes has two children, each a leaf or a 1-node over leaves.
/// A single leaf or a root whose children are all leaves is a complete
/// graph and passes.
pub fn check_tc_family(t: &Cotree) -> Result<(), TcViolation> {
    let root = t.node(t.root());
    match root.kind {
        NodeKind::Leaf(_) => return Ok(()),
        NodeKind::Union => return Err(TcViolation::RootIsUnion),
        NodeKind::Join => {}
    }
    let leaf_count = root.children.iter().filter(|&&c| matches!(t.node(c).kind, NodeKind::Leaf(_))).count();
    let zeros: Vec<usize> = root.children.iter().copied().filter(|&c| t.node(c).kind == NodeKind::Union).collect();
    if zeros.is_empty() {
        return Ok(());
    }
    if leaf_count == 0 {
        return Err(TcViolation::OnlyZeroChildren);
    }
    if zeros.len() > leaf_count {
        return Err(TcViolation::TooFewUniversal);
    }
    for &z in &zeros {
        let kids = &t.node(z).children;
        if kids.len() != 2 {
            return Err(TcViolation::ZeroNodeArity { node: z });
        }
        for &k in kids {
            if t.node(k).kind == NodeKind::Join
                && t.node(k).children.iter().any(|&x| !matches!(t.node(x).kind, NodeKind::Leaf(_)))
            {
                return Err(TcViolation::DeepOneNode { node: k });
            }
        }
    }
    Ok(())
}

/// One summand of the certificate: `c1 < c2 < c3`, completely ranked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub c1: VertexSet,
    pub c2: VertexSet,
    pub c3: VertexSet,
}

/// Split of the vertices into summands. An empty `branches` list means the
/// graph is complete and every vertex is in `universal`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CographDecomposition {
    pub n: usize,
    pub universal: VertexSet,
    pub branches: Vec<Branch>,
}

/// Reads the summands off a cotree that passes [`check_tc_family`].
///
/// 0-nodes are taken in order of their smallest vertex; within one, the
/// child holding the smaller vertex gives `c1`. The `i`-th smallest
/// universal vertex goes to the `i`-th summand and leftover universal
/// vertices join the first summand.
pub fn decompose(t: &Cotree) -> Result<CographDecomposition, TcViolation> {
    check_tc_family(t)?;
    let n = t.vertex_count();
    let root = t.node(t.root());
    let mut universal: VertexSet = root
        .children
        .iter()
        .filter_map(|&c| match t.node(c).kind {
            NodeKind::Leaf(v) => Some(v),
            _ => None,
        })
        .collect();
    if matches!(root.kind, NodeKind::Leaf(_)) {
        universal = vec![0];
    }
    universal.sort_unstable();
    // children are already ordered by smallest leaf
    let zeros: Vec<usize> = root.children.iter().copied().filter(|&c| t.node(c).kind == NodeKind::Union).collect();
    let mut branches: Vec<Branch> = zeros
        .iter()
        .enumerate()
        .map(|(i, &z)| {
            let kids = &t.node(z).children;
            Branch { c1: t.leaves_under(kids[0]), c2: vec![universal[i]], c3: t.leaves_under(kids[1]) }
        })
        .collect();
    if let Some(first) = branches.first_mut() {
        first.c2.extend_from_slice(&universal[zeros.len()..]);
    }
    Ok(CographDecomposition { n, universal, branches })
}

/// Sum over the summands of the completely ranked posets `c1 < c2 < c3`,
/// or an antichain for a complete graph. Checked against `g`.
pub fn certify_ci_cograph(g: &Graph, d: &CographDecomposition) -> Result<Poset, CographError> {
    let p = if d.branches.is_empty() {
        Poset::antichain(d.n)?
    } else {
        let mut parts = Vec::new();
        let mut names = Vec::with_capacity(d.n);
        for b in &d.branches {
            parts.push(Poset::completely_ranked(&RankedLayers::from_sizes(&[b.c1.len(), b.c2.len(), b.c3.len()])?)?);
            names.extend(b.c1.iter().chain(&b.c2).chain(&b.c3));
        }
        Poset::sum(&parts)?.relabel(&names)
    };
    p.check_ci_graph(g)?;
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CographVerdict {
    NotCograph { p4: [usize; 4] },
    NotCi { violation: TcViolation, cotree: Cotree },
    Ci { certificate: Poset, cotree: Cotree, decomposition: CographDecomposition },
}

impl CographVerdict {
    pub fn is_ci(&self) -> bool {
        matches!(self, CographVerdict::Ci { .. })
    }
}

/// Full decision for a connected graph, with a checked certificate on
/// success.
pub fn recognize_ci_cograph(g: &Graph) -> Result<CographVerdict, CographError> {
    if !g.is_connected() {
        return Err(CographError::Disconnected { components: g.components().len() });
    }
    let cotree = match recognize_cograph(g) {
        CographRecognition::NotCograph { p4 } => return Ok(CographVerdict::NotCograph { p4 }),
        CographRecognition::Cograph(t) => t,
    };
    match decompose(&cotree) {
        Err(violation) => Ok(CographVerdict::NotCi { violation, cotree }),
        Ok(decomposition) => {
            let certificate = certify_ci_cograph(g, &decomposition)?;
            Ok(CographVerdict::Ci { certificate, cotree, decomposition })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e).unwrap()
    }

    fn cotree_of(g: &Graph) -> Cotree {
        match recognize_cograph(g) {
            CographRecognition::Cograph(t) => t,
            other => panic!("{other:?}"),
        }
    }

    /// K2 joined with two disjoint K2s: vertices 0,1 universal.
    fn k2_join_2k2() -> Graph {
        graph(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (4, 5)])
    }

    #[test]
    fn p4_is_found() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        match recognize_cograph(&p4) {
            CographRecognition::NotCograph { p4: w } => {
                assert!(g_has_induced_p4(&p4, w));
            }
            other => panic!("{other:?}"),
        }
    }

    fn g_has_induced_p4(g: &Graph, [a, b, c, d]: [usize; 4]) -> bool {
        g.has_edge(a, b)
            && g.has_edge(b, c)
            && g.has_edge(c, d)
            && !g.has_edge(a, c)
            && !g.has_edge(b, d)
            && !g.has_edge(a, d)
    }

    #[test]
    fn cotree_text_round_trip() {
        let g = k2_join_2k2();
        let t = cotree_of(&g);
        let text = t.to_text(|v| v.to_string());
        assert_eq!(text, "1(0 1 0(1(2 3) 1(4 5)))");
        let raw = RawCotree::parse(&text, |s| s.parse().ok()).unwrap();
        assert_eq!(normalize_cotree(&raw).unwrap(), t);
        assert!(t.to_graph().same_edges(&g));
    }

    #[test]
    fn normalize_coalesces_and_drops_unary_nodes() {
        let raw = RawCotree::parse("1( 1( 0 1 ) 0( 2 ) )", |s| s.parse().ok()).unwrap();
        let t = normalize_cotree(&raw).unwrap();
        assert_eq!(t.to_text(|v| v.to_string()), "1(0 1 2)");
        assert!(normalize_cotree(&RawCotree::parse("1(0 0)", |s| s.parse().ok()).unwrap()).is_err());
        assert!(RawCotree::parse("2(0 1)", |s| s.parse().ok()).is_err());
        assert!(RawCotree::parse("1(0 1", |s| s.parse().ok()).is_err());
    }

    #[test]
    fn k2_join_2k2_decomposes_into_one_summand() {
        let g = k2_join_2k2();
        match recognize_ci_cograph(&g).unwrap() {
            CographVerdict::Ci { decomposition, certificate, .. } => {
                assert_eq!(decomposition.branches, vec![Branch { c1: vec![2, 3], c2: vec![0, 1], c3: vec![4, 5] }]);
                assert_eq!(certificate.height(), 3);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn join_of_two_p3_gives_two_summands() {
        // two copies of P3 joined: 0-1-2 and 3-4-5
        let mut e = vec![(0, 1), (1, 2), (3, 4), (4, 5)];
        for x in 0..3 {
            for y in 3..6 {
                e.push((x, y));
            }
        }
        let g = graph(6, &e);
        match recognize_ci_cograph(&g).unwrap() {
            CographVerdict::Ci { decomposition, .. } => {
                assert_eq!(decomposition.universal, vec![1, 4]);
                assert_eq!(
                    decomposition.branches,
                    vec![
                        Branch { c1: vec![0], c2: vec![1], c3: vec![2] },
                        Branch { c1: vec![3], c2: vec![4], c3: vec![5] },
                    ]
                );
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn claw_fails_tc_family() {
        let claw = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        match recognize_ci_cograph(&claw).unwrap() {
            CographVerdict::NotCi { violation, .. } => {
                assert!(matches!(violation, TcViolation::ZeroNodeArity { .. }));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn c4_has_only_zero_children() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        match recognize_ci_cograph(&c4).unwrap() {
            CographVerdict::NotCi { violation, .. } => assert_eq!(violation, TcViolation::OnlyZeroChildren),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn too_few_universal_vertices() {
        // hub joined to C4: the root has one leaf child and two 0-nodes
        let c4_hub = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)]);
        match recognize_ci_cograph(&c4_hub).unwrap() {
            CographVerdict::NotCi { violation, .. } => assert_eq!(violation, TcViolation::TooFewUniversal),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn deep_one_node_is_rejected() {
        // hub 0 over (1 ∪ X) where X = 2 ∨ (3 ∪ 4)
        let g = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (2, 3), (2, 4)]);
        match recognize_ci_cograph(&g).unwrap() {
            CographVerdict::NotCi { violation, .. } => assert!(matches!(violation, TcViolation::DeepOneNode { .. })),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn complete_graph_certified_by_antichain() {
        let k3 = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        match recognize_ci_cograph(&k3).unwrap() {
            CographVerdict::Ci { certificate, decomposition, .. } => {
                assert!(decomposition.branches.is_empty());
                assert_eq!(certificate.cover_count(), 0);
            }
            other => panic!("{other:?}"),
        }
        assert!(recognize_ci_cograph(&graph(1, &[])).unwrap().is_ci());
    }

    #[test]
    fn disconnected_is_an_error() {
        assert!(matches!(recognize_ci_cograph(&graph(3, &[(0, 1)])), Err(CographError::Disconnected { .. })));
    }
}
