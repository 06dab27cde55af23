//! Cotree data model: arena-backed rooted trees with union/join interior
//! nodes and labeled leaves, kept in minimal form (alternating kinds, every
//! interior node with at least two children).

mod balanced;
mod parse;
mod random;
mod recognize;

pub use balanced::{build_balanced, build_family_kab, build_family_pk2, BalancedSpec};
pub use parse::parse_expression;
pub use random::{random_cotree, RandomShape};
pub use recognize::{from_graph, is_valid_p4_witness, NotACograph};

use std::collections::BTreeSet;
use thiserror::Error;

pub type NodeId = usize;

/// Kind of an arena node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Union,
    Join,
    Leaf,
}

/// Kind of an interior node (a cotree operation).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InteriorKind {
    Union,
    Join,
}

impl InteriorKind {
    pub fn flip(self) -> InteriorKind {
        match self {
            InteriorKind::Union => InteriorKind::Join,
            InteriorKind::Join => InteriorKind::Union,
        }
    }

    pub fn node_kind(self) -> NodeKind {
        match self {
            InteriorKind::Union => NodeKind::Union,
            InteriorKind::Join => NodeKind::Join,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Node {
    pub kind: NodeKind,
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
    /// Vertex id of the represented graph; `Some` exactly on leaves.
    pub label: Option<usize>,
}

#[derive(Debug, Error)]
pub enum CotreeError {
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("empty expression")]
    EmptyExpression,
    #[error("copy count must be at least 1 (position {pos})")]
    ZeroCopyCount { pos: usize },
    #[error("invalid balanced spec: {0}")]
    InvalidSpec(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("malformed tree: {0}")]
    MalformedTree(String),
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
}

/// Intermediate recursive tree used by parsers and generators before
/// flattening into the arena. May be non-minimal.
#[derive(Debug, Clone)]
pub(crate) enum RawTree {
    Leaf(Option<usize>),
    Interior(InteriorKind, Vec<RawTree>),
}

impl RawTree {
    /// Minimal form: merge same-kind children, splice single-child interiors.
    fn normalize(self) -> RawTree {
        match self {
            RawTree::Leaf(l) => RawTree::Leaf(l),
            RawTree::Interior(kind, children) => {
                let mut flat = Vec::with_capacity(children.len());
                for child in children {
                    match child.normalize() {
                        RawTree::Interior(k, grandchildren) if k == kind => {
                            flat.extend(grandchildren)
                        }
                        other => flat.push(other),
                    }
                }
                if flat.len() == 1 {
                    flat.pop().unwrap()
                } else {
                    RawTree::Interior(kind, flat)
                }
            }
        }
    }
}

/// A cograph's minimal cotree.
#[derive(Debug, Clone)]
pub struct Cotree {
    nodes: Vec<Node>,
    root: NodeId,
    n_leaves: usize,
}

impl Cotree {
    pub fn leaf() -> Cotree {
        Cotree {
            nodes: vec![Node {
                kind: NodeKind::Leaf,
                parent: None,
                children: Vec::new(),
                label: Some(0),
            }],
            root: 0,
            n_leaves: 1,
        }
    }

    /// Disjoint union of the given cotrees; normalizes.
    pub fn union(children: Vec<Cotree>) -> Cotree {
        Self::interior(InteriorKind::Union, children)
    }

    /// Join of the given cotrees; normalizes.
    pub fn join(children: Vec<Cotree>) -> Cotree {
        Self::interior(InteriorKind::Join, children)
    }

    pub fn interior(kind: InteriorKind, children: Vec<Cotree>) -> Cotree {
        assert!(!children.is_empty(), "interior node needs children");
        let raw = RawTree::Interior(
            kind,
            children.into_iter().map(|c| c.into_raw()).collect(),
        );
        Cotree::from_raw(raw)
    }

    pub(crate) fn from_raw(raw: RawTree) -> Cotree {
        let raw = raw.normalize();
        let mut nodes = Vec::new();
        let mut n_leaves = 0usize;
        let root = flatten(&raw, None, &mut nodes, &mut n_leaves);
        let mut tree = Cotree {
            nodes,
            root,
            n_leaves,
        };
        tree.fix_labels();
        tree
    }

    fn into_raw(self) -> RawTree {
        fn build(tree: &Cotree, id: NodeId) -> RawTree {
            let node = &tree.nodes[id];
            match node.kind {
                NodeKind::Leaf => RawTree::Leaf(node.label),
                NodeKind::Union => RawTree::Interior(
                    InteriorKind::Union,
                    node.children.iter().map(|&c| build(tree, c)).collect(),
                ),
                NodeKind::Join => RawTree::Interior(
                    InteriorKind::Join,
                    node.children.iter().map(|&c| build(tree, c)).collect(),
                ),
            }
        }
        build(&self, self.root)
    }

    /// Builds a cotree from a hand-assembled arena, validating shape
    /// (acyclic, interior nodes non-empty) and normalizing the result.
    /// Parent links in the input are ignored and recomputed.
    pub fn from_parts(nodes: Vec<Node>, root: NodeId) -> Result<Cotree, CotreeError> {
        if root >= nodes.len() {
            return Err(CotreeError::MalformedTree(format!(
                "root id {root} out of range"
            )));
        }
        let mut visited = vec![false; nodes.len()];
        fn check(
            nodes: &[Node],
            visited: &mut [bool],
            id: NodeId,
        ) -> Result<RawTree, CotreeError> {
            if id >= nodes.len() {
                return Err(CotreeError::MalformedTree(format!(
                    "child id {id} out of range"
                )));
            }
            if visited[id] {
                return Err(CotreeError::MalformedTree(format!(
                    "node {id} reachable twice (cycle or shared child)"
                )));
            }
            visited[id] = true;
            let node = &nodes[id];
            match node.kind {
                NodeKind::Leaf => {
                    if !node.children.is_empty() {
                        return Err(CotreeError::MalformedTree(format!(
                            "leaf {id} has children"
                        )));
                    }
                    Ok(RawTree::Leaf(node.label))
                }
                NodeKind::Union | NodeKind::Join => {
                    if node.children.is_empty() {
                        return Err(CotreeError::MalformedTree(format!(
                            "interior node {id} has no children"
                        )));
                    }
                    let kind = if node.kind == NodeKind::Union {
                        InteriorKind::Union
                    } else {
                        InteriorKind::Join
                    };
                    let children = node
                        .children
                        .iter()
                        .map(|&c| check(nodes, visited, c))
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(RawTree::Interior(kind, children))
                }
            }
        }
        let raw = check(&nodes, &mut visited, root)?;
        Ok(Cotree::from_raw(raw))
    }

    /// Returns the normalized (minimal) form. Idempotent: cotrees built
    /// through the public constructors are already minimal.
    pub fn normalize(&self) -> Cotree {
        Cotree::from_raw(self.clone().into_raw())
    }

    /// Leaves must carry a permutation of `0..n` as labels; if they do not,
    /// relabel in depth-first order.
    fn fix_labels(&mut self) {
        let leaf_ids = self.leaf_ids();
        let labels: Vec<Option<usize>> = leaf_ids.iter().map(|&id| self.nodes[id].label).collect();
        let mut seen = vec![false; leaf_ids.len()];
        let mut ok = true;
        for l in &labels {
            match l {
                Some(v) if *v < leaf_ids.len() && !seen[*v] => seen[*v] = true,
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            for (i, &id) in leaf_ids.iter().enumerate() {
                self.nodes[id].label = Some(i);
            }
        }
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn n_leaves(&self) -> usize {
        self.n_leaves
    }

    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn kind(&self, id: NodeId) -> NodeKind {
        self.nodes[id].kind
    }

    pub fn children(&self, id: NodeId) -> &[NodeId] {
        &self.nodes[id].children
    }

    pub fn is_leaf(&self, id: NodeId) -> bool {
        self.nodes[id].kind == NodeKind::Leaf
    }

    pub fn interior_kind(&self, id: NodeId) -> Option<InteriorKind> {
        match self.nodes[id].kind {
            NodeKind::Union => Some(InteriorKind::Union),
            NodeKind::Join => Some(InteriorKind::Join),
            NodeKind::Leaf => None,
        }
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> {
        0..self.nodes.len()
    }

    /// Leaf node ids in depth-first order.
    pub fn leaf_ids(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.n_leaves);
        let mut stack = vec![self.root];
        while let Some(id) = stack.pop() {
            if self.is_leaf(id) {
                out.push(id);
            } else {
                for &c in self.nodes[id].children.iter().rev() {
                    stack.push(c);
                }
            }
        }
        out
    }

    /// Depth of every node (root depth 0).
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0usize; self.nodes.len()];
        let mut stack = vec![self.root];
        while let Some(id) = stack.pop() {
            for &c in &self.nodes[id].children {
                depth[c] = depth[id] + 1;
                stack.push(c);
            }
        }
        depth
    }

    /// Checks every structural invariant; used by tests and generators.
    pub fn check_invariants(&self) -> Result<(), String> {
        let mut leaf_count = 0usize;
        let mut visited = vec![false; self.nodes.len()];
        let mut stack = vec![self.root];
        if self.nodes[self.root].parent.is_some() {
            return Err("root has a parent".into());
        }
        while let Some(id) = stack.pop() {
            if visited[id] {
                return Err(format!("node {id} visited twice"));
            }
            visited[id] = true;
            let node = &self.nodes[id];
            match node.kind {
                NodeKind::Leaf => {
                    if !node.children.is_empty() {
                        return Err(format!("leaf {id} has children"));
                    }
                    if node.label.is_none() {
                        return Err(format!("leaf {id} has no label"));
                    }
                    leaf_count += 1;
                }
                NodeKind::Union | NodeKind::Join => {
                    if node.children.len() < 2 {
                        return Err(format!("interior node {id} has < 2 children"));
                    }
                    if node.label.is_some() {
                        return Err(format!("interior node {id} has a label"));
                    }
                    for &c in &node.children {
                        if self.nodes[c].kind == node.kind {
                            return Err(format!("node {id} has same-kind child {c}"));
                        }
                        if self.nodes[c].parent != Some(id) {
                            return Err(format!("child {c} has wrong parent link"));
                        }
                        stack.push(c);
                    }
                }
            }
        }
        if !visited.iter().all(|&v| v) {
            return Err("unreachable nodes in arena".into());
        }
        if leaf_count != self.n_leaves {
            return Err(format!(
                "n_leaves {} but counted {leaf_count}",
                self.n_leaves
            ));
        }
        Ok(())
    }

    /// Deterministic encoding, invariant under child reordering: equal
    /// strings iff the represented cographs are isomorphic.
    pub fn canonical_form(&self) -> String {
        fn encode(tree: &Cotree, id: NodeId) -> String {
            let node = tree.node(id);
            match node.kind {
                NodeKind::Leaf => "L".to_string(),
                NodeKind::Union | NodeKind::Join => {
                    let tag = if node.kind == NodeKind::Union { "U" } else { "J" };
                    let mut parts: Vec<String> =
                        node.children.iter().map(|&c| encode(tree, c)).collect();
                    parts.sort();
                    format!("({tag} {})", parts.join(" "))
                }
            }
        }
        encode(self, self.root)
    }

    /// Expands the cotree into the explicit graph: leaves become vertices
    /// (using the leaf labels) and two vertices are adjacent iff their
    /// lowest common ancestor is a join node.
    pub fn to_graph(&self) -> Graph {
        let mut edges = BTreeSet::new();
        // Returns the leaf labels below `id`; at join nodes every pair of
        // distinct child groups becomes fully connected.
        fn collect(tree: &Cotree, id: NodeId, edges: &mut BTreeSet<(usize, usize)>) -> Vec<usize> {
            let node = tree.node(id);
            match node.kind {
                NodeKind::Leaf => vec![node.label.unwrap()],
                NodeKind::Union | NodeKind::Join => {
                    let groups: Vec<Vec<usize>> = node
                        .children
                        .iter()
                        .map(|&c| collect(tree, c, edges))
                        .collect();
                    if node.kind == NodeKind::Join {
                        for i in 0..groups.len() {
                            for j in i + 1..groups.len() {
                                for &u in &groups[i] {
                                    for &v in &groups[j] {
                                        edges.insert((u.min(v), u.max(v)));
                                    }
                                }
                            }
                        }
                    }
                    groups.into_iter().flatten().collect()
                }
            }
        }
        collect(self, self.root, &mut edges);
        Graph {
            n: self.n_leaves,
            edges,
        }
    }

    /// Expression-grammar rendering; `parse_expression` accepts the output.
    pub fn to_expression(&self) -> String {
        fn union_str(tree: &Cotree, id: NodeId) -> String {
            // terms joined by '+'; leaf children collapse into one count
            let node = tree.node(id);
            let mut terms = Vec::new();
            let leaves = node
                .children
                .iter()
                .filter(|&&c| tree.is_leaf(c))
                .count();
            if leaves > 0 {
                terms.push(leaves.to_string());
            }
            for &c in &node.children {
                if !tree.is_leaf(c) {
                    terms.push(join_str(tree, c));
                }
            }
            terms.join("+")
        }
        fn join_str(tree: &Cotree, id: NodeId) -> String {
            let node = tree.node(id);
            let factors: Vec<String> = node
                .children
                .iter()
                .map(|&c| {
                    if tree.is_leaf(c) {
                        "1".to_string()
                    } else {
                        format!("({})", union_str(tree, c))
                    }
                })
                .collect();
            factors.join("*")
        }
        match self.kind(self.root) {
            NodeKind::Leaf => "1".to_string(),
            NodeKind::Union => union_str(self, self.root),
            NodeKind::Join => join_str(self, self.root),
        }
    }
}

fn flatten(
    raw: &RawTree,
    parent: Option<NodeId>,
    nodes: &mut Vec<Node>,
    n_leaves: &mut usize,
) -> NodeId {
    let id = nodes.len();
    match raw {
        RawTree::Leaf(label) => {
            *n_leaves += 1;
            nodes.push(Node {
                kind: NodeKind::Leaf,
                parent,
                children: Vec::new(),
                label: *label,
            });
        }
        RawTree::Interior(kind, children) => {
            nodes.push(Node {
                kind: kind.node_kind(),
                parent,
                children: Vec::new(),
                label: None,
            });
            let child_ids: Vec<NodeId> = children
                .iter()
                .map(|c| flatten(c, Some(id), nodes, n_leaves))
                .collect();
            nodes[id].children = child_ids;
        }
    }
    id
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, CotreeError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(CotreeError::MalformedGraph(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(CotreeError::MalformedGraph(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Adjacency lists, sorted.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Parses the `n m` / `u v` edge-list format; `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Graph, CotreeError> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| CotreeError::MalformedGraph("missing 'n m' header".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| CotreeError::MalformedGraph(format!("bad header `{header}`")))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| CotreeError::MalformedGraph(format!("bad header `{header}`")))?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| CotreeError::MalformedGraph(format!("bad edge line `{line}`")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| CotreeError::MalformedGraph(format!("bad edge line `{line}`")))?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(CotreeError::MalformedGraph(format!(
                "header promises {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// DOT rendering of a cotree; interior nodes labeled U/J, leaves by label.
pub fn to_dot(tree: &Cotree) -> String {
    let mut out = String::from("graph cotree {\n");
    for id in tree.node_ids() {
        let node = tree.node(id);
        match node.kind {
            NodeKind::Leaf => out.push_str(&format!(
                "  n{id} [shape=circle, label=\"{}\"];\n",
                node.label.unwrap()
            )),
            NodeKind::Union => out.push_str(&format!("  n{id} [shape=box, label=\"U\"];\n")),
            NodeKind::Join => out.push_str(&format!("  n{id} [shape=box, label=\"J\"];\n")),
        }
    }
    for id in tree.node_ids() {
        for &c in tree.children(id) {
            out.push_str(&format!("  n{id} -- n{c};\n"));
        }
    }
    out.push_str("}\n");
    out
}
