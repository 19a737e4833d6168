//! In-memory labeled directed multigraph over the tokens of one sentence.
//!
//! A [`DepGraph`] keeps two layers: the frozen basic tree (mirroring
//! HEAD/DEPREL) and the mutable enhanced edge set the conversion passes
//! rewrite. Parallel edges with the same head, dependent and label are kept
//! as separate provenance records; serialization emits one DEPS cell per
//! (head, label), preferring the UD record, else the earliest one.

use std::collections::BTreeSet;

use crate::conllu::extra::{base_label, decode_extra, encode_extra, EdgeInfo};
use crate::conllu::{Dep, NodeId, Sentence, Token};
use crate::error::GraphError;

/// What kind of node an id refers to. Added nodes always carry null ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Word,
    State,
    Copy,
}

#[derive(Debug, Clone)]
pub struct Node {
    pub id: NodeId,
    pub kind: NodeKind,
    pub token: Token,
}

/// One basic-tree edge (head, dependent, label). The root is not an edge;
/// see [`DepGraph::basic_root`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicEdge {
    pub head: NodeId,
    pub dep: NodeId,
    pub label: String,
}

/// One enhanced edge with its provenance record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub head: NodeId,
    pub dep: NodeId,
    /// Relation label with optional subtype (`nmod:by`, `ev`), never with
    /// `@` metadata — that lives in `info`.
    pub label: String,
    pub info: EdgeInfo,
}

impl Edge {
    pub fn base(&self) -> &str {
        base_label(&self.label)
    }
}

/// How to seed the enhanced layer when building a graph from a sentence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SeedMode {
    /// Copy the basic tree (src=UD).
    #[default]
    Basic,
    /// Decode the DEPS column.
    Deps,
    /// `Deps` if any token carries DEPS entries, else `Basic`.
    Auto,
}

#[derive(Debug, Clone)]
pub struct DepGraph {
    nodes: Vec<Node>,
    basic: Vec<BasicEdge>,
    basic_root: NodeId,
    enhanced: Vec<Edge>,
    enhanced_root: NodeId,
    next_alt: u32,
    revision: u64,
    comments: Vec<String>,
    diagnostics: Vec<String>,
}

impl DepGraph {
    /// Builds a graph from a sentence. The basic layer mirrors HEAD/DEPREL;
    /// the enhanced layer is seeded per `seed`.
    pub fn from_sentence(sentence: &Sentence, seed: SeedMode) -> Result<Self, GraphError> {
        let mut nodes = Vec::with_capacity(sentence.tokens.len());
        for token in &sentence.tokens {
            let kind = match token.id {
                NodeId::Word(_) => NodeKind::Word,
                NodeId::Null(..) => {
                    if token.form == "STATE" {
                        NodeKind::State
                    } else {
                        NodeKind::Copy
                    }
                }
            };
            nodes.push(Node {
                id: token.id,
                kind,
                token: token.clone(),
            });
        }

        let mut basic = Vec::new();
        let mut root = None;
        for token in &sentence.tokens {
            match token.basic_head {
                Some(0) => {
                    if root.replace(token.id).is_some() {
                        return Err(GraphError::NotATree("more than one root".into()));
                    }
                }
                Some(h) => basic.push(BasicEdge {
                    head: NodeId::word(h),
                    dep: token.id,
                    label: token
                        .basic_deprel
                        .clone()
                        .unwrap_or_else(|| "dep".to_string()),
                }),
                None => {} // null node
            }
        }
        let basic_root = root.ok_or_else(|| GraphError::NotATree("no root".into()))?;

        // cycle check: every surface token must reach the root
        let surface = sentence.surface_len();
        for token in sentence.tokens.iter().filter(|t| !t.id.is_null()) {
            let mut current = token.id;
            let mut steps = 0;
            while current != basic_root {
                let head = basic
                    .iter()
                    .find(|e| e.dep == current)
                    .map(|e| e.head)
                    .ok_or_else(|| GraphError::NotATree(format!("`{}` has no head", current)))?;
                current = head;
                steps += 1;
                if steps > surface {
                    return Err(GraphError::NotATree(format!(
                        "cycle through `{}`",
                        token.id
                    )));
                }
            }
        }

        let mut graph = DepGraph {
            nodes,
            basic,
            basic_root,
            enhanced: Vec::new(),
            enhanced_root: basic_root,
            next_alt: 0,
            revision: 0,
            comments: sentence.comments.clone(),
            diagnostics: Vec::new(),
        };

        let seed = match seed {
            SeedMode::Auto => {
                if sentence.tokens.iter().any(|t| !t.deps.is_empty()) {
                    SeedMode::Deps
                } else {
                    SeedMode::Basic
                }
            }
            other => other,
        };
        match seed {
            SeedMode::Basic => {
                for edge in graph.basic.clone() {
                    graph.enhanced.push(Edge {
                        head: edge.head,
                        dep: edge.dep,
                        label: edge.label,
                        info: EdgeInfo::ud(),
                    });
                }
            }
            SeedMode::Deps => graph.seed_from_deps(sentence)?,
            SeedMode::Auto => unreachable!(),
        }
        Ok(graph)
    }

    fn seed_from_deps(&mut self, sentence: &Sentence) -> Result<(), GraphError> {
        let mut max_alt = None;
        let mut root = None;
        for token in &sentence.tokens {
            for Dep { head, label } in &token.deps {
                if *head == NodeId::word(0) {
                    root = Some(token.id);
                    continue;
                }
                let (label, info) = decode_extra(label)
                    .map_err(|e| GraphError::BadDeps(format!("`{}`: {}", token.id, e)))?;
                if let Some(alt) = info.alt {
                    max_alt = Some(max_alt.map_or(alt, |m: u32| m.max(alt)));
                }
                self.enhanced.push(Edge {
                    head: *head,
                    dep: token.id,
                    label,
                    info,
                });
            }
        }
        self.enhanced_root = root.unwrap_or(self.basic_root);
        self.next_alt = max_alt.map_or(0, |m| m + 1);
        Ok(())
    }

    pub fn nodes(&self) -> impl Iterator<Item = &Node> {
        self.nodes.iter()
    }

    pub fn node(&self, id: NodeId) -> Option<&Node> {
        self.nodes.iter().find(|n| n.id == id)
    }

    pub fn token(&self, id: NodeId) -> Option<&Token> {
        self.node(id).map(|n| &n.token)
    }

    pub fn basic_edges(&self) -> &[BasicEdge] {
        &self.basic
    }

    pub fn basic_root(&self) -> NodeId {
        self.basic_root
    }

    pub fn enhanced(&self) -> &[Edge] {
        &self.enhanced
    }

    pub fn enhanced_root(&self) -> NodeId {
        self.enhanced_root
    }

    pub fn set_enhanced_root(&mut self, id: NodeId) {
        if self.enhanced_root != id {
            self.enhanced_root = id;
            self.revision += 1;
        }
    }

    /// Monotone counter bumped by every effective mutation; the pipeline
    /// uses it to detect a fixpoint.
    pub fn revision(&self) -> u64 {
        self.revision
    }

    pub fn comments(&self) -> &[String] {
        &self.comments
    }

    pub fn diagnostics(&self) -> &[String] {
        &self.diagnostics
    }

    pub fn push_diagnostic(&mut self, message: impl Into<String>) {
        self.diagnostics.push(message.into());
    }

    /// Fresh Alt group id for one ambiguity site.
    pub fn fresh_alt_group(&mut self) -> u32 {
        let alt = self.next_alt;
        self.next_alt += 1;
        alt
    }

    /// Adds an enhanced edge. Adding an edge whose (head, dep, label, src)
    /// already exists is a no-op; a different src yields a parallel record.
    /// Returns whether the graph changed.
    pub fn add_edge(
        &mut self,
        head: NodeId,
        dep: NodeId,
        label: &str,
        info: EdgeInfo,
    ) -> Result<bool, GraphError> {
        if self.node(head).is_none() {
            return Err(GraphError::UnknownNode(head.to_string()));
        }
        if self.node(dep).is_none() {
            return Err(GraphError::UnknownNode(dep.to_string()));
        }
        if head == dep {
            return Err(GraphError::SelfLoop(head.to_string()));
        }
        debug_assert!(info.is_valid(), "src=UD edges cannot carry unc/alt");
        let exists = self
            .enhanced
            .iter()
            .any(|e| e.head == head && e.dep == dep && e.label == label && e.info.src == info.src);
        if exists {
            return Ok(false);
        }
        self.enhanced.push(Edge {
            head,
            dep,
            label: label.to_string(),
            info,
        });
        self.revision += 1;
        Ok(true)
    }

    /// Removes every record of (head, dep, label) from the enhanced layer.
    /// Removing an absent edge is recorded as a diagnostic no-op.
    pub fn remove_edge(&mut self, head: NodeId, dep: NodeId, label: &str) -> bool {
        let before = self.enhanced.len();
        self.enhanced
            .retain(|e| !(e.head == head && e.dep == dep && e.label == label));
        if self.enhanced.len() == before {
            self.diagnostics
                .push(format!("remove of absent edge {}({}, {})", label, head, dep));
            false
        } else {
            self.revision += 1;
            true
        }
    }

    /// Rewrites the label of every (head, dep, old_label) record in place,
    /// keeping provenance. Used for case augmentation.
    pub fn relabel_edge(&mut self, head: NodeId, dep: NodeId, old: &str, new: &str) -> bool {
        let mut changed = false;
        for edge in &mut self.enhanced {
            if edge.head == head && edge.dep == dep && edge.label == old {
                edge.label = new.to_string();
                changed = true;
            }
        }
        if changed {
            self.revision += 1;
        }
        changed
    }

    /// Inserts a new null node after the given surface token and returns its
    /// id (`position.j` with the smallest unused minor index).
    pub fn add_node(
        &mut self,
        position: u32,
        kind: NodeKind,
        form: &str,
    ) -> Result<NodeId, GraphError> {
        debug_assert!(kind != NodeKind::Word);
        if self.node(NodeId::word(position)).is_none() {
            return Err(GraphError::UnknownNode(position.to_string()));
        }
        let minor = self
            .nodes
            .iter()
            .filter_map(|n| match n.id {
                NodeId::Null(maj, min) if maj == position => Some(min),
                _ => None,
            })
            .max()
            .unwrap_or(0)
            + 1;
        let id = NodeId::null(position, minor);
        let mut token = Token::new(id, form);
        if kind == NodeKind::Copy {
            token.misc.push(format!("CopyOf={}", position));
        }
        // keep nodes ordered by id so serialization is positional
        let at = self.nodes.partition_point(|n| n.id < id);
        self.nodes.insert(at, Node { id, kind, token });
        self.revision += 1;
        Ok(id)
    }

    /// Like [`add_node`] but copies form, lemma and POS from an existing
    /// token and records `CopyOf`.
    pub fn add_copy_node(&mut self, of: NodeId, position: u32) -> Result<NodeId, GraphError> {
        let source = self
            .token(of)
            .ok_or_else(|| GraphError::UnknownNode(of.to_string()))?
            .clone();
        let id = self.add_node(position, NodeKind::Copy, &source.form)?;
        let node = self.nodes.iter_mut().find(|n| n.id == id).unwrap();
        node.token.lemma = source.lemma.clone();
        node.token.upos = source.upos.clone();
        node.token.xpos = source.xpos.clone();
        node.token.misc = vec![format!("CopyOf={}", of)];
        Ok(id)
    }

    /// Enhanced edges whose head is `node`; `label` filters on the base
    /// label unless it contains an explicit subtype.
    pub fn children(&self, node: NodeId, label: Option<&str>) -> Vec<&Edge> {
        self.enhanced
            .iter()
            .filter(|e| e.head == node && label_matches(&e.label, label))
            .collect()
    }

    /// Enhanced edges whose dependent is `node`, same label filtering.
    pub fn parents(&self, node: NodeId, label: Option<&str>) -> Vec<&Edge> {
        self.enhanced
            .iter()
            .filter(|e| e.dep == node && label_matches(&e.label, label))
            .collect()
    }

    /// First child edge matching the filter, in insertion order.
    pub fn child(&self, node: NodeId, label: &str) -> Option<&Edge> {
        self.enhanced
            .iter()
            .find(|e| e.head == node && label_matches(&e.label, Some(label)))
    }

    pub fn has_child(&self, node: NodeId, label: &str) -> bool {
        self.child(node, label).is_some()
    }

    /// Deduplicated (head, dependent) pairs of enhanced edges with the given
    /// base label, in token order. Rules iterate over this snapshot while
    /// mutating the graph.
    pub fn edge_pairs(&self, base: &str) -> Vec<(NodeId, NodeId)> {
        let mut pairs: Vec<(NodeId, NodeId)> = self
            .enhanced
            .iter()
            .filter(|e| e.base() == base)
            .map(|e| (e.head, e.dep))
            .collect();
        pairs.sort();
        pairs.dedup();
        pairs
    }

    /// Tokens of the basic-tree subtree rooted at `node`, `node` included.
    pub fn subtree_tokens(&self, node: NodeId) -> BTreeSet<NodeId> {
        let mut seen = BTreeSet::from([node]);
        let mut queue = vec![node];
        while let Some(current) = queue.pop() {
            for edge in self.basic.iter().filter(|e| e.head == current) {
                if seen.insert(edge.dep) {
                    queue.push(edge.dep);
                }
            }
        }
        seen
    }

    /// Whether `descendant` lies in the basic subtree of `ancestor`.
    pub fn in_subtree(&self, ancestor: NodeId, descendant: NodeId) -> bool {
        self.subtree_tokens(ancestor).contains(&descendant)
    }

    /// Nearest basic-tree ancestor of `node` (itself included) whose token
    /// satisfies the predicate.
    pub fn ancestor_or_self(
        &self,
        node: NodeId,
        pred: impl Fn(&Token) -> bool,
    ) -> Option<NodeId> {
        let mut current = node;
        loop {
            if self.token(current).map_or(false, &pred) {
                return Some(current);
            }
            match self.basic.iter().find(|e| e.dep == current) {
                Some(edge) => current = edge.head,
                None => return None,
            }
        }
    }

    /// Writes the graph back into a sentence: basic columns untouched, DEPS
    /// rebuilt from the enhanced layer, null nodes emitted in position
    /// order.
    pub fn to_sentence(&self) -> Sentence {
        let mut tokens: Vec<Token> = Vec::with_capacity(self.nodes.len());
        for node in &self.nodes {
            let mut token = node.token.clone();
            token.deps = self.deps_cells(node.id);
            tokens.push(token);
        }
        Sentence {
            comments: self.comments.clone(),
            tokens,
        }
    }

    /// DEPS cells for one dependent: one cell per (head, label), preferring
    /// the UD record over converted ones, else the earliest record.
    fn deps_cells(&self, dep: NodeId) -> Vec<Dep> {
        let mut cells: Vec<Dep> = Vec::new();
        if dep == self.enhanced_root {
            cells.push(Dep {
                head: NodeId::word(0),
                label: "root".to_string(),
            });
        }
        let mut chosen: Vec<&Edge> = Vec::new();
        for edge in self.enhanced.iter().filter(|e| e.dep == dep) {
            match chosen
                .iter_mut()
                .find(|c| c.head == edge.head && c.label == edge.label)
            {
                Some(slot) => {
                    if !slot.info.src.is_ud() && edge.info.src.is_ud() {
                        *slot = edge;
                    }
                }
                None => chosen.push(edge),
            }
        }
        for edge in chosen {
            cells.push(Dep {
                head: edge.head,
                label: encode_extra(&edge.label, &edge.info),
            });
        }
        cells.sort_by(|a, b| a.head.cmp(&b.head).then_with(|| a.label.cmp(&b.label)));
        cells
    }

    /// Whether an enhanced edge coincides with a basic edge up to label
    /// subtyping (case augmentation keeps src=UD).
    pub fn is_basic_derived(&self, edge: &Edge) -> bool {
        self.basic.iter().any(|b| {
            b.head == edge.head && b.dep == edge.dep && base_label(&b.label) == edge.base()
        })
    }
}

/// Matches a full label against a filter: a filter with a subtype must
/// match exactly; a bare filter matches on the base label.
pub fn label_matches(label: &str, filter: Option<&str>) -> bool {
    match filter {
        None => true,
        Some(f) if f.contains(':') => label == f,
        Some(f) => base_label(label) == f,
    }
}
