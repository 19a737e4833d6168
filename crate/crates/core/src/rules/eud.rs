//! The Enhanced-UD passes: label augmentation, conjunction propagation,
//! relative-clause linking, to-marked control, and the preposition copy
//! node expansion.

use super::{
    case_marker, coordination_word, has_subject, has_to_marker, leftmost_child, sanitize_subtype,
    RuleContext,
};
use crate::conllu::extra::EdgeInfo;
use crate::conllu::NodeId;
use crate::graph::DepGraph;

const CORE_LABELS: [&str; 3] = ["nsubj", "dobj", "nsubjpass"];

/// Subtypes every bare `nmod`/`advcl` UD edge with the lowercased marker of
/// its dependent (`nmod` + case "by" → `nmod:by`).
pub(super) fn case_augmentation(graph: &mut DepGraph, _ctx: &RuleContext) {
    let candidates: Vec<(NodeId, NodeId, String)> = graph
        .enhanced()
        .iter()
        .filter(|e| e.info.src.is_ud() && (e.label == "nmod" || e.label == "advcl"))
        .map(|e| (e.head, e.dep, e.label.clone()))
        .collect();
    for (head, dep, label) in candidates {
        if let Some(marker) = case_marker(graph, dep) {
            if marker.is_empty() {
                continue;
            }
            graph.relabel_edge(head, dep, &label, &format!("{}:{}", label, marker));
        }
    }
}

/// For `conj(h, c)`: copies h's core dependents to c, and makes c a core
/// dependent of h's own governor, unless c already fills that slot.
pub(super) fn conj_propagation(graph: &mut DepGraph, _ctx: &RuleContext) {
    let conj_edges: Vec<(NodeId, NodeId)> = graph.edge_pairs("conj");
    for (h, c) in conj_edges {
        let coord = coordination_word(graph, h, c);
        let info = || EdgeInfo::converted("conj", coord.as_deref());

        for label in CORE_LABELS {
            if !graph.children(c, Some(label)).is_empty() {
                continue;
            }
            let donors: Vec<(NodeId, String)> = graph
                .children(h, Some(label))
                .into_iter()
                .map(|e| (e.dep, e.label.clone()))
                .collect();
            for (dep, full_label) in donors {
                if dep == c {
                    continue;
                }
                let _ = graph.add_edge(c, dep, &full_label, info());
            }
        }

        let incoming: Vec<(NodeId, String, String)> = graph
            .parents(h, None)
            .into_iter()
            .filter(|e| CORE_LABELS.contains(&e.base()))
            .map(|e| (e.head, e.label.clone(), e.base().to_string()))
            .collect();
        for (gov, full_label, base) in incoming {
            if gov == c {
                continue;
            }
            let taken = graph
                .children(gov, Some(&base))
                .iter()
                .any(|e| e.dep == c);
            if !taken {
                let _ = graph.add_edge(gov, c, &full_label, info());
            }
        }
    }
}

fn is_relative_pronoun(graph: &DepGraph, node: NodeId) -> bool {
    let Some(token) = graph.token(node) else {
        return false;
    };
    if let Some(x) = &token.xpos {
        if matches!(x.as_str(), "WP" | "WP$" | "WDT") {
            return true;
        }
    }
    matches!(
        token.lemma_or_form().as_str(),
        "who" | "whom" | "whose" | "which" | "that"
    ) && token.upos.as_deref() != Some("SCONJ")
}

const GAP_LABELS: [&str; 5] = ["nsubj", "nsubjpass", "dobj", "iobj", "nmod"];

/// The relative pronoun of a clause: the leftmost pronoun inside the
/// clause's basic subtree that is attached with a grammatical relation.
pub(super) fn relative_pronoun(
    graph: &DepGraph,
    clause: NodeId,
) -> Option<(NodeId, NodeId, String)> {
    let subtree = graph.subtree_tokens(clause);
    let mut best: Option<(NodeId, NodeId, String)> = None;
    for edge in graph.enhanced() {
        if !GAP_LABELS.contains(&edge.base()) {
            continue;
        }
        if !subtree.contains(&edge.dep) || !subtree.contains(&edge.head) {
            continue;
        }
        if !is_relative_pronoun(graph, edge.dep) {
            continue;
        }
        match &best {
            Some((p, ..)) if *p <= edge.dep => {}
            _ => best = Some((edge.dep, edge.head, edge.label.clone())),
        }
    }
    best
}

/// Attaches the antecedent of a relative clause inside the clause with the
/// pronoun's function; the pronoun's edge is rewritten as `ref`.
pub(super) fn relcl_linking(graph: &mut DepGraph, _ctx: &RuleContext) {
    let clauses: Vec<(NodeId, NodeId)> = graph.edge_pairs("acl");
    for (noun, clause) in clauses {
        let Some((pronoun, inner_head, label)) = relative_pronoun(graph, clause) else {
            continue;
        };
        if pronoun == noun {
            continue;
        }
        let already = graph
            .children(noun, Some("ref"))
            .iter()
            .any(|e| e.dep == pronoun);
        if already {
            continue;
        }
        let info = EdgeInfo::converted("acl", Some("relcl"));
        graph.remove_edge(inner_head, pronoun, &label);
        if inner_head != noun {
            let _ = graph.add_edge(inner_head, noun, &label, info.clone());
        }
        let _ = graph.add_edge(noun, pronoun, "ref", info);
    }
}

/// Adds the external subject of a to-marked xcomp clause: the matrix dobj
/// when present (object control), else the matrix nsubj.
pub(super) fn xcomp_to_control(graph: &mut DepGraph, _ctx: &RuleContext) {
    let xcomps: Vec<(NodeId, NodeId)> = graph.edge_pairs("xcomp");
    for (h, c) in xcomps {
        if !has_to_marker(graph, c) || has_subject(graph, c) {
            continue;
        }
        let subject =
            leftmost_child(graph, h, "dobj").or_else(|| leftmost_child(graph, h, "nsubj"));
        if let Some((subj, _)) = subject {
            if subj != c {
                let _ = graph.add_edge(c, subj, "nsubj", EdgeInfo::converted("xcomp", Some("to")));
            }
        }
    }
}

/// For two prepositions conjoined over one nominal (`to and from Boston`):
/// adds a copy of the nominal governed through the second preposition.
pub(super) fn prep_conj_copy(graph: &mut DepGraph, _ctx: &RuleContext) {
    let conj_edges: Vec<(NodeId, NodeId)> = graph.edge_pairs("conj");
    for (p1, p2) in conj_edges {
        // p1 must itself be a case marker of some nominal n
        let Some(case_edge) = graph
            .parents(p1, Some("case"))
            .into_iter()
            .min_by_key(|e| e.head)
        else {
            continue;
        };
        let n = case_edge.head;
        // the second conjunct already marks a node of its own: nothing to do
        if !graph.parents(p2, Some("case")).is_empty() {
            continue;
        }
        let Some(nmod_edge) = graph
            .parents(n, Some("nmod"))
            .into_iter()
            .min_by_key(|e| e.head)
        else {
            continue;
        };
        let gov = nmod_edge.head;
        let Some(p2_lemma) = graph.token(p2).map(|t| sanitize_subtype(&t.lemma_or_form())) else {
            continue;
        };
        let coord = coordination_word(graph, p1, p2);
        let copy = match graph.add_copy_node(n, n.major()) {
            Ok(id) => id,
            Err(_) => continue,
        };
        let info = EdgeInfo::converted("conj", coord.as_deref());
        let _ = graph.add_edge(gov, copy, &format!("nmod:{}", p2_lemma), info.clone());
        let _ = graph.add_edge(copy, p2, "case", info);
    }
}
