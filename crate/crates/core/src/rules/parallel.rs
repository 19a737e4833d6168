//! Parallel-structure passes: elliptical second instances inherit relations
//! from the first.

use super::{case_marker, coordination_word, shared_info, RuleContext};
use crate::conllu::NodeId;
use crate::graph::{DepGraph, Edge};

/// Labels never duplicated across apposition or elaboration parts.
const NON_SHARED: [&str; 4] = ["det", "punct", "case", "appos"];

/// For `appos(a, b)`: duplicates a's incoming and outgoing grammatical
/// relations onto b.
pub(super) fn apposition_sharing(graph: &mut DepGraph, _ctx: &RuleContext) {
    for (a, b) in graph.edge_pairs("appos") {
        let mut planned: Vec<(NodeId, NodeId, String, Edge)> = Vec::new();
        for edge in graph.enhanced() {
            if NON_SHARED.contains(&edge.base()) || edge.base() == "ref" {
                continue;
            }
            if edge.dep == a && edge.head != b {
                planned.push((edge.head, b, edge.label.clone(), edge.clone()));
            } else if edge.head == a && edge.dep != b {
                planned.push((b, edge.dep, edge.label.clone(), edge.clone()));
            }
        }
        for (head, dep, label, source) in planned {
            let info = shared_info(&source.info, "appos", None, false);
            let _ = graph.add_edge(head, dep, &label, info);
        }
    }
}

/// Shares prepositional and possessive modifiers between conjuncts, marked
/// uncertain: trees cannot distinguish conjoined from single-conjunct
/// modification.
pub(super) fn conj_modifier_sharing(graph: &mut DepGraph, _ctx: &RuleContext) {
    for (h, c) in graph.edge_pairs("conj") {
        let coord = coordination_word(graph, h, c);
        for (donor, receiver) in [(h, c), (c, h)] {
            let has_poss = |g: &DepGraph, n: NodeId| {
                g.children(n, Some("nmod"))
                    .iter()
                    .any(|e| e.label.starts_with("nmod:poss"))
            };
            let has_plain = |g: &DepGraph, n: NodeId| {
                g.children(n, Some("nmod"))
                    .iter()
                    .any(|e| !e.label.starts_with("nmod:poss"))
            };
            let skip_poss = has_poss(graph, receiver);
            let skip_plain = has_plain(graph, receiver);
            let donations: Vec<(NodeId, String, Edge)> = graph
                .children(donor, Some("nmod"))
                .into_iter()
                .filter(|e| {
                    let poss = e.label.starts_with("nmod:poss");
                    e.dep != receiver && !(if poss { skip_poss } else { skip_plain })
                })
                .map(|e| (e.dep, e.label.clone(), (*e).clone()))
                .collect();
            for (dep, label, source) in donations {
                let info = shared_info(&source.info, "conj", coord.as_deref(), true);
                let _ = graph.add_edge(receiver, dep, &label, info);
            }
        }
    }
}

/// Elaboration/specification modifiers (`such as`, `like`) inherit the
/// modified noun's external relations.
pub(super) fn elaboration_specification(graph: &mut DepGraph, ctx: &RuleContext) {
    for (h, d) in graph.edge_pairs("nmod") {
        let Some(marker) = case_marker(graph, d) else {
            continue;
        };
        if !ctx.lexicons.elaboration_markers.contains(&marker) {
            continue;
        }
        let inside = graph.subtree_tokens(d);
        let mut planned: Vec<(NodeId, NodeId, String, Edge)> = Vec::new();
        for edge in graph.enhanced() {
            if NON_SHARED.contains(&edge.base()) || edge.base() == "ref" {
                continue;
            }
            if edge.dep == h && !inside.contains(&edge.head) {
                planned.push((edge.head, d, edge.label.clone(), edge.clone()));
            } else if edge.head == h && !inside.contains(&edge.dep) {
                planned.push((d, edge.dep, edge.label.clone(), edge.clone()));
            }
        }
        for (head, dep, label, source) in planned {
            let info = shared_info(&source.info, "nmod", Some(&marker), false);
            let _ = graph.add_edge(head, dep, &label, info);
        }
    }
}

/// Locative/temporal indexicals modifying a noun inside an nmod are
/// re-shared as adverbial modifiers of the clause's main verb.
pub(super) fn indexicals(graph: &mut DepGraph, ctx: &RuleContext) {
    let candidates: Vec<(NodeId, NodeId)> = graph
        .edge_pairs("advmod")
        .into_iter()
        .filter(|(noun, adv)| {
            graph
                .token(*adv)
                .map_or(false, |t| ctx.lexicons.indexicals.contains(&t.lemma_or_form()))
                && graph.token(*noun).map_or(false, |t| t.is_nominal())
        })
        .collect();
    for (noun, adv) in candidates {
        let Some(nmod_head) = graph
            .parents(noun, Some("nmod"))
            .into_iter()
            .map(|e| e.head)
            .min()
        else {
            continue;
        };
        let target = graph
            .ancestor_or_self(nmod_head, |t| t.is_verbal())
            .unwrap_or_else(|| graph.basic_root());
        if target == adv || target == noun {
            continue;
        }
        let info = shared_info(
            &crate::conllu::extra::EdgeInfo::ud(),
            "advmod",
            Some("indexical"),
            true,
        );
        let _ = graph.add_edge(target, adv, "advmod", info);
    }
}

/// Compounds behave as multi-headed: the head's incoming core relations are
/// shared with the modifier, marked uncertain.
pub(super) fn compound_sharing(graph: &mut DepGraph, _ctx: &RuleContext) {
    for (h, m) in graph.edge_pairs("compound") {
        let incoming: Vec<(NodeId, String, Edge)> = graph
            .parents(h, None)
            .into_iter()
            .filter(|e| matches!(e.base(), "nsubj" | "dobj" | "nsubjpass"))
            .map(|e| (e.head, e.label.clone(), (*e).clone()))
            .collect();
        for (gov, label, source) in incoming {
            if gov == m {
                continue;
            }
            let info = shared_info(&source.info, "compound", None, true);
            let _ = graph.add_edge(gov, m, &label, info);
        }
    }
}
