//! Event-centered passes: copulas, evidentials, reported speech and
//! aspectual verbs become `ev` modifiers of the clause's main event
//! predicate. Copular (stative) clauses gain a STATE node as their head
//! unless copula-as-head mode is on.

use super::{moved_info, sanitize_subtype, RuleContext};
use crate::conllu::extra::EdgeInfo;
use crate::conllu::NodeId;
use crate::graph::{DepGraph, NodeKind};

/// Children lifted from the demoted predicate to the new clause head.
const CLAUSE_LEVEL: [&str; 4] = ["mark", "advcl", "aux", "punct"];

fn subject_edges(graph: &DepGraph, node: NodeId) -> Vec<(NodeId, String, EdgeInfo)> {
    graph
        .children(node, Some("nsubj"))
        .into_iter()
        .chain(graph.children(node, Some("nsubjpass")))
        .map(|e| (e.dep, e.label.clone(), e.info.clone()))
        .collect()
}

/// Rewires one copular clause around a STATE node (or around the copula
/// itself in copula-as-head mode).
fn rewire_copula(graph: &mut DepGraph, p: NodeId, c: NodeId, cop_label: &str, ctx: &RuleContext) {
    let construction = "cop";
    let new = || EdgeInfo::converted(construction, None);

    // degenerate chain `is to be X`: an outer copular verb governs p via
    // xcomp while p carries a `to` mark
    let chain: Option<NodeId> = graph
        .parents(p, Some("xcomp"))
        .into_iter()
        .map(|e| e.head)
        .filter(|v| {
            graph.token(*v).map_or(false, |t| t.lemma_or_form() == "be")
                && super::has_to_marker(graph, p)
        })
        .min();

    let incoming: Vec<(NodeId, String, EdgeInfo)> = graph
        .parents(p, None)
        .into_iter()
        .map(|e| (e.head, e.label.clone(), e.info.clone()))
        .collect();

    let state = if ctx.copula_as_head {
        c
    } else {
        match graph.add_node(c.major(), NodeKind::State, "STATE") {
            Ok(id) => id,
            Err(_) => return,
        }
    };

    // subjects move to the new head, keeping non-UD provenance
    let mut subject_deps: Vec<NodeId> = Vec::new();
    for (dep, label, info) in subject_edges(graph, p) {
        graph.remove_edge(p, dep, &label);
        if dep != state {
            let _ = graph.add_edge(state, dep, &label, moved_info(&info, construction, None));
            subject_deps.push(dep);
        }
    }

    graph.remove_edge(p, c, cop_label);
    if state != c {
        let _ = graph.add_edge(state, c, "ev", new());
    }

    // the predicate attaches under the new head: prepositional predicates
    // as nmod (their case word stays put), others as xcomp
    let prepositional = graph.has_child(p, "case");
    let attach = if prepositional { "nmod" } else { "xcomp" };
    let _ = graph.add_edge(state, p, attach, new());

    // clause-level children lift to the new head; in a chain the `to` mark
    // lands on the copula itself
    let lifted: Vec<(NodeId, String, EdgeInfo)> = graph
        .children(p, None)
        .into_iter()
        .filter(|e| CLAUSE_LEVEL.contains(&e.base()))
        .map(|e| (e.dep, e.label.clone(), e.info.clone()))
        .collect();
    for (dep, label, info) in lifted {
        let to_mark = chain.is_some()
            && label == "mark"
            && graph.token(dep).map_or(false, |t| t.lemma_or_form() == "to");
        let target = if to_mark { c } else { state };
        if dep == target {
            continue;
        }
        graph.remove_edge(p, dep, &label);
        let _ = graph.add_edge(target, dep, &label, moved_info(&info, construction, None));
    }

    // everything that governed the predicate now governs the new head
    for (head, label, info) in incoming {
        if head == state {
            continue;
        }
        if chain == Some(head) && label == "xcomp" {
            // the outer copula chains in as an ev modifier of the inner one
            graph.remove_edge(head, p, &label);
            if c != head {
                let _ = graph.add_edge(c, head, "ev", new());
            }
            for (sv, sl, si) in subject_edges(graph, head) {
                graph.remove_edge(head, sv, &sl);
                if sv != state {
                    let _ = graph.add_edge(state, sv, &sl, moved_info(&si, construction, None));
                    subject_deps.push(sv);
                }
            }
            if graph.enhanced_root() == head {
                graph.set_enhanced_root(state);
            }
            continue;
        }
        graph.remove_edge(head, p, &label);
        let _ = graph.add_edge(head, state, &label, moved_info(&info, construction, None));
    }

    // adjectival predicates also modify their subject directly
    if graph.token(p).map_or(false, |t| t.is_adjectival()) {
        subject_deps.sort();
        subject_deps.dedup();
        for s in subject_deps {
            if s != p {
                let _ = graph.add_edge(s, p, "amod", new());
            }
        }
    }

    if graph.enhanced_root() == p {
        graph.set_enhanced_root(state);
    }
}

/// Adds a STATE node for every copula construction; the STATE heads the
/// clause and the copula hangs off it via `ev`.
pub(super) fn copula_state(graph: &mut DepGraph, ctx: &RuleContext) {
    let mut sites = graph.edge_pairs("cop");
    sites.sort();
    for (p, c) in sites {
        let label = match graph.children(p, Some("cop")).iter().find(|e| e.dep == c) {
            Some(e) => e.label.clone(),
            None => continue, // removed while rewiring an earlier site
        };
        rewire_copula(graph, p, c, &label, ctx);
    }
}

/// The non-stative rewiring: the complement m becomes the event head, v
/// hangs off it via `ev`, and v's dependents follow.
fn demote_to_ev(graph: &mut DepGraph, v: NodeId, m: NodeId, construction: &str, subtype: &str) {
    let sub = Some(subtype);
    for (dep, label, info) in subject_edges(graph, v) {
        graph.remove_edge(v, dep, &label);
        if dep != m {
            let _ = graph.add_edge(m, dep, &label, moved_info(&info, construction, sub));
        }
    }
    graph.remove_edge(v, m, "xcomp");
    let _ = graph.add_edge(m, v, "ev", EdgeInfo::converted(construction, sub));
    let incoming: Vec<(NodeId, String, EdgeInfo)> = graph
        .parents(v, None)
        .into_iter()
        .filter(|e| e.base() != "ev" && e.head != m)
        .map(|e| (e.head, e.label.clone(), e.info.clone()))
        .collect();
    for (head, label, info) in incoming {
        graph.remove_edge(head, v, &label);
        let _ = graph.add_edge(head, m, &label, moved_info(&info, construction, sub));
    }
    if graph.enhanced_root() == v {
        graph.set_enhanced_root(m);
    }
}

/// Stative complement variant: a STATE node heads the clause, both the
/// triggering verb (via ev) and the predicate (via xcomp) attach under it.
fn demote_with_state(
    graph: &mut DepGraph,
    v: NodeId,
    m: NodeId,
    construction: &str,
    subtype: &str,
    ctx: &RuleContext,
) {
    let sub = Some(subtype);
    let new = || EdgeInfo::converted(construction, sub);
    let incoming: Vec<(NodeId, String, EdgeInfo)> = graph
        .parents(v, None)
        .into_iter()
        .map(|e| (e.head, e.label.clone(), e.info.clone()))
        .collect();
    let state = if ctx.copula_as_head {
        m
    } else {
        match graph.add_node(v.major(), NodeKind::State, "STATE") {
            Ok(id) => id,
            Err(_) => return,
        }
    };

    let mut subject_deps = Vec::new();
    for (dep, label, info) in subject_edges(graph, v) {
        graph.remove_edge(v, dep, &label);
        if dep != state {
            let _ = graph.add_edge(state, dep, &label, moved_info(&info, construction, sub));
            subject_deps.push(dep);
        }
    }
    graph.remove_edge(v, m, "xcomp");
    if state != m {
        let _ = graph.add_edge(state, m, "xcomp", new());
    }
    let _ = graph.add_edge(state, v, "ev", new());

    let lifted: Vec<(NodeId, String, EdgeInfo)> = graph
        .children(m, None)
        .into_iter()
        .filter(|e| CLAUSE_LEVEL.contains(&e.base()))
        .map(|e| (e.dep, e.label.clone(), e.info.clone()))
        .collect();
    for (dep, label, info) in lifted {
        if dep == state {
            continue;
        }
        graph.remove_edge(m, dep, &label);
        let _ = graph.add_edge(state, dep, &label, moved_info(&info, construction, sub));
    }

    if graph.token(m).map_or(false, |t| t.is_adjectival()) {
        for s in subject_deps {
            if s != m {
                let _ = graph.add_edge(s, m, "amod", new());
            }
        }
    }

    for (head, label, info) in incoming {
        if head == state {
            continue;
        }
        graph.remove_edge(head, v, &label);
        let _ = graph.add_edge(head, state, &label, moved_info(&info, construction, sub));
    }
    if graph.enhanced_root() == v {
        graph.set_enhanced_root(state);
    }
}

/// Evidential verbs (seem, appear, ...) become `ev` modifiers of their
/// complement; stative complements gain a STATE node. Reported-speech
/// verbs keep their ccomp and add `ev` on the complement.
pub(super) fn evidential_rewiring(graph: &mut DepGraph, ctx: &RuleContext) {
    let mut sites = graph.edge_pairs("xcomp");
    sites.sort();
    for (v, m) in sites {
        let Some(lemma) = graph.token(v).map(|t| t.lemma_or_form()) else {
            continue;
        };
        if !ctx.lexicons.evidential_verbs.contains(&lemma) {
            continue;
        }
        if !graph.children(v, Some("xcomp")).iter().any(|e| e.dep == m) {
            continue; // consumed by an earlier site
        }
        let subtype = sanitize_subtype(&lemma);
        if graph.token(m).map_or(false, |t| t.is_verbal()) {
            demote_to_ev(graph, v, m, "evidential", &subtype);
        } else {
            demote_with_state(graph, v, m, "evidential", &subtype, ctx);
        }
    }

    let mut reported = graph.edge_pairs("ccomp");
    reported.sort();
    for (v, m) in reported {
        let Some(lemma) = graph.token(v).map(|t| t.lemma_or_form()) else {
            continue;
        };
        if !ctx.lexicons.reported_speech_verbs.contains(&lemma) || v == m {
            continue;
        }
        let subtype = sanitize_subtype(&lemma);
        let _ = graph.add_edge(m, v, "ev", EdgeInfo::converted("reported", Some(&subtype)));
    }
}

/// Aspectual verbs (start, keep, ...) with a gerund or to-infinitive
/// complement: the complement becomes the event head.
pub(super) fn aspectual_rewiring(graph: &mut DepGraph, ctx: &RuleContext) {
    let mut sites = graph.edge_pairs("xcomp");
    sites.sort();
    for (v, m) in sites {
        let Some(lemma) = graph.token(v).map(|t| t.lemma_or_form()) else {
            continue;
        };
        if !ctx.lexicons.aspectual_verbs.contains(&lemma) {
            continue;
        }
        let Some(token) = graph.token(m) else { continue };
        let infinitival = token.xpos.as_deref() == Some("VB") || super::has_to_marker(graph, m);
        if !token.is_verbal() || !(token.is_gerund() || infinitival) {
            continue;
        }
        if !graph.children(v, Some("xcomp")).iter().any(|e| e.dep == m) {
            continue;
        }
        demote_to_ev(graph, v, m, "aspectual", &sanitize_subtype(&lemma));
    }
}
