//! Alternation passes: syntactically different structures with shared
//! meaning are given matching arcs.

use super::{case_marker, shared_info, RuleContext};
use crate::conllu::extra::EdgeInfo;
use crate::conllu::NodeId;
use crate::graph::{DepGraph, Edge};

/// Relates a passive to its active variant: nsubjpass mirrors as dobj, a
/// by-agent mirrors as nsubj.
pub(super) fn passivization(graph: &mut DepGraph, _ctx: &RuleContext) {
    let verbs: Vec<NodeId> = {
        let mut v: Vec<NodeId> = graph
            .edge_pairs("nsubjpass")
            .into_iter()
            .map(|(head, _)| head)
            .collect();
        v.sort();
        v.dedup();
        v
    };
    for verb in verbs {
        let patients: Vec<(NodeId, Edge)> = graph
            .children(verb, Some("nsubjpass"))
            .into_iter()
            .map(|e| (e.dep, (*e).clone()))
            .collect();
        for (patient, source) in patients {
            let info = shared_info(&source.info, "passive", None, false);
            let _ = graph.add_edge(verb, patient, "dobj", info);
        }
        // an agent is any by-marked nmod, whether or not case augmentation
        // already subtyped the label
        let nmods: Vec<(NodeId, Edge)> = graph
            .children(verb, Some("nmod"))
            .into_iter()
            .map(|e| (e.dep, (*e).clone()))
            .collect();
        for (agent, source) in nmods {
            if agent == verb {
                continue;
            }
            let by_marked = source.label == "nmod:by"
                || case_marker(graph, agent).as_deref() == Some("by");
            if !by_marked {
                continue;
            }
            let info = shared_info(&source.info, "passive", None, false);
            let _ = graph.add_edge(verb, agent, "nsubj", info);
        }
    }
}

fn is_hyphen(graph: &DepGraph, id: NodeId) -> bool {
    graph.token(id).map_or(false, |t| {
        t.form == "-"
            && (t.xpos.as_deref() == Some("HYPH")
                || t.basic_deprel.as_deref() == Some("punct"))
    })
}

/// Noun-verb hyphen constructions modifying a nominal (`Miami-based
/// company`) gain a subject and a modifier relation from the verb part.
pub(super) fn hyphen_reconstruction(graph: &mut DepGraph, _ctx: &RuleContext) {
    for (host, verb) in graph.edge_pairs("amod") {
        if !graph.token(verb).map_or(false, |t| t.is_verbal()) {
            continue;
        }
        let nouns: Vec<NodeId> = graph
            .children(verb, Some("compound"))
            .into_iter()
            .map(|e| e.dep)
            .collect();
        for noun in nouns {
            // the hyphen sits strictly between the noun and the verb,
            // adjacent to both
            let (n, v) = (noun.major(), verb.major());
            if n + 2 != v || !is_hyphen(graph, NodeId::word(n + 1)) {
                continue;
            }
            if host != verb {
                let _ = graph.add_edge(verb, host, "nsubj", EdgeInfo::converted("hyphen", None));
            }
            let _ = graph.add_edge(verb, noun, "nmod", EdgeInfo::converted("hyphen", None));
        }
    }
}

/// Each adjectival modifier of the original tree implies a copular claim:
/// `a green apple` → nsubj(green, apple).
pub(super) fn adjectival_subjects(graph: &mut DepGraph, _ctx: &RuleContext) {
    let amods: Vec<(NodeId, NodeId)> = graph
        .enhanced()
        .iter()
        .filter(|e| e.base() == "amod" && e.info.src.is_ud())
        .map(|e| (e.head, e.dep))
        .collect();
    for (noun, adjective) in amods {
        let _ = graph.add_edge(adjective, noun, "nsubj", EdgeInfo::converted("amod", None));
    }
}

/// `X of Y` genitives receive a compound arc, unifying them with compound
/// noun phrases.
pub(super) fn genitive_compound(graph: &mut DepGraph, _ctx: &RuleContext) {
    let candidates: Vec<(NodeId, NodeId)> = graph
        .enhanced()
        .iter()
        .filter(|e| e.base() == "nmod" && e.info.src.is_ud())
        .map(|e| (e.head, e.dep))
        .collect();
    for (h, d) in candidates {
        if case_marker(graph, d).as_deref() != Some("of") {
            continue;
        }
        let _ = graph.add_edge(h, d, "compound", EdgeInfo::converted("nmod", Some("of")));
    }
}
