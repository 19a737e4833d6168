//! Nested-structure passes: external arguments are linked as subjects of
//! subordinate clauses.

use super::eud::relative_pronoun;
use super::{has_subject, has_to_marker, leftmost_child, mark_lemma, matrix_subject, RuleContext};
use crate::conllu::extra::EdgeInfo;
use crate::conllu::NodeId;
use crate::graph::DepGraph;

/// Covers xcomp/ccomp clauses without a `to` marker (imperatives,
/// controlled gerunds): the external dobj, else nsubj, becomes the subject.
pub(super) fn extended_control(graph: &mut DepGraph, _ctx: &RuleContext) {
    let mut clauses = graph.edge_pairs("xcomp");
    clauses.extend(graph.edge_pairs("ccomp"));
    for (h, c) in clauses {
        let verbal = graph.token(c).map_or(false, |t| t.is_verbal());
        if !verbal || has_to_marker(graph, c) || has_subject(graph, c) {
            continue;
        }
        let external =
            leftmost_child(graph, h, "dobj").or_else(|| leftmost_child(graph, h, "nsubj"));
        if let Some((subj, _)) = external {
            if subj != c {
                let _ = graph.add_edge(c, subj, "nsubj", EdgeInfo::converted("xcomp", None));
            }
        }
    }
}

/// Clauses modifying a noun without an overt relativizer: reduced relatives
/// gain the noun as dobj, participial modifiers as nsubj (gerund) or
/// nsubjpass (past participle).
pub(super) fn noun_modifying_clauses(graph: &mut DepGraph, _ctx: &RuleContext) {
    for (noun, clause) in graph.edge_pairs("acl") {
        if relative_pronoun(graph, clause).is_some() {
            continue; // the relcl pass's territory
        }
        let Some(token) = graph.token(clause) else {
            continue;
        };
        if !token.is_verbal() {
            continue;
        }
        let info = |subtype: &str| EdgeInfo::converted("acl", Some(subtype));
        if token.is_gerund() {
            if !has_subject(graph, clause) {
                let _ = graph.add_edge(clause, noun, "nsubj", info("participle"));
            }
        } else if token.is_past_participle() {
            if !has_subject(graph, clause) {
                let _ = graph.add_edge(clause, noun, "nsubjpass", info("participle"));
            }
        } else if has_subject(graph, clause) && !graph.has_child(clause, "dobj") {
            let _ = graph.add_edge(clause, noun, "dobj", info("reduced"));
        }
    }
}

/// Propagates matrix arguments into a subjectless clause. With both a
/// subject and an object upstream, both candidates are added as one fresh
/// Alt group.
fn propagate_into(
    graph: &mut DepGraph,
    matrix: NodeId,
    clause: NodeId,
    construction: &str,
    subtype: Option<&str>,
    unc: bool,
) {
    if has_subject(graph, clause) {
        return;
    }
    let subject = matrix_subject(graph, matrix).map(|(s, _)| s).filter(|s| *s != clause);
    let object = leftmost_child(graph, matrix, "dobj")
        .map(|(o, _)| o)
        .filter(|o| *o != clause);
    let info = |alt: Option<u32>| {
        let mut i = EdgeInfo::converted(construction, subtype);
        i.unc = unc;
        i.alt = alt;
        i
    };
    match (subject, object) {
        (Some(s), Some(o)) if s != o => {
            let group = graph.fresh_alt_group();
            let _ = graph.add_edge(clause, s, "nsubj", info(Some(group)));
            let _ = graph.add_edge(clause, o, "nsubj", info(Some(group)));
        }
        (Some(s), _) => {
            let _ = graph.add_edge(clause, s, "nsubj", info(None));
        }
        (None, _) => {}
    }
}

/// Subjectless adverbial clauses receive the matrix subject (both matrix
/// arguments, as alternates, when an object is present too).
pub(super) fn advcl_subjects(graph: &mut DepGraph, _ctx: &RuleContext) {
    let mut sites = graph.edge_pairs("advcl");
    sites.sort_by_key(|(_, clause)| *clause); // Alt groups in token order of the site
    for (matrix, clause) in sites {
        let marker = mark_lemma(graph, clause);
        propagate_into(graph, matrix, clause, "advcl", marker.as_deref(), false);
    }
}

/// `dep` attachments to a verbal dependent behave like adverbial clauses;
/// every edge they add is additionally marked uncertain.
pub(super) fn dep_as_advcl(graph: &mut DepGraph, _ctx: &RuleContext) {
    let mut sites = graph.edge_pairs("dep");
    sites.sort_by_key(|(_, clause)| *clause);
    for (matrix, clause) in sites {
        if !graph.token(clause).map_or(false, |t| t.is_verbal()) {
            continue;
        }
        let marker = mark_lemma(graph, clause);
        propagate_into(graph, matrix, clause, "dep", marker.as_deref(), true);
    }
}
