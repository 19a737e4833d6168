//! The conversion registry: independently switchable graph-rewriting
//! passes, run in a fixed order to a fixpoint.
//!
//! Families: `eud` (case subtyping, conjunction propagation, relative
//! clause linking, to-marked control, preposition copy nodes), then the
//! event-exposing layers — `nested`, `parallel`, `alternation`, `event`.

mod alternation;
mod eud;
mod event;
mod nested;
mod parallel;

use std::collections::BTreeSet;

use crate::conllu::extra::{EdgeInfo, EdgeSrc};
use crate::conllu::{NodeId, Sentence};
use crate::error::GraphError;
use crate::graph::{DepGraph, Edge, SeedMode};
use crate::lexicon::Lexicons;

/// Conversion family a rule belongs to; also its execution stratum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Eud,
    Nested,
    Parallel,
    Alternation,
    Event,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Eud => "eud",
            Family::Nested => "nested",
            Family::Parallel => "parallel",
            Family::Alternation => "alternation",
            Family::Event => "event",
        }
    }
}

/// Per-rule execution context.
pub struct RuleContext<'a> {
    pub lexicons: &'a Lexicons,
    /// Rewire copular clauses onto the copula token instead of inserting a
    /// STATE node.
    pub copula_as_head: bool,
}

pub struct RuleDef {
    pub id: &'static str,
    pub family: Family,
    pub description: &'static str,
    pub run: fn(&mut DepGraph, &RuleContext),
}

/// All rules, in execution order.
pub fn registry() -> &'static [RuleDef] {
    &[
        RuleDef {
            id: "case_augmentation",
            family: Family::Eud,
            description: "subtype nmod/advcl labels with their case or mark word",
            run: eud::case_augmentation,
        },
        RuleDef {
            id: "conj_propagation",
            family: Family::Eud,
            description: "share core arguments across conjuncts",
            run: eud::conj_propagation,
        },
        RuleDef {
            id: "relcl_linking",
            family: Family::Eud,
            description: "link relative-clause gaps to the antecedent, pronoun becomes ref",
            run: eud::relcl_linking,
        },
        RuleDef {
            id: "xcomp_to_control",
            family: Family::Eud,
            description: "external subjects for to-marked xcomp clauses",
            run: eud::xcomp_to_control,
        },
        RuleDef {
            id: "prep_conj_copy",
            family: Family::Eud,
            description: "copy nodes for conjoined prepositions over one nominal",
            run: eud::prep_conj_copy,
        },
        RuleDef {
            id: "extended_control",
            family: Family::Nested,
            description: "external subjects for unmarked xcomp/ccomp clauses",
            run: nested::extended_control,
        },
        RuleDef {
            id: "noun_modifying_clauses",
            family: Family::Nested,
            description: "arguments for reduced relatives and participial modifiers",
            run: nested::noun_modifying_clauses,
        },
        RuleDef {
            id: "advcl_subjects",
            family: Family::Nested,
            description: "propagate the matrix subject into subjectless adverbial clauses",
            run: nested::advcl_subjects,
        },
        RuleDef {
            id: "dep_as_advcl",
            family: Family::Nested,
            description: "treat verbal dep attachments as adverbial clauses (uncertain)",
            run: nested::dep_as_advcl,
        },
        RuleDef {
            id: "apposition_sharing",
            family: Family::Parallel,
            description: "share relations across apposition parts",
            run: parallel::apposition_sharing,
        },
        RuleDef {
            id: "conj_modifier_sharing",
            family: Family::Parallel,
            description: "share prepositional and possessive modifiers between conjuncts",
            run: parallel::conj_modifier_sharing,
        },
        RuleDef {
            id: "elaboration_specification",
            family: Family::Parallel,
            description: "propagate head relations to like/such-as modifiers",
            run: parallel::elaboration_specification,
        },
        RuleDef {
            id: "indexicals",
            family: Family::Parallel,
            description: "share locative/temporal indexicals with the main verb",
            run: parallel::indexicals,
        },
        RuleDef {
            id: "compound_sharing",
            family: Family::Parallel,
            description: "share incoming core relations across compound parts",
            run: parallel::compound_sharing,
        },
        RuleDef {
            id: "passivization",
            family: Family::Alternation,
            description: "mirror passives with their active argument structure",
            run: alternation::passivization,
        },
        RuleDef {
            id: "hyphen_reconstruction",
            family: Family::Alternation,
            description: "subject and modifier relations for noun-verb hyphen constructions",
            run: alternation::hyphen_reconstruction,
        },
        RuleDef {
            id: "adjectival_subjects",
            family: Family::Alternation,
            description: "subject relation from each adjectival modifier to its noun",
            run: alternation::adjectival_subjects,
        },
        RuleDef {
            id: "genitive_compound",
            family: Family::Alternation,
            description: "compound relation unifying X-of-Y genitives",
            run: alternation::genitive_compound,
        },
        RuleDef {
            id: "copula_state",
            family: Family::Event,
            description: "STATE node heading copular clauses, copula demoted via ev",
            run: event::copula_state,
        },
        RuleDef {
            id: "evidential_rewiring",
            family: Family::Event,
            description: "evidential and reported-speech verbs as ev modifiers",
            run: event::evidential_rewiring,
        },
        RuleDef {
            id: "aspectual_rewiring",
            family: Family::Event,
            description: "aspectual verbs as ev modifiers of their complement",
            run: event::aspectual_rewiring,
        },
    ]
}

/// Construction types that may appear in the src field of converted edges.
pub fn registered_constructions() -> &'static [&'static str] {
    &[
        "conj",
        "acl",
        "xcomp",
        "advcl",
        "dep",
        "appos",
        "nmod",
        "advmod",
        "compound",
        "passive",
        "hyphen",
        "amod",
        "cop",
        "evidential",
        "aspectual",
        "reported",
    ]
}

/// Conversion preset selecting which rule families run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// No enhancement: the output DEPS equal the basic tree.
    Ud,
    /// The EUD family only.
    Eud,
    /// Everything (the default).
    #[default]
    Bart,
    /// Everything except the EUD family.
    BartNoEud,
}

impl Mode {
    pub fn parse(s: &str) -> Option<Mode> {
        match s {
            "ud" => Some(Mode::Ud),
            "eud" => Some(Mode::Eud),
            "bart" => Some(Mode::Bart),
            "bart-no-eud" => Some(Mode::BartNoEud),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Ud => "ud",
            Mode::Eud => "eud",
            Mode::Bart => "bart",
            Mode::BartNoEud => "bart-no-eud",
        }
    }

    fn includes(self, family: Family) -> bool {
        match self {
            Mode::Ud => false,
            Mode::Eud => family == Family::Eud,
            Mode::Bart => true,
            Mode::BartNoEud => family != Family::Eud,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConvertConfig {
    pub mode: Mode,
    /// Rule ids forced on regardless of mode.
    pub enable: BTreeSet<String>,
    /// Rule ids forced off; wins over `enable`.
    pub disable: BTreeSet<String>,
    pub copula_as_head: bool,
    pub iteration_cap: u32,
    pub lexicons: Lexicons,
}

impl Default for ConvertConfig {
    fn default() -> Self {
        ConvertConfig {
            mode: Mode::Bart,
            enable: BTreeSet::new(),
            disable: BTreeSet::new(),
            copula_as_head: false,
            iteration_cap: 3,
            lexicons: Lexicons::default(),
        }
    }
}

impl ConvertConfig {
    pub fn with_mode(mode: Mode) -> Self {
        ConvertConfig {
            mode,
            ..Default::default()
        }
    }

    fn rule_enabled(&self, rule: &RuleDef) -> bool {
        if self.disable.contains(rule.id) {
            return false;
        }
        self.mode.includes(rule.family) || self.enable.contains(rule.id)
    }

    /// Unknown rule ids in enable/disable, for CLI diagnostics.
    pub fn unknown_rule_ids(&self) -> Vec<String> {
        self.enable
            .iter()
            .chain(self.disable.iter())
            .filter(|id| registry().iter().all(|r| r.id != id.as_str()))
            .cloned()
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct PipelineOutcome {
    pub iterations: u32,
    pub converged: bool,
    pub warnings: Vec<String>,
}

/// Runs the enabled passes in registry order, repeating until the enhanced
/// layer stops changing or the iteration cap is hit. Deterministic for a
/// given (graph, config).
pub fn run_pipeline(graph: &mut DepGraph, config: &ConvertConfig) -> PipelineOutcome {
    let ctx = RuleContext {
        lexicons: &config.lexicons,
        copula_as_head: config.copula_as_head,
    };
    let rules: Vec<&RuleDef> = registry()
        .iter()
        .filter(|r| config.rule_enabled(r))
        .collect();

    let mut outcome = PipelineOutcome {
        iterations: 0,
        converged: rules.is_empty(),
        warnings: Vec::new(),
    };
    for _ in 0..config.iteration_cap {
        let before = graph.revision();
        for rule in &rules {
            (rule.run)(graph, &ctx);
        }
        outcome.iterations += 1;
        if graph.revision() == before {
            outcome.converged = true;
            break;
        }
    }
    if !outcome.converged {
        let warning = format!(
            "iteration cap ({}) reached before a fixpoint",
            config.iteration_cap
        );
        graph.push_diagnostic(warning.clone());
        outcome.warnings.push(warning);
    }
    outcome
}

/// Parses nothing: takes an already-parsed sentence, converts it, and
/// returns the enhanced sentence plus pipeline facts.
pub fn convert_sentence(
    sentence: &Sentence,
    seed: SeedMode,
    config: &ConvertConfig,
) -> Result<(Sentence, PipelineOutcome), GraphError> {
    let mut graph = DepGraph::from_sentence(sentence, seed)?;
    let outcome = run_pipeline(&mut graph, config);
    Ok((graph.to_sentence(), outcome))
}

// ---------------------------------------------------------------------------
// helpers shared by the rule families
// ---------------------------------------------------------------------------

/// Provenance for an edge moved off its original attachment: UD edges take
/// the rewriting rule's src, converted edges keep their own.
pub(crate) fn moved_info(info: &EdgeInfo, construction: &str, subtype: Option<&str>) -> EdgeInfo {
    match info.src {
        EdgeSrc::Ud => EdgeInfo::converted(construction, subtype),
        _ => info.clone(),
    }
}

/// Provenance for a duplicated (shared) edge: the sharing rule's src, with
/// uncertainty and alternation inherited from the source record.
pub(crate) fn shared_info(
    source: &EdgeInfo,
    construction: &str,
    subtype: Option<&str>,
    force_unc: bool,
) -> EdgeInfo {
    EdgeInfo {
        src: EdgeSrc::converted(construction, subtype),
        unc: force_unc || source.unc,
        alt: source.alt,
    }
}

/// Keeps only characters that survive the metadata grammar.
pub(crate) fn sanitize_subtype(s: &str) -> String {
    s.chars()
        .map(|c| {
            if c.is_alphanumeric() || c == '-' || c == '_' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

/// The lowercased case/mark marker of a node: the leftmost `case` or `mark`
/// child, with any `mwe`/`fixed` continuation joined by underscores
/// (`such as` → `such_as`). Flags a diagnostic when several markers exist.
pub(crate) fn case_marker(graph: &mut DepGraph, node: NodeId) -> Option<String> {
    let mut markers: Vec<&Edge> = graph
        .children(node, Some("case"))
        .into_iter()
        .chain(graph.children(node, Some("mark")))
        .collect();
    markers.sort_by_key(|e| e.dep);
    markers.dedup_by_key(|e| e.dep);
    let first = *markers.first()?;
    let marker_node = first.dep;
    let multiple = markers.len() > 1;

    let mut parts = vec![graph.token(marker_node)?.lemma_or_form()];
    let mut continuations: Vec<NodeId> = graph
        .children(marker_node, Some("mwe"))
        .into_iter()
        .chain(graph.children(marker_node, Some("fixed")))
        .map(|e| e.dep)
        .collect();
    continuations.sort();
    continuations.dedup();
    for c in continuations {
        if let Some(token) = graph.token(c) {
            parts.push(token.lemma_or_form());
        }
    }
    if multiple {
        graph.push_diagnostic(format!("multiple case/mark children under {}", node));
    }
    Some(sanitize_subtype(&parts.join("_")))
}

/// Whether a clause head already has an overt subject.
pub(crate) fn has_subject(graph: &DepGraph, node: NodeId) -> bool {
    graph.has_child(node, "nsubj") || graph.has_child(node, "nsubjpass")
}

/// Leftmost child edge with the given base label, as (dependent, info).
pub(crate) fn leftmost_child(
    graph: &DepGraph,
    node: NodeId,
    label: &str,
) -> Option<(NodeId, EdgeInfo)> {
    graph
        .children(node, Some(label))
        .into_iter()
        .min_by_key(|e| e.dep)
        .map(|e| (e.dep, e.info.clone()))
}

/// The subject of a clause for propagation purposes: leftmost nsubj child,
/// else leftmost nsubjpass child.
pub(crate) fn matrix_subject(graph: &DepGraph, node: NodeId) -> Option<(NodeId, EdgeInfo)> {
    leftmost_child(graph, node, "nsubj").or_else(|| leftmost_child(graph, node, "nsubjpass"))
}

/// Lemma of the leftmost `mark` child, for advcl subtyping.
pub(crate) fn mark_lemma(graph: &DepGraph, node: NodeId) -> Option<String> {
    let (dep, _) = leftmost_child(graph, node, "mark")?;
    graph
        .token(dep)
        .map(|t| sanitize_subtype(&t.lemma_or_form()))
}

/// Whether `node` has a `mark` child with lemma/form "to".
pub(crate) fn has_to_marker(graph: &DepGraph, node: NodeId) -> bool {
    graph.children(node, Some("mark")).iter().any(|e| {
        graph
            .token(e.dep)
            .map_or(false, |t| t.lemma_or_form() == "to" || t.xpos.as_deref() == Some("TO"))
    })
}

/// The coordinating word of a conjunction: lemma of the leftmost `cc` child
/// of the first conjunct, else of the second.
pub(crate) fn coordination_word(graph: &DepGraph, first: NodeId, second: NodeId) -> Option<String> {
    let (dep, _) = leftmost_child(graph, first, "cc").or_else(|| leftmost_child(graph, second, "cc"))?;
    graph
        .token(dep)
        .map(|t| sanitize_subtype(&t.lemma_or_form()))
}
