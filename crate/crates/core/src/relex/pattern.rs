//! Directed, optionally lexicalized dependency-path templates.
//!
//! Surface syntax, one pattern per step left to right:
//! `E1 <nsubj "founded" >dobj >compound E2` — `<` walks up an edge, `>`
//! walks down, and a quoted anchor constrains the node arrived at. Anchors
//! only ever sit on intermediate nodes, never on the endpoints.

use std::collections::BTreeSet;

use crate::conllu::{NodeId, Token};
use crate::error::RelexError;
use crate::graph::DepGraph;

use super::instance::{RelationInstance, TriggerLexicon};
use super::path::{entity_head, shortest_path, Direction};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternStep {
    pub direction: Direction,
    pub label: String,
    /// Lemma constraint on the node this step arrives at.
    pub anchor: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PatternStats {
    pub support: u32,
    pub dev_tp: u32,
    pub dev_fp: u32,
}

#[derive(Debug, Clone)]
pub struct Pattern {
    pub relation: String,
    pub steps: Vec<PatternStep>,
    /// False when a trigger word anchored the path, true when every
    /// intermediate node is lexicalized.
    pub fully_lexicalized: bool,
    pub stats: PatternStats,
}

/// Patterns compare equal on relation and steps alone.
impl PartialEq for Pattern {
    fn eq(&self, other: &Self) -> bool {
        self.relation == other.relation && self.steps == other.steps
    }
}
impl Eq for Pattern {}

fn anchor_satisfied(token: &Token, anchor: &str) -> bool {
    token.lemma_or_form() == anchor || token.form.to_lowercase() == anchor
}

/// The trigger entry matching a token, if any: entries are checked in
/// sorted order against the lowercased form and lemma.
fn matched_trigger(token: &Token, triggers: &BTreeSet<String>) -> Option<String> {
    let form = token.form.to_lowercase();
    let lemma = token.lemma_or_form();
    triggers
        .iter()
        .find(|t| **t == form || **t == lemma)
        .cloned()
}

/// Builds the extraction pattern for one labeled instance, or None when
/// the enhanced graph does not connect the two entity heads.
pub fn acquire_pattern(
    instance: &RelationInstance,
    graph: &DepGraph,
    triggers: &TriggerLexicon,
) -> Option<Pattern> {
    let e1 = entity_head(graph, instance.e1)?.node;
    let e2 = entity_head(graph, instance.e2)?.node;
    let path = shortest_path(graph, e1, e2)?;
    if path.is_empty() {
        return None;
    }

    let intermediates: Vec<NodeId> = path[..path.len() - 1].iter().map(|s| s.node).collect();
    let empty = BTreeSet::new();
    let relation_triggers = triggers.words(&instance.relation).unwrap_or(&empty);
    // leftmost trigger-bearing intermediate node, in token order
    let mut trigger_hit: Option<(NodeId, String)> = None;
    let mut ordered = intermediates.clone();
    ordered.sort();
    for node in ordered {
        if let Some(token) = graph.token(node) {
            if let Some(entry) = matched_trigger(token, relation_triggers) {
                trigger_hit = Some((node, entry));
                break;
            }
        }
    }

    let steps: Vec<PatternStep> = path
        .iter()
        .enumerate()
        .map(|(idx, step)| {
            let is_endpoint = idx + 1 == path.len();
            let anchor = if is_endpoint {
                None
            } else {
                match &trigger_hit {
                    Some((node, entry)) if *node == step.node => Some(entry.clone()),
                    Some(_) => None,
                    None => graph.token(step.node).map(|t| t.lemma_or_form()),
                }
            };
            PatternStep {
                direction: step.direction,
                label: step.label.clone(),
                anchor,
            }
        })
        .collect();

    Some(Pattern {
        relation: instance.relation.clone(),
        steps,
        fully_lexicalized: trigger_hit.is_none(),
        stats: PatternStats {
            support: 1,
            ..Default::default()
        },
    })
}

/// True iff some walk from e1's head realizes every step — direction,
/// label, anchors — and ends on e2's head. Parallel edges are all explored.
pub fn pattern_matches(
    pattern: &Pattern,
    graph: &DepGraph,
    e1: (u32, u32),
    e2: (u32, u32),
) -> bool {
    let Some(start) = entity_head(graph, e1) else {
        return false;
    };
    let Some(goal) = entity_head(graph, e2) else {
        return false;
    };
    let mut frontier: BTreeSet<NodeId> = BTreeSet::from([start.node]);
    for step in &pattern.steps {
        let mut next: BTreeSet<NodeId> = BTreeSet::new();
        for node in &frontier {
            for edge in graph.enhanced() {
                let candidate = match step.direction {
                    Direction::Down if edge.head == *node => edge.dep,
                    Direction::Up if edge.dep == *node => edge.head,
                    _ => continue,
                };
                if edge.label != step.label {
                    continue;
                }
                if let Some(anchor) = &step.anchor {
                    match graph.token(candidate) {
                        Some(t) if anchor_satisfied(t, anchor) => {}
                        _ => continue,
                    }
                }
                next.insert(candidate);
            }
        }
        if next.is_empty() {
            return false;
        }
        frontier = next;
    }
    frontier.contains(&goal.node)
}

/// Renders the `E1 ... E2` surface syntax.
pub fn render_pattern(pattern: &Pattern) -> String {
    let mut out = String::from("E1");
    for step in &pattern.steps {
        let arrow = match step.direction {
            Direction::Up => '<',
            Direction::Down => '>',
        };
        out.push_str(&format!(" {}{}", arrow, step.label));
        if let Some(anchor) = &step.anchor {
            out.push_str(&format!(" \"{}\"", anchor));
        }
    }
    out.push_str(" E2");
    out
}

/// One pattern per line: relation, surface pattern, support, dev tp/fp and
/// the lexicalization flag, tab separated.
pub fn render_pattern_line(pattern: &Pattern) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}",
        pattern.relation,
        render_pattern(pattern),
        pattern.stats.support,
        pattern.stats.dev_tp,
        pattern.stats.dev_fp,
        if pattern.fully_lexicalized { "full" } else { "trigger" },
    )
}

pub fn parse_pattern_line(line: &str) -> Result<Pattern, RelexError> {
    let bad = |reason: &str| RelexError::BadPattern(line.to_string(), reason.to_string());
    let cols: Vec<&str> = line.split('\t').collect();
    if cols.len() != 6 {
        return Err(bad("expected 6 tab-separated columns"));
    }
    let mut steps = Vec::new();
    let mut tokens = cols[1].split_whitespace().peekable();
    if tokens.next() != Some("E1") {
        return Err(bad("pattern must start with E1"));
    }
    while let Some(tok) = tokens.next() {
        if tok == "E2" {
            if tokens.next().is_some() {
                return Err(bad("trailing content after E2"));
            }
            break;
        }
        let (direction, label) = match tok.split_at(1) {
            ("<", rest) => (Direction::Up, rest),
            (">", rest) => (Direction::Down, rest),
            _ => return Err(bad("step must start with < or >")),
        };
        if label.is_empty() {
            return Err(bad("empty step label"));
        }
        let anchor = match tokens.peek() {
            Some(next) if next.starts_with('"') => {
                let quoted = tokens.next().unwrap();
                let inner = quoted
                    .strip_prefix('"')
                    .and_then(|s| s.strip_suffix('"'))
                    .ok_or_else(|| bad("unterminated anchor quote"))?;
                Some(inner.to_string())
            }
            _ => None,
        };
        steps.push(PatternStep {
            direction,
            label: label.to_string(),
            anchor,
        });
    }
    if steps.is_empty() {
        return Err(bad("pattern has no steps"));
    }
    if steps.last().unwrap().anchor.is_some() {
        return Err(bad("anchors are not allowed on the E2 endpoint"));
    }
    let parse_u32 = |s: &str, what: &str| {
        s.parse::<u32>()
            .map_err(|_| bad(&format!("bad {} count", what)))
    };
    Ok(Pattern {
        relation: cols[0].to_string(),
        steps,
        fully_lexicalized: match cols[5] {
            "full" => true,
            "trigger" => false,
            _ => return Err(bad("lexicalization flag must be full or trigger")),
        },
        stats: PatternStats {
            support: parse_u32(cols[2], "support")?,
            dev_tp: parse_u32(cols[3], "tp")?,
            dev_fp: parse_u32(cols[4], "fp")?,
        },
    })
}
