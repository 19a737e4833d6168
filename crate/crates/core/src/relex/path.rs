//! Entity heads and shortest undirected paths over the enhanced layer.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::conllu::NodeId;
use crate::graph::DepGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Up,
    Down,
}

/// One traversed edge: its true direction, its label (subtype kept,
/// metadata already absent from graph labels), and the node arrived at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub direction: Direction,
    pub label: String,
    pub node: NodeId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EntityHead {
    pub node: NodeId,
    /// More than one token of the span had an external head.
    pub ambiguous: bool,
}

/// The syntactic head of a span: the token whose basic head lies outside
/// the span (the root counts as outside). Ties break to the rightmost.
pub fn entity_head(graph: &DepGraph, span: (u32, u32)) -> Option<EntityHead> {
    let inside = |h: u32| h >= span.0 && h <= span.1;
    let mut external: Vec<NodeId> = Vec::new();
    for i in span.0..=span.1 {
        let id = NodeId::word(i);
        let token = graph.token(id)?;
        match token.basic_head {
            Some(h) if inside(h) && h != 0 => {}
            _ => external.push(id),
        }
    }
    let node = *external.last()?;
    Some(EntityHead {
        node,
        ambiguous: external.len() > 1,
    })
}

type Move = (NodeId, Direction, String);

/// Undirected neighbor moves of a node, deduplicated over parallel
/// provenance records.
fn moves(graph: &DepGraph, from: NodeId) -> BTreeSet<Move> {
    let mut out = BTreeSet::new();
    for edge in graph.enhanced() {
        if edge.head == from {
            out.insert((edge.dep, Direction::Down, edge.label.clone()));
        } else if edge.dep == from {
            out.insert((edge.head, Direction::Up, edge.label.clone()));
        }
    }
    out
}

/// Minimal-length undirected path from `a` to `b` over the enhanced layer.
/// Among equal-length paths the one with the lexicographically smallest
/// (label, direction, node) step sequence wins, making the result
/// deterministic. `a == b` yields the empty path; `None` means the
/// enhanced graph does not connect the two nodes.
pub fn shortest_path(graph: &DepGraph, a: NodeId, b: NodeId) -> Option<Vec<Step>> {
    if a == b {
        return Some(Vec::new());
    }
    // BFS distances from a
    let mut dist: BTreeMap<NodeId, usize> = BTreeMap::new();
    dist.insert(a, 0);
    let mut queue = VecDeque::from([a]);
    while let Some(current) = queue.pop_front() {
        let d = dist[&current];
        for (next, _, _) in moves(graph, current) {
            if !dist.contains_key(&next) {
                dist.insert(next, d + 1);
                queue.push_back(next);
            }
        }
    }
    let target = *dist.get(&b)?;

    // walk forward along strictly-decreasing remaining distance, taking the
    // smallest step key first; the first complete path found is minimal
    fn descend(
        graph: &DepGraph,
        dist: &BTreeMap<NodeId, usize>,
        b: NodeId,
        current: NodeId,
        remaining: usize,
        acc: &mut Vec<Step>,
        best: &mut Option<Vec<Step>>,
    ) {
        if current == b {
            let key = |steps: &Vec<Step>| -> Vec<(String, Direction, NodeId)> {
                steps
                    .iter()
                    .map(|s| (s.label.clone(), s.direction, s.node))
                    .collect()
            };
            if best.as_ref().map_or(true, |cur| key(acc) < key(cur)) {
                *best = Some(acc.clone());
            }
            return;
        }
        if remaining == 0 {
            return;
        }
        let next_dist = dist[&current] + 1;
        let mut ordered: Vec<Move> = moves(graph, current)
            .into_iter()
            // shortest-path discipline: distance from a must increase
            .filter(|(next, _, _)| dist.get(next) == Some(&next_dist))
            .collect();
        ordered.sort_by(|x, y| (&x.2, x.1, x.0).cmp(&(&y.2, y.1, y.0)));
        for (next, direction, label) in ordered {
            acc.push(Step {
                direction,
                label,
                node: next,
            });
            descend(graph, dist, b, next, remaining - 1, acc, best);
            acc.pop();
            if best.is_some() {
                // the first path found under sorted expansion is the
                // lexicographic minimum; stop exploring
                return;
            }
        }
    }

    let mut best = None;
    descend(graph, &dist, b, a, target, &mut Vec::new(), &mut best);
    best
}
