//! Pattern-based relation extraction over converted graphs: acquire
//! dependency-path patterns from a train split, filter them on dev, score
//! on test, and measure pattern economy.

mod eval;
mod filter;
mod instance;
mod path;
mod pattern;

pub use eval::{economy_curve, evaluate, EvalReport, RelationScore};
pub use filter::{dev_precision, filter_patterns, score_patterns};
pub use instance::{
    load_dataset, parse_trigger_lexicon, split_of, RelationInstance, Split, TriggerLexicon,
    NO_RELATION,
};
pub use path::{entity_head, shortest_path, Direction, EntityHead, Step};
pub use pattern::{
    acquire_pattern, parse_pattern_line, pattern_matches, render_pattern_line, Pattern,
    PatternStats, PatternStep,
};

use crate::error::GraphError;
use crate::graph::{DepGraph, SeedMode};
use crate::rules::{run_pipeline, ConvertConfig};

/// An instance together with its graph under one representation.
pub struct Prepared {
    pub instance: RelationInstance,
    pub graph: DepGraph,
}

/// Converts every instance's sentence with the given configuration.
pub fn prepare(
    instances: &[RelationInstance],
    config: &ConvertConfig,
) -> Result<Vec<Prepared>, GraphError> {
    instances
        .iter()
        .map(|instance| {
            let mut graph = DepGraph::from_sentence(&instance.sentence, SeedMode::Basic)?;
            run_pipeline(&mut graph, config);
            Ok(Prepared {
                instance: instance.clone(),
                graph,
            })
        })
        .collect()
}

/// Acquires one pattern per train instance, deduplicates equal patterns and
/// sums their support. No-path instances are skipped and counted.
pub fn acquire_all(train: &[Prepared], triggers: &TriggerLexicon) -> (Vec<Pattern>, usize) {
    let mut patterns: Vec<Pattern> = Vec::new();
    let mut skipped = 0usize;
    for prepared in train {
        if prepared.instance.relation == NO_RELATION {
            continue;
        }
        match acquire_pattern(&prepared.instance, &prepared.graph, triggers) {
            Some(pattern) => match patterns.iter_mut().find(|p| **p == pattern) {
                Some(existing) => existing.stats.support += pattern.stats.support,
                None => patterns.push(pattern),
            },
            None => skipped += 1,
        }
    }
    patterns.sort_by(|a, b| {
        a.relation
            .cmp(&b.relation)
            .then_with(|| render_pattern_line(a).cmp(&render_pattern_line(b)))
    });
    (patterns, skipped)
}
