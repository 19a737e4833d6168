//! Scoring a pattern set on a test split, and the pattern-economy curve.

use std::collections::{BTreeMap, BTreeSet};

use super::filter::dev_precision;
use super::pattern::{pattern_matches, render_pattern, Pattern};
use super::{Prepared, NO_RELATION};

pub(super) fn f1(precision: f64, recall: f64) -> f64 {
    if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    }
}

/// Precision/recall/F1 as percentages, plus the raw counts behind them.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RelationScore {
    pub tp: u32,
    pub fp: u32,
    pub fn_: u32,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

impl RelationScore {
    fn from_counts(tp: u32, fp: u32, fn_: u32) -> Self {
        let precision = if tp + fp == 0 {
            0.0
        } else {
            tp as f64 / (tp + fp) as f64
        };
        let recall = if tp + fn_ == 0 {
            0.0
        } else {
            tp as f64 / (tp + fn_) as f64
        };
        RelationScore {
            tp,
            fp,
            fn_,
            precision: precision * 100.0,
            recall: recall * 100.0,
            f1: f1(precision, recall) * 100.0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct EvalReport {
    pub representation: String,
    pub pattern_count: usize,
    pub per_relation: BTreeMap<String, RelationScore>,
    pub micro: RelationScore,
}

/// Predicted relation for one instance: among matching patterns, the one
/// with the highest dev precision wins; ties go to the lexicographically
/// first relation, then pattern. No match predicts `no_relation`.
fn predict(patterns: &[Pattern], prepared: &Prepared) -> String {
    let mut best: Option<&Pattern> = None;
    for pattern in patterns {
        if !pattern_matches(
            pattern,
            &prepared.graph,
            prepared.instance.e1,
            prepared.instance.e2,
        ) {
            continue;
        }
        let better = match best {
            None => true,
            Some(current) => {
                let (a, b) = (dev_precision(pattern), dev_precision(current));
                a > b
                    || (a == b
                        && (pattern.relation.as_str(), render_pattern(pattern))
                            < (current.relation.as_str(), render_pattern(current)))
            }
        };
        if better {
            best = Some(pattern);
        }
    }
    best.map(|p| p.relation.clone())
        .unwrap_or_else(|| NO_RELATION.to_string())
}

/// Micro precision/recall/F1 over the gold-positive instances, plus a
/// per-relation breakdown. A predicted positive on a `no_relation`
/// instance counts against precision.
pub fn evaluate(patterns: &[Pattern], test: &[Prepared], representation: &str) -> EvalReport {
    let mut relations: BTreeSet<String> = test
        .iter()
        .map(|p| p.instance.relation.clone())
        .filter(|r| r != NO_RELATION)
        .collect();
    relations.extend(patterns.iter().map(|p| p.relation.clone()));

    let predictions: Vec<String> = test.iter().map(|p| predict(patterns, p)).collect();

    let mut per_relation = BTreeMap::new();
    let (mut micro_tp, mut micro_fp, mut micro_fn) = (0u32, 0u32, 0u32);
    for relation in &relations {
        let (mut tp, mut fp, mut fn_) = (0u32, 0u32, 0u32);
        for (prepared, predicted) in test.iter().zip(&predictions) {
            let gold = &prepared.instance.relation == relation;
            let pred = predicted == relation;
            match (gold, pred) {
                (true, true) => tp += 1,
                (false, true) => fp += 1,
                (true, false) => fn_ += 1,
                (false, false) => {}
            }
        }
        micro_tp += tp;
        micro_fp += fp;
        micro_fn += fn_;
        per_relation.insert(relation.clone(), RelationScore::from_counts(tp, fp, fn_));
    }

    EvalReport {
        representation: representation.to_string(),
        pattern_count: patterns.len(),
        per_relation,
        micro: RelationScore::from_counts(micro_tp, micro_fp, micro_fn),
    }
}

/// Test instances a pattern recalls: gold instances of its own relation it
/// matches.
fn coverage(pattern: &Pattern, test: &[Prepared]) -> BTreeSet<usize> {
    test.iter()
        .enumerate()
        .filter(|(_, p)| {
            p.instance.relation == pattern.relation
                && pattern_matches(pattern, &p.graph, p.instance.e1, p.instance.e2)
        })
        .map(|(i, _)| i)
        .collect()
}

/// Greedy set-cover ordering of the patterns by marginal recall gain
/// (ties: higher dev precision, then lexicographic). Emits cumulative
/// recall (percent over gold positives) at every pattern count 1..=N.
pub fn economy_curve(patterns: &[Pattern], test: &[Prepared]) -> Vec<(usize, f64)> {
    let gold_positive = test
        .iter()
        .filter(|p| p.instance.relation != NO_RELATION)
        .count();
    if gold_positive == 0 {
        return Vec::new();
    }
    let coverages: Vec<BTreeSet<usize>> =
        patterns.iter().map(|p| coverage(p, test)).collect();

    let mut remaining: Vec<usize> = (0..patterns.len()).collect();
    let mut covered: BTreeSet<usize> = BTreeSet::new();
    let mut series = Vec::with_capacity(patterns.len());
    while !remaining.is_empty() {
        let chosen = *remaining
            .iter()
            .min_by(|a, b| {
                let gain_a = coverages[**a].difference(&covered).count();
                let gain_b = coverages[**b].difference(&covered).count();
                gain_b
                    .cmp(&gain_a) // larger gain first
                    .then(
                        dev_precision(&patterns[**b])
                            .partial_cmp(&dev_precision(&patterns[**a]))
                            .unwrap(),
                    )
                    .then_with(|| {
                        (patterns[**a].relation.as_str(), render_pattern(&patterns[**a])).cmp(&(
                            patterns[**b].relation.as_str(),
                            render_pattern(&patterns[**b]),
                        ))
                    })
            })
            .unwrap();
        remaining.retain(|i| *i != chosen);
        covered.extend(coverages[chosen].iter().copied());
        series.push((
            series.len() + 1,
            covered.len() as f64 / gold_positive as f64 * 100.0,
        ));
    }
    series
}
