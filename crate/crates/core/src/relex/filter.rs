//! Dev-set statistics and the pattern filter: patterns that hurt the
//! relation's dev F1 are dropped, lowest-precision candidates first.

use super::eval::f1;
use super::pattern::{pattern_matches, render_pattern_line, Pattern};
use super::Prepared;

/// Fills dev tp/fp for every pattern: tp counts dev instances of the
/// pattern's own relation it matches, fp the matched instances of any
/// other gold label (no_relation included).
pub fn score_patterns(patterns: &mut [Pattern], dev: &[Prepared]) {
    for pattern in patterns.iter_mut() {
        let (mut tp, mut fp) = (0, 0);
        for p in dev {
            if !pattern_matches(pattern, &p.graph, p.instance.e1, p.instance.e2) {
                continue;
            }
            if p.instance.relation == pattern.relation {
                tp += 1;
            } else {
                fp += 1;
            }
        }
        pattern.stats.dev_tp = tp;
        pattern.stats.dev_fp = fp;
    }
}

pub fn dev_precision(pattern: &Pattern) -> f64 {
    let hits = pattern.stats.dev_tp + pattern.stats.dev_fp;
    if hits == 0 {
        0.0
    } else {
        pattern.stats.dev_tp as f64 / hits as f64
    }
}

/// Relation-level dev F1 of a kept set (given as pattern indices): an
/// instance counts as predicted iff any kept pattern of the relation
/// matches it.
fn relation_f1(relation: &str, kept: &[usize], matches: &[Vec<bool>], dev: &[Prepared]) -> f64 {
    let (mut tp, mut fp, mut fn_) = (0u32, 0u32, 0u32);
    for (j, p) in dev.iter().enumerate() {
        let predicted = kept.iter().any(|i| matches[*i][j]);
        let gold = p.instance.relation == relation;
        match (gold, predicted) {
            (true, true) => tp += 1,
            (false, true) => fp += 1,
            (true, false) => fn_ += 1,
            (false, false) => {}
        }
    }
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
    f1(precision, recall)
}

/// Single deterministic pass per relation: candidates ordered by ascending
/// dev precision (ties: fewer true positives, then the rendered line), a
/// candidate is removed iff its removal does not decrease the relation's
/// dev F1. Returns the kept patterns and any warnings.
pub fn filter_patterns(patterns: Vec<Pattern>, dev: &[Prepared]) -> (Vec<Pattern>, Vec<String>) {
    if dev.is_empty() {
        return (
            patterns,
            vec!["empty dev split: keeping every pattern".to_string()],
        );
    }
    let mut patterns = patterns;
    score_patterns(&mut patterns, dev);

    let matches: Vec<Vec<bool>> = patterns
        .iter()
        .map(|pattern| {
            dev.iter()
                .map(|p| pattern_matches(pattern, &p.graph, p.instance.e1, p.instance.e2))
                .collect()
        })
        .collect();

    let mut relations: Vec<String> = patterns.iter().map(|p| p.relation.clone()).collect();
    relations.sort();
    relations.dedup();

    let mut keep: Vec<bool> = vec![true; patterns.len()];
    for relation in &relations {
        let mut order: Vec<usize> = (0..patterns.len())
            .filter(|i| &patterns[*i].relation == relation)
            .collect();
        order.sort_by(|a, b| {
            let pa = dev_precision(&patterns[*a]);
            let pb = dev_precision(&patterns[*b]);
            pa.partial_cmp(&pb)
                .unwrap()
                .then(patterns[*a].stats.dev_tp.cmp(&patterns[*b].stats.dev_tp))
                .then_with(|| {
                    render_pattern_line(&patterns[*a]).cmp(&render_pattern_line(&patterns[*b]))
                })
        });
        for candidate in order {
            let current: Vec<usize> = (0..patterns.len())
                .filter(|i| keep[*i] && &patterns[*i].relation == relation)
                .collect();
            let without: Vec<usize> = current
                .iter()
                .copied()
                .filter(|i| *i != candidate)
                .collect();
            let with_f1 = relation_f1(relation, &current, &matches, dev);
            let without_f1 = relation_f1(relation, &without, &matches, dev);
            if without_f1 >= with_f1 {
                keep[candidate] = false;
            }
        }
    }

    let kept: Vec<Pattern> = patterns
        .into_iter()
        .enumerate()
        .filter(|(i, _)| keep[*i])
        .map(|(_, p)| p)
        .collect();
    (kept, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::super::{load_dataset, prepare, TriggerLexicon};
    use super::*;
    use crate::rules::{ConvertConfig, Mode};

    fn dataset() -> Vec<Prepared> {
        // four dev instances: two founded, one employer, one negative
        let text = "\
# rel = org:founded_by
# e1 = 1:1
# e2 = 3:3
# split = dev
1\tAnna\tanna\tPROPN\tNNP\t_\t2\tnsubj\t_\t_
2\tfounded\tfound\tVERB\tVBD\t_\t0\troot\t_\t_
3\tAcme\tacme\tPROPN\tNNP\t_\t2\tdobj\t_\t_

# rel = org:founded_by
# e1 = 1:1
# e2 = 3:3
# split = dev
1\tBoris\tboris\tPROPN\tNNP\t_\t2\tnsubj\t_\t_
2\tfounded\tfound\tVERB\tVBD\t_\t0\troot\t_\t_
3\tVolga\tvolga\tPROPN\tNNP\t_\t2\tdobj\t_\t_

# rel = per:employer
# e1 = 1:1
# e2 = 4:4
# split = dev
1\tCara\tcara\tPROPN\tNNP\t_\t2\tnsubj\t_\t_
2\tworks\twork\tVERB\tVBZ\t_\t0\troot\t_\t_
3\tfor\tfor\tADP\tIN\t_\t4\tcase\t_\t_
4\tOrion\torion\tPROPN\tNNP\t_\t2\tnmod\t_\t_

# rel = no_relation
# e1 = 1:1
# e2 = 3:3
# split = dev
1\tWalt\twalt\tPROPN\tNNP\t_\t2\tnsubj\t_\t_
2\tvisited\tvisit\tVERB\tVBD\t_\t0\troot\t_\t_
3\tXena\txena\tPROPN\tNNP\t_\t2\tdobj\t_\t_
";
        let instances = load_dataset(text).unwrap();
        prepare(&instances, &ConvertConfig::with_mode(Mode::Ud)).unwrap()
    }

    fn make(relation: &str, line: &str) -> Pattern {
        let mut p = super::super::parse_pattern_line(&format!(
            "{}\t{}\t1\t0\t0\tfull",
            relation, line
        ))
        .unwrap();
        p.stats.support = 1;
        p
    }

    #[test]
    fn pure_noise_is_removed_and_clean_coverage_kept() {
        let dev = dataset();
        let patterns = vec![
            // matches every nsubj+dobj pair, including the negative: fp > 0
            make("org:founded_by", "E1 <nsubj >dobj E2"),
            // anchored: clean founded coverage
            make("org:founded_by", "E1 <nsubj \"found\" >dobj E2"),
            // never fires on dev
            make("org:founded_by", "E1 <nsubj \"dissolve\" >dobj E2"),
            // clean employer coverage
            make("per:employer", "E1 <nsubj \"work\" >nmod E2"),
        ];
        let (kept, warnings) = filter_patterns(patterns, &dev);
        assert!(warnings.is_empty());
        let lines: Vec<String> = kept.iter().map(render_pattern_line).collect();
        assert_eq!(kept.len(), 2, "{:?}", lines);
        assert!(lines.iter().any(|l| l.contains("\"found\"")));
        assert!(lines.iter().any(|l| l.contains("\"work\"")));
    }

    #[test]
    fn scoring_counts_tp_and_fp() {
        let dev = dataset();
        let mut patterns = vec![make("org:founded_by", "E1 <nsubj >dobj E2")];
        score_patterns(&mut patterns, &dev);
        assert_eq!(patterns[0].stats.dev_tp, 2);
        assert_eq!(patterns[0].stats.dev_fp, 1);
        assert!((dev_precision(&patterns[0]) - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn empty_dev_keeps_everything_with_a_warning() {
        let patterns = vec![make("r", "E1 <nsubj E2")];
        let (kept, warnings) = filter_patterns(patterns, &[]);
        assert_eq!(kept.len(), 1);
        assert_eq!(warnings.len(), 1);
    }

    #[test]
    fn trigger_lexicon_reaches_the_filter_via_acquisition() {
        // guards the plumbing assumption that acquisition stats survive
        let dev = dataset();
        let mut triggers = TriggerLexicon::default();
        triggers.insert("org:founded_by", ["founded".to_string()]);
        let (patterns, skipped) = super::super::acquire_all(&dev, &triggers);
        assert_eq!(skipped, 0);
        // two founded instances deduplicate into one supported pattern
        let founded: Vec<_> = patterns
            .iter()
            .filter(|p| p.relation == "org:founded_by")
            .collect();
        assert_eq!(founded.len(), 1);
        assert_eq!(founded[0].stats.support, 2);
    }
}
