//! Labeled relation instances and the trigger lexicon.
//!
//! The dataset is ordinary CoNLL-U with per-sentence comment metadata:
//! `# rel = <label>`, `# e1 = i:j`, `# e2 = i:j`,
//! `# split = train|dev|test`, and an optional `# construction = <tag>`
//! used for subset analyses.

use std::collections::{BTreeMap, BTreeSet};

use crate::conllu::{parse_conllu, Sentence};
use crate::error::RelexError;

pub const NO_RELATION: &str = "no_relation";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Split {
    Train,
    Dev,
    Test,
}

impl Split {
    pub fn parse(s: &str) -> Option<Split> {
        match s {
            "train" => Some(Split::Train),
            "dev" => Some(Split::Dev),
            "test" => Some(Split::Test),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Split::Train => "train",
            Split::Dev => "dev",
            Split::Test => "test",
        }
    }
}

/// One labeled sentence: a relation name plus the indices of the two
/// entity mentions.
#[derive(Debug, Clone)]
pub struct RelationInstance {
    pub sentence: Sentence,
    /// Inclusive surface-token range of the first entity.
    pub e1: (u32, u32),
    pub e2: (u32, u32),
    pub relation: String,
    pub split: Split,
    pub construction: Option<String>,
}

fn parse_span(s: &str) -> Option<(u32, u32)> {
    let (a, b) = s.split_once(':')?;
    let a = a.trim().parse().ok()?;
    let b = b.trim().parse().ok()?;
    (a >= 1 && a <= b).then_some((a, b))
}

fn spans_overlap(a: (u32, u32), b: (u32, u32)) -> bool {
    a.0 <= b.1 && b.0 <= a.1
}

/// Parses a dataset file into instances. Every sentence must carry the
/// rel/e1/e2/split comments.
pub fn load_dataset(text: &str) -> Result<Vec<RelationInstance>, RelexError> {
    let sentences =
        parse_conllu(text).map_err(|e| RelexError::BadInstance(e.to_string()))?;
    let mut instances = Vec::with_capacity(sentences.len());
    for (idx, sentence) in sentences.into_iter().enumerate() {
        let field = |key: &str| {
            sentence
                .comment_value(key)
                .map(|v| v.to_string())
                .ok_or_else(|| {
                    RelexError::BadInstance(format!("sentence {}: missing `# {} =`", idx + 1, key))
                })
        };
        let relation = field("rel")?;
        let bad_span = |key: &str| {
            RelexError::BadInstance(format!("sentence {}: bad span for {}", idx + 1, key))
        };
        let e1 = parse_span(&field("e1")?).ok_or_else(|| bad_span("e1"))?;
        let e2 = parse_span(&field("e2")?).ok_or_else(|| bad_span("e2"))?;
        let split = Split::parse(&field("split")?).ok_or_else(|| {
            RelexError::BadInstance(format!("sentence {}: unknown split", idx + 1))
        })?;
        let n = sentence.surface_len() as u32;
        if e1.1 > n || e2.1 > n {
            return Err(RelexError::BadInstance(format!(
                "sentence {}: span past the last token",
                idx + 1
            )));
        }
        if spans_overlap(e1, e2) {
            return Err(RelexError::BadInstance(format!(
                "sentence {}: overlapping entity spans",
                idx + 1
            )));
        }
        instances.push(RelationInstance {
            construction: sentence.comment_value("construction").map(|s| s.to_string()),
            sentence,
            e1,
            e2,
            relation,
            split,
        });
    }
    Ok(instances)
}

/// Instances of one split; errors if the dataset has none.
pub fn split_of<'a>(
    instances: &'a [RelationInstance],
    split: Split,
) -> Result<Vec<&'a RelationInstance>, RelexError> {
    let subset: Vec<&RelationInstance> =
        instances.iter().filter(|i| i.split == split).collect();
    if subset.is_empty() {
        return Err(RelexError::MissingSplit(split.name().to_string()));
    }
    Ok(subset)
}

/// Relation-specific trigger words, lowercased. File format: one relation
/// per line, `relation<TAB>word[,word...]`, `#` comments.
#[derive(Debug, Clone, Default)]
pub struct TriggerLexicon {
    map: BTreeMap<String, BTreeSet<String>>,
}

impl TriggerLexicon {
    pub fn words(&self, relation: &str) -> Option<&BTreeSet<String>> {
        self.map.get(relation)
    }

    pub fn insert(&mut self, relation: &str, words: impl IntoIterator<Item = String>) {
        self.map
            .entry(relation.to_string())
            .or_default()
            .extend(words.into_iter().map(|w| w.to_lowercase()));
    }
}

pub fn parse_trigger_lexicon(text: &str) -> Result<TriggerLexicon, RelexError> {
    let mut lexicon = TriggerLexicon::default();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((relation, words)) = line.split_once('\t') else {
            return Err(RelexError::BadTriggerLine(
                idx + 1,
                "expected `relation<TAB>word[,word...]`".into(),
            ));
        };
        let words: Vec<String> = words
            .split(',')
            .map(|w| w.trim().to_lowercase())
            .filter(|w| !w.is_empty())
            .collect();
        if words.is_empty() {
            return Err(RelexError::BadTriggerLine(idx + 1, "no words".into()));
        }
        lexicon.insert(relation.trim(), words);
    }
    Ok(lexicon)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dataset_comments_become_instance_fields() {
        let text = "\
# rel = org:founded_by
# e1 = 1:1
# e2 = 3:4
# split = train
# construction = active
1\tAnna\tanna\tPROPN\tNNP\t_\t2\tnsubj\t_\t_
2\tfounded\tfound\tVERB\tVBD\t_\t0\troot\t_\t_
3\tAcme\tacme\tPROPN\tNNP\t_\t4\tcompound\t_\t_
4\tCorp\tcorp\tPROPN\tNNP\t_\t2\tdobj\t_\t_
";
        let instances = load_dataset(text).unwrap();
        assert_eq!(instances.len(), 1);
        let i = &instances[0];
        assert_eq!(i.relation, "org:founded_by");
        assert_eq!(i.e1, (1, 1));
        assert_eq!(i.e2, (3, 4));
        assert_eq!(i.split, Split::Train);
        assert_eq!(i.construction.as_deref(), Some("active"));
    }

    #[test]
    fn overlapping_spans_are_rejected() {
        let text = "\
# rel = x
# e1 = 1:2
# e2 = 2:2
# split = train
1\ta\ta\tX\tX\t_\t2\tdep\t_\t_
2\tb\tb\tX\tX\t_\t0\troot\t_\t_
";
        assert!(load_dataset(text).is_err());
    }

    #[test]
    fn trigger_lines_parse_and_lowercase() {
        let lex = parse_trigger_lexicon(
            "# comment\norg:founded_by\tFounded, found ,establish\nper:employer\twork\n",
        )
        .unwrap();
        let w = lex.words("org:founded_by").unwrap();
        assert!(w.contains("founded") && w.contains("establish"));
        assert!(parse_trigger_lexicon("badline\n").is_err());
    }
}
