//! Word lists driving the lexically conditioned conversions. Defaults are
//! compiled in; each list can be overridden by a file in a lexicon
//! directory (one lemma per line, `#` comments).

use std::collections::BTreeSet;
use std::io;
use std::path::Path;

const EVIDENTIAL: &str = include_str!("../data/lexicons/evidential.txt");
const REPORTED: &str = include_str!("../data/lexicons/reported_speech.txt");
const ASPECTUAL: &str = include_str!("../data/lexicons/aspectual.txt");
const INDEXICALS: &str = include_str!("../data/lexicons/indexicals.txt");
const ELABORATION: &str = include_str!("../data/lexicons/elaboration_markers.txt");

#[derive(Debug, Clone)]
pub struct Lexicons {
    pub evidential_verbs: BTreeSet<String>,
    pub reported_speech_verbs: BTreeSet<String>,
    pub aspectual_verbs: BTreeSet<String>,
    pub indexicals: BTreeSet<String>,
    pub elaboration_markers: BTreeSet<String>,
}

fn parse_list(text: &str) -> BTreeSet<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| l.to_lowercase())
        .collect()
}

impl Default for Lexicons {
    fn default() -> Self {
        Lexicons {
            evidential_verbs: parse_list(EVIDENTIAL),
            reported_speech_verbs: parse_list(REPORTED),
            aspectual_verbs: parse_list(ASPECTUAL),
            indexicals: parse_list(INDEXICALS),
            elaboration_markers: parse_list(ELABORATION),
        }
    }
}

impl Lexicons {
    /// Loads lexicons from a directory, falling back to the compiled-in
    /// default for any file that is absent.
    pub fn from_dir(dir: &Path) -> io::Result<Self> {
        let mut lexicons = Lexicons::default();
        let slots: [(&str, &mut BTreeSet<String>); 5] = [
            ("evidential.txt", &mut lexicons.evidential_verbs),
            ("reported_speech.txt", &mut lexicons.reported_speech_verbs),
            ("aspectual.txt", &mut lexicons.aspectual_verbs),
            ("indexicals.txt", &mut lexicons.indexicals),
            ("elaboration_markers.txt", &mut lexicons.elaboration_markers),
        ];
        for (file, slot) in slots {
            let path = dir.join(file);
            if path.exists() {
                *slot = parse_list(&std::fs::read_to_string(path)?);
            }
        }
        Ok(lexicons)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_non_empty_and_lowercase() {
        let lex = Lexicons::default();
        for set in [
            &lex.evidential_verbs,
            &lex.reported_speech_verbs,
            &lex.aspectual_verbs,
            &lex.indexicals,
            &lex.elaboration_markers,
        ] {
            assert!(!set.is_empty());
            assert!(set.iter().all(|w| *w == w.to_lowercase()));
        }
        assert!(lex.evidential_verbs.contains("seem"));
        assert!(lex.aspectual_verbs.contains("start"));
        assert!(lex.elaboration_markers.contains("such_as"));
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let set = parse_list("# a comment\nseem\n\nappear # trailing\n");
        assert_eq!(set, BTreeSet::from(["seem".into(), "appear".into()]));
    }
}
