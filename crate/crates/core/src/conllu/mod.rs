//! CoNLL-U reading and writing, including null nodes (`i.j` ids) and the
//! `@`-separated edge metadata used in the DEPS column.

mod parse;
mod serialize;
pub mod extra;

pub use parse::{parse_conllu, parse_conllu_lenient, SkippedSentence};
pub use serialize::{serialize_conllu, serialize_sentence};

use std::fmt;
use std::str::FromStr;

use crate::error::ConlluError;

/// Identifier of a node within one sentence.
///
/// Surface tokens carry plain integer ids (`1`, `2`, ...). Nodes added by a
/// conversion (STATE nodes, copy nodes) carry decimal ids `i.j` and sort
/// between `i` and `i+1`. `Word(0)` only ever appears as the head of the
/// `0:root` DEPS cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeId {
    Word(u32),
    Null(u32, u32),
}

impl NodeId {
    pub fn word(i: u32) -> Self {
        NodeId::Word(i)
    }

    pub fn null(major: u32, minor: u32) -> Self {
        debug_assert!(minor >= 1, "null node minor index must be >= 1");
        NodeId::Null(major, minor)
    }

    /// Sort key: a null node `i.j` lies strictly between `i` and `i+1`.
    fn key(self) -> (u32, u32) {
        match self {
            NodeId::Word(i) => (i, 0),
            NodeId::Null(i, j) => (i, j),
        }
    }

    pub fn is_null(self) -> bool {
        matches!(self, NodeId::Null(..))
    }

    /// The surface index this id is anchored at.
    pub fn major(self) -> u32 {
        match self {
            NodeId::Word(i) => i,
            NodeId::Null(i, _) => i,
        }
    }
}

impl PartialOrd for NodeId {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NodeId {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeId::Word(i) => write!(f, "{}", i),
            NodeId::Null(i, j) => write!(f, "{}.{}", i, j),
        }
    }
}

impl FromStr for NodeId {
    type Err = ConlluError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ConlluError::BadNodeId(s.to_string());
        match s.split_once('.') {
            None => Ok(NodeId::Word(s.parse().map_err(|_| bad())?)),
            Some((major, minor)) => {
                let major: u32 = major.parse().map_err(|_| bad())?;
                let minor: u32 = minor.parse().map_err(|_| bad())?;
                if minor == 0 {
                    return Err(bad());
                }
                Ok(NodeId::Null(major, minor))
            }
        }
    }
}

/// One enhanced-dependency cell of the DEPS column: head id plus the full
/// label string (subtype and `@` metadata included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dep {
    pub head: NodeId,
    pub label: String,
}

/// One CoNLL-U row: a surface word or an added null node.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Token {
    pub id: NodeId,
    pub form: String,
    pub lemma: Option<String>,
    pub upos: Option<String>,
    pub xpos: Option<String>,
    /// FEATS segments, kept verbatim (`Number=Sing`, ...).
    pub feats: Vec<String>,
    /// HEAD column; `Some(0)` marks the basic-tree root, `None` a null node.
    pub basic_head: Option<u32>,
    pub basic_deprel: Option<String>,
    /// DEPS column, one entry per enhanced head.
    pub deps: Vec<Dep>,
    /// MISC segments, kept verbatim.
    pub misc: Vec<String>,
}

impl Default for NodeId {
    fn default() -> Self {
        NodeId::Word(0)
    }
}

impl Token {
    pub fn new(id: NodeId, form: &str) -> Self {
        Token {
            id,
            form: form.to_string(),
            ..Default::default()
        }
    }

    /// Lemma if present, else the lowercased form. Rules and pattern
    /// anchors match on this.
    pub fn lemma_or_form(&self) -> String {
        match &self.lemma {
            Some(l) => l.to_lowercase(),
            None => self.form.to_lowercase(),
        }
    }

    pub fn misc_value(&self, key: &str) -> Option<&str> {
        self.misc.iter().find_map(|seg| {
            let (k, v) = seg.split_once('=')?;
            (k == key).then_some(v)
        })
    }

    pub fn is_verbal(&self) -> bool {
        if let Some(u) = &self.upos {
            if u == "VERB" || u == "AUX" {
                return true;
            }
        }
        match &self.xpos {
            Some(x) => x.starts_with('V') || x == "MD",
            None => false,
        }
    }

    pub fn is_adjectival(&self) -> bool {
        self.upos.as_deref() == Some("ADJ")
            || self.xpos.as_deref().map_or(false, |x| x.starts_with("JJ"))
    }

    pub fn is_nominal(&self) -> bool {
        if let Some(u) = &self.upos {
            if matches!(u.as_str(), "NOUN" | "PROPN" | "PRON" | "NUM") {
                return true;
            }
        }
        match &self.xpos {
            Some(x) => x.starts_with('N') || x.starts_with("PRP") || x == "CD",
            None => false,
        }
    }

    pub fn is_gerund(&self) -> bool {
        self.xpos.as_deref() == Some("VBG")
    }

    pub fn is_past_participle(&self) -> bool {
        self.xpos.as_deref() == Some("VBN")
    }
}

/// An ordered sentence of tokens plus its comment lines (kept verbatim,
/// including the leading `#`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Sentence {
    pub comments: Vec<String>,
    pub tokens: Vec<Token>,
}

impl Sentence {
    /// Number of surface tokens.
    pub fn surface_len(&self) -> usize {
        self.tokens.iter().filter(|t| !t.id.is_null()).count()
    }

    pub fn token(&self, id: NodeId) -> Option<&Token> {
        self.tokens.iter().find(|t| t.id == id)
    }

    /// Value of a `# key = value` comment.
    pub fn comment_value(&self, key: &str) -> Option<&str> {
        self.comments.iter().find_map(|c| {
            let rest = c.strip_prefix('#')?.trim_start();
            let (k, v) = rest.split_once('=')?;
            (k.trim() == key).then(|| v.trim())
        })
    }
}

/// Rewrites a UD v2 label into the v1 inventory the conversion rules are
/// written against (`obj` → `dobj`, `obl` → `nmod`, `nsubj:pass` →
/// `nsubjpass`, and the related `:pass` family). Unknown labels pass
/// through unchanged.
pub fn normalize_v2_label(label: &str) -> String {
    let (base, subtype) = match label.split_once(':') {
        Some((b, s)) => (b, Some(s)),
        None => (label, None),
    };
    let renamed = match (base, subtype) {
        ("obj", _) => "dobj".to_string(),
        ("obl", Some("agent")) => return "nmod:by".to_string(),
        ("obl", _) => "nmod".to_string(),
        ("nsubj", Some("pass")) => return "nsubjpass".to_string(),
        ("csubj", Some("pass")) => return "csubjpass".to_string(),
        ("aux", Some("pass")) => return "auxpass".to_string(),
        ("fixed", _) => "mwe".to_string(),
        _ => base.to_string(),
    };
    match subtype {
        Some(s) => format!("{}:{}", renamed, s),
        None => renamed,
    }
}

/// Applies [`normalize_v2_label`] to DEPREL and every DEPS cell of a
/// sentence, in place.
pub fn normalize_v2_sentence(sentence: &mut Sentence) {
    for token in &mut sentence.tokens {
        if let Some(rel) = &token.basic_deprel {
            token.basic_deprel = Some(normalize_v2_label(rel));
        }
        for dep in &mut token.deps {
            // metadata suffix, if any, survives the rename untouched
            match dep.label.split_once('@') {
                Some((label, meta)) => {
                    dep.label = format!("{}@{}", normalize_v2_label(label), meta)
                }
                None => dep.label = normalize_v2_label(&dep.label),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_id_ordering_places_null_nodes_between_words() {
        let mut ids = vec![
            NodeId::word(2),
            NodeId::null(1, 2),
            NodeId::word(1),
            NodeId::null(1, 1),
        ];
        ids.sort();
        assert_eq!(
            ids,
            vec![
                NodeId::word(1),
                NodeId::null(1, 1),
                NodeId::null(1, 2),
                NodeId::word(2),
            ]
        );
    }

    #[test]
    fn node_id_parses_and_displays() {
        let id: NodeId = "5.1".parse().unwrap();
        assert_eq!(id, NodeId::null(5, 1));
        assert_eq!(id.to_string(), "5.1");
        assert!("5.0".parse::<NodeId>().is_err());
        assert!("x".parse::<NodeId>().is_err());
    }

    #[test]
    fn v2_labels_normalize_to_v1() {
        assert_eq!(normalize_v2_label("obj"), "dobj");
        assert_eq!(normalize_v2_label("obl"), "nmod");
        assert_eq!(normalize_v2_label("obl:by"), "nmod:by");
        assert_eq!(normalize_v2_label("obl:agent"), "nmod:by");
        assert_eq!(normalize_v2_label("nsubj:pass"), "nsubjpass");
        assert_eq!(normalize_v2_label("nsubj"), "nsubj");
        assert_eq!(normalize_v2_label("acl:relcl"), "acl:relcl");
    }
}
