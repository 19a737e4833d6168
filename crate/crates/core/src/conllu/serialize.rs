//! Deterministic CoNLL-U serialization. Output uses LF line endings and one
//! blank line after every sentence.

use super::{NodeId, Sentence, Token};
use crate::error::ConlluError;

/// Serializes a document. Refuses sentences that violate the sentence
/// invariants, naming the violated one.
pub fn serialize_conllu(sentences: &[Sentence]) -> Result<String, ConlluError> {
    let mut out = String::new();
    for sentence in sentences {
        out.push_str(&serialize_sentence(sentence)?);
    }
    Ok(out)
}

/// Serializes one sentence, trailing blank line included.
pub fn serialize_sentence(sentence: &Sentence) -> Result<String, ConlluError> {
    validate(sentence)?;
    let mut out = String::new();
    for comment in &sentence.comments {
        out.push_str(comment);
        out.push('\n');
    }
    for token in &sentence.tokens {
        render_token(&mut out, token);
    }
    out.push('\n');
    Ok(out)
}

fn opt(value: &Option<String>) -> &str {
    value.as_deref().unwrap_or("_")
}

fn join(segments: &[String]) -> String {
    if segments.is_empty() {
        "_".to_string()
    } else {
        segments.join("|")
    }
}

fn render_token(out: &mut String, token: &Token) {
    let head = match token.basic_head {
        Some(h) => h.to_string(),
        None => "_".to_string(),
    };
    let deps = if token.deps.is_empty() {
        "_".to_string()
    } else {
        let mut cells = token.deps.clone();
        cells.sort_by(|a, b| a.head.cmp(&b.head).then_with(|| a.label.cmp(&b.label)));
        cells
            .iter()
            .map(|d| format!("{}:{}", d.head, d.label))
            .collect::<Vec<_>>()
            .join("|")
    };
    out.push_str(&format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
        token.id,
        token.form,
        opt(&token.lemma),
        opt(&token.upos),
        opt(&token.xpos),
        join(&token.feats),
        head,
        opt(&token.basic_deprel),
        deps,
        join(&token.misc),
    ));
}

fn validate(sentence: &Sentence) -> Result<(), ConlluError> {
    let invalid = |msg: String| Err(ConlluError::InvalidSentence(msg));
    if sentence.tokens.is_empty() {
        return invalid("a sentence must have at least one token".into());
    }

    let mut expected_surface = 1u32;
    let mut prev: Option<NodeId> = None;
    for token in &sentence.tokens {
        if let Some(p) = prev {
            if token.id <= p {
                return invalid(format!("token ids out of order at `{}`", token.id));
            }
        }
        prev = Some(token.id);
        match token.id {
            NodeId::Word(i) => {
                if i != expected_surface {
                    return invalid(format!(
                        "surface token ids must be consecutive: expected {}, found {}",
                        expected_surface, i
                    ));
                }
                expected_surface += 1;
                if token.basic_head.is_none() {
                    return invalid(format!("surface token {} lacks a basic head", i));
                }
            }
            NodeId::Null(_, minor) => {
                if minor == 0 {
                    return invalid("null node minor index must be >= 1".into());
                }
                if token.basic_head.is_some() {
                    return invalid(format!("null node {} carries a basic head", token.id));
                }
            }
        }
        if token.form.contains('\t') || token.form.contains('\n') {
            return invalid(format!("form of `{}` contains tab or newline", token.id));
        }
    }

    let n = expected_surface - 1;
    let roots = sentence
        .tokens
        .iter()
        .filter(|t| t.basic_head == Some(0))
        .count();
    if roots != 1 {
        return invalid(format!(
            "exactly one surface token must have head 0, found {}",
            roots
        ));
    }
    for token in &sentence.tokens {
        if let Some(h) = token.basic_head {
            if h > n {
                return invalid(format!(
                    "basic head {} of `{}` does not exist",
                    h, token.id
                ));
            }
        }
        for dep in &token.deps {
            let ok = match dep.head {
                NodeId::Word(0) => dep.label == "root" || dep.label.starts_with("root@"),
                h => h != token.id && sentence.tokens.iter().any(|t| t.id == h),
            };
            if !ok {
                return invalid(format!(
                    "DEPS head `{}:{}` of `{}` does not exist",
                    dep.head, dep.label, token.id
                ));
            }
        }
    }
    Ok(())
}
