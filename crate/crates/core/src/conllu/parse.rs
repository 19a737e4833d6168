//! Strict and lenient parsing of CoNLL-U text.

use super::{Dep, NodeId, Sentence, Token};
use crate::error::ConlluError;

/// A sentence the lenient parser gave up on.
#[derive(Debug, Clone)]
pub struct SkippedSentence {
    /// Line number of the first line of the sentence.
    pub line: usize,
    pub reason: String,
}

/// Parses an entire CoNLL-U document. Strict: the first malformed line
/// aborts with its line number and reason.
pub fn parse_conllu(text: &str) -> Result<Vec<Sentence>, ConlluError> {
    let mut sentences = Vec::new();
    for block in blocks(text) {
        sentences.push(parse_block(&block)?);
    }
    Ok(sentences)
}

/// Parses a document, skipping malformed sentences instead of failing.
/// Returns the good sentences plus a record per skipped one.
pub fn parse_conllu_lenient(text: &str) -> (Vec<Sentence>, Vec<SkippedSentence>) {
    let mut sentences = Vec::new();
    let mut skipped = Vec::new();
    for block in blocks(text) {
        let first_line = block.first().map(|(n, _)| *n).unwrap_or(0);
        match parse_block(&block) {
            Ok(s) => sentences.push(s),
            Err(e) => skipped.push(SkippedSentence {
                line: first_line,
                reason: e.to_string(),
            }),
        }
    }
    (sentences, skipped)
}

/// Splits the input into blank-line separated blocks of (line number, line).
fn blocks(text: &str) -> Vec<Vec<(usize, String)>> {
    let mut out = Vec::new();
    let mut current: Vec<(usize, String)> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if !current.is_empty() {
                out.push(std::mem::take(&mut current));
            }
        } else {
            current.push((idx + 1, line.to_string()));
        }
    }
    if !current.is_empty() {
        out.push(current);
    }
    out
}

fn opt_column(s: &str) -> Option<String> {
    if s == "_" {
        None
    } else {
        Some(s.to_string())
    }
}

fn segments(s: &str) -> Vec<String> {
    if s == "_" {
        Vec::new()
    } else {
        s.split('|').map(|p| p.to_string()).collect()
    }
}

fn parse_block(lines: &[(usize, String)]) -> Result<Sentence, ConlluError> {
    let mut sentence = Sentence::default();
    let mut token_lines = Vec::new();

    for (line_no, line) in lines {
        if line.starts_with('#') {
            if !sentence.tokens.is_empty() {
                return Err(ConlluError::at(*line_no, "comment after token lines"));
            }
            sentence.comments.push(line.clone());
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 10 {
            return Err(ConlluError::at(
                *line_no,
                format!("expected 10 tab-separated columns, found {}", cols.len()),
            ));
        }
        if cols[0].contains('-') {
            return Err(ConlluError::at(
                *line_no,
                "multiword token ranges are not supported",
            ));
        }
        let id: NodeId = cols[0]
            .parse()
            .map_err(|e: ConlluError| ConlluError::at(*line_no, e.to_string()))?;
        if let NodeId::Word(0) = id {
            return Err(ConlluError::at(*line_no, "token id must be >= 1"));
        }

        let basic_head = match cols[6] {
            "_" => None,
            h => Some(h.parse::<u32>().map_err(|_| {
                ConlluError::at(*line_no, format!("non-numeric head `{}`", h))
            })?),
        };
        if id.is_null() && basic_head.is_some() {
            return Err(ConlluError::at(*line_no, "null node with a basic head"));
        }
        if !id.is_null() && basic_head.is_none() {
            return Err(ConlluError::at(*line_no, "surface token without a head"));
        }

        let mut deps = Vec::new();
        if cols[8] != "_" {
            for cell in cols[8].split('|') {
                let Some((head, label)) = cell.split_once(':') else {
                    return Err(ConlluError::at(
                        *line_no,
                        format!("DEPS cell `{}` lacks a `:` separator", cell),
                    ));
                };
                let head: NodeId = head
                    .parse()
                    .map_err(|e: ConlluError| ConlluError::at(*line_no, e.to_string()))?;
                if label.is_empty() {
                    return Err(ConlluError::at(*line_no, "empty DEPS label"));
                }
                deps.push(Dep {
                    head,
                    label: label.to_string(),
                });
            }
        }

        let token = Token {
            id,
            form: cols[1].to_string(),
            lemma: opt_column(cols[2]),
            upos: opt_column(cols[3]),
            xpos: opt_column(cols[4]),
            feats: segments(cols[5]),
            basic_head,
            basic_deprel: opt_column(cols[7]),
            deps,
            misc: segments(cols[9]),
        };
        token_lines.push(*line_no);
        sentence.tokens.push(token);
    }

    if sentence.tokens.is_empty() {
        let line = lines.first().map(|(n, _)| *n).unwrap_or(0);
        return Err(ConlluError::at(line, "sentence without token lines"));
    }
    validate(&sentence, &token_lines)?;
    Ok(sentence)
}

/// Sentence-level checks: consecutive surface ids, id ordering, and no
/// dangling head references.
fn validate(sentence: &Sentence, token_lines: &[usize]) -> Result<(), ConlluError> {
    let mut expected_surface = 1u32;
    let mut prev: Option<NodeId> = None;
    for (token, line) in sentence.tokens.iter().zip(token_lines) {
        if let Some(p) = prev {
            if token.id <= p {
                return Err(ConlluError::at(
                    *line,
                    format!("token id `{}` out of order", token.id),
                ));
            }
        }
        prev = Some(token.id);
        if let NodeId::Word(i) = token.id {
            if i != expected_surface {
                return Err(ConlluError::at(
                    *line,
                    format!("expected surface id {}, found {}", expected_surface, i),
                ));
            }
            expected_surface += 1;
        }
    }

    let n = expected_surface - 1;
    let exists = |id: NodeId| sentence.tokens.iter().any(|t| t.id == id);
    for (token, line) in sentence.tokens.iter().zip(token_lines) {
        if let Some(h) = token.basic_head {
            if h > n {
                return Err(ConlluError::at(
                    *line,
                    format!("head {} points past the last token ({})", h, n),
                ));
            }
            if NodeId::Word(h) == token.id {
                return Err(ConlluError::at(*line, "token is its own head"));
            }
        }
        for dep in &token.deps {
            let ok = match dep.head {
                NodeId::Word(0) => dep.label == "root" || dep.label.starts_with("root@"),
                h => exists(h) && h != token.id,
            };
            if !ok {
                return Err(ConlluError::at(
                    *line,
                    format!("dangling DEPS head `{}:{}`", dep.head, dep.label),
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const DRIVING: &str = "\
# text = You shouldn't text while driving
1\tYou\tyou\tPRON\tPRP\t_\t3\tnsubj\t_\t_
2\tshouldn't\tshould\tAUX\tMD\t_\t3\taux\t_\t_
3\ttext\ttext\tVERB\tVB\t_\t0\troot\t_\t_
4\twhile\twhile\tSCONJ\tIN\t_\t5\tmark\t_\t_
5\tdriving\tdrive\tVERB\tVBG\t_\t3\tadvcl\t_\t_
";

    #[test]
    fn parses_the_driving_sentence_field_by_field() {
        let sentences = parse_conllu(DRIVING).unwrap();
        assert_eq!(sentences.len(), 1);
        let s = &sentences[0];
        assert_eq!(s.tokens.len(), 5);
        assert_eq!(s.comments, vec!["# text = You shouldn't text while driving"]);

        let root: Vec<_> = s.tokens.iter().filter(|t| t.basic_head == Some(0)).collect();
        assert_eq!(root.len(), 1);
        assert_eq!(root[0].form, "text");

        let you = &s.tokens[0];
        assert_eq!(you.id, NodeId::word(1));
        assert_eq!(you.form, "You");
        assert_eq!(you.lemma.as_deref(), Some("you"));
        assert_eq!(you.upos.as_deref(), Some("PRON"));
        assert_eq!(you.xpos.as_deref(), Some("PRP"));
        assert!(you.feats.is_empty());
        assert_eq!(you.basic_head, Some(3));
        assert_eq!(you.basic_deprel.as_deref(), Some("nsubj"));
        assert!(you.deps.is_empty());
        assert!(you.misc.is_empty());

        let driving = &s.tokens[4];
        assert_eq!(driving.form, "driving");
        assert_eq!(driving.basic_deprel.as_deref(), Some("advcl"));
    }

    #[test]
    fn empty_input_yields_no_sentences() {
        assert!(parse_conllu("").unwrap().is_empty());
        assert!(parse_conllu("\n\n\n").unwrap().is_empty());
    }

    #[test]
    fn wrong_column_count_reports_the_line() {
        let text = "1\tYou\tyou\tPRON\n";
        let err = parse_conllu(text).unwrap_err();
        assert_eq!(
            err,
            ConlluError::at(1, "expected 10 tab-separated columns, found 4")
        );
    }

    #[test]
    fn dangling_head_is_rejected() {
        let text = "1\tHi\thi\tINTJ\tUH\t_\t7\tdiscourse\t_\t_\n";
        let err = parse_conllu(text).unwrap_err();
        assert!(err.to_string().contains("points past the last token"));
    }

    #[test]
    fn lenient_mode_skips_bad_sentences_and_reports_them() {
        let text = "\
1\tOk\tok\tINTJ\tUH\t_\t0\troot\t_\t_

1\tbad\tline

1\tFine\tfine\tINTJ\tUH\t_\t0\troot\t_\t_
";
        let (sentences, skipped) = parse_conllu_lenient(text);
        assert_eq!(sentences.len(), 2);
        assert_eq!(skipped.len(), 1);
        assert_eq!(skipped[0].line, 3);
    }

    #[test]
    fn null_node_rows_parse() {
        let text = "\
1\tTomorrow\ttomorrow\tNOUN\tNN\t_\t4\tnsubj\t_\t_
2\tis\tbe\tVERB\tVBZ\t_\t4\tcop\t_\t_
2.1\tSTATE\t_\t_\t_\t_\t_\t_\t0:root\t_
3\tanother\tanother\tDET\tDT\t_\t4\tdet\t_\t_
4\tday\tday\tNOUN\tNN\t_\t0\troot\t2.1:xcomp@src=cop\t_
";
        let sentences = parse_conllu(text).unwrap();
        let s = &sentences[0];
        assert_eq!(s.tokens[2].id, NodeId::null(2, 1));
        assert_eq!(s.tokens[2].form, "STATE");
        assert_eq!(s.tokens[2].deps[0].head, NodeId::word(0));
        assert_eq!(s.tokens[4].deps[0].head, NodeId::null(2, 1));
    }
}
