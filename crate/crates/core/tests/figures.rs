//! Figure fidelity: every worked example converts to exactly its expected
//! enhanced edge set (added edges present with correct src/unc/alt, demoted
//! edges absent, retained edges intact).

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use bart_core::conllu::{parse_conllu, serialize_conllu};
use bart_core::{convert_sentence, ConvertConfig, Mode, SeedMode};

fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/figures")
}

fn fixture_names() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(fixtures_dir())
        .unwrap()
        .filter_map(|entry| {
            let name = entry.unwrap().file_name().into_string().unwrap();
            name.strip_suffix(".expected.conllu").map(|s| s.to_string())
        })
        .collect();
    names.sort();
    names
}

fn debug_edges(conllu: &str) -> BTreeSet<String> {
    let sentences = parse_conllu(conllu).unwrap();
    let mut edges = BTreeSet::new();
    for s in &sentences {
        for t in &s.tokens {
            for d in &t.deps {
                edges.insert(format!("{}:{} -> {}", d.head, d.label, t.id));
            }
        }
    }
    edges
}

fn convert_fixture(name: &str) -> (String, String) {
    let dir = fixtures_dir();
    let input = std::fs::read_to_string(dir.join(format!("{}.conllu", name))).unwrap();
    let expected = std::fs::read_to_string(dir.join(format!("{}.expected.conllu", name))).unwrap();
    let sentences = parse_conllu(&input).unwrap();
    let config = ConvertConfig::with_mode(Mode::Bart);
    let mut converted = Vec::new();
    for s in &sentences {
        let (out, outcome) = convert_sentence(s, SeedMode::Basic, &config).unwrap();
        assert!(
            outcome.converged,
            "{}: pipeline hit the iteration cap",
            name
        );
        converted.push(out);
    }
    (serialize_conllu(&converted).unwrap(), expected)
}

#[test]
fn every_figure_converts_to_its_expected_graph() {
    let names = fixture_names();
    assert!(names.len() >= 30, "fixture suite incomplete: {:?}", names);
    let mut failures = Vec::new();
    for name in &names {
        let (actual, expected) = convert_fixture(name);
        if actual != expected {
            let got = debug_edges(&actual);
            let want = debug_edges(&expected);
            let missing: Vec<_> = want.difference(&got).cloned().collect();
            let extra: Vec<_> = got.difference(&want).cloned().collect();
            failures.push(format!(
                "{}: missing {:?}, extra {:?}\n--- got ---\n{}",
                name, missing, extra, actual
            ));
        }
    }
    assert!(failures.is_empty(), "\n{}", failures.join("\n"));
}

#[test]
fn conversion_is_idempotent_on_its_own_output() {
    for name in fixture_names() {
        let (first, _) = convert_fixture(&name);
        let sentences = parse_conllu(&first).unwrap();
        let config = ConvertConfig::with_mode(Mode::Bart);
        let mut again = Vec::new();
        for s in &sentences {
            let (out, _) = convert_sentence(s, SeedMode::Auto, &config).unwrap();
            again.push(out);
        }
        let second = serialize_conllu(&again).unwrap();
        assert_eq!(first, second, "{}: second conversion changed the output", name);
    }
}

#[test]
fn disabling_all_rules_is_the_identity_on_deps() {
    let dir = fixtures_dir();
    let input = std::fs::read_to_string(dir.join("fig1_neo.conllu")).unwrap();
    let sentence = &parse_conllu(&input).unwrap()[0];
    let config = ConvertConfig::with_mode(Mode::Ud);
    let (out, _) = convert_sentence(sentence, SeedMode::Basic, &config).unwrap();
    // every DEPS cell mirrors HEAD/DEPREL
    for token in &out.tokens {
        assert_eq!(token.deps.len(), 1);
        let dep = &token.deps[0];
        assert_eq!(dep.head.to_string(), token.basic_head.unwrap().to_string());
        if token.basic_head != Some(0) {
            assert_eq!(&dep.label, token.basic_deprel.as_ref().unwrap());
        }
    }
}
