#!/usr/bin/env python3
# One-off generator for the synthetic relation-extraction corpus.
import os

OUT = "crates/core/data/relex"
os.makedirs(OUT, exist_ok=True)

sentences = []


def row(tid, form, lemma, upos, xpos, head, rel):
    return f"{tid}\t{form}\t{lemma}\t{upos}\t{xpos}\t_\t{head}\t{rel}\t_\t_"


def add(rel, e1, e2, split, construction, text, rows):
    comments = [
        f"# text = {text}",
        f"# rel = {rel}",
        f"# e1 = {e1[0]}:{e1[1]}",
        f"# e2 = {e2[0]}:{e2[1]}",
        f"# split = {split}",
    ]
    if construction:
        comments.append(f"# construction = {construction}")
    sentences.append("\n".join(comments + rows))


def active(person, verb, lemma, org, split, construction):
    add("org:founded_by", (1, 1), (3, 3), split, construction,
        f"{person} {verb} {org}", [
            row(1, person, person.lower(), "PROPN", "NNP", 2, "nsubj"),
            row(2, verb, lemma, "VERB", "VBD", 0, "root"),
            row(3, org, org.lower(), "PROPN", "NNP", 2, "dobj"),
        ])


def active_compound(person, org1, org2, split, construction):
    add("org:founded_by", (1, 1), (3, 4), split, construction,
        f"{person} founded {org1} {org2}", [
            row(1, person, person.lower(), "PROPN", "NNP", 2, "nsubj"),
            row(2, "founded", "found", "VERB", "VBD", 0, "root"),
            row(3, org1, org1.lower(), "PROPN", "NNP", 4, "compound"),
            row(4, org2, org2.lower(), "PROPN", "NNP", 2, "dobj"),
        ])


def relative(person, org, final_verb, final_lemma, split, construction):
    add("org:founded_by", (1, 1), (5, 5), split, construction,
        f"{person} , who founded {org} , {final_verb}", [
            row(1, person, person.lower(), "PROPN", "NNP", 7, "nsubj"),
            row(2, ",", ",", "PUNCT", ",", 1, "punct"),
            row(3, "who", "who", "PRON", "WP", 4, "nsubj"),
            row(4, "founded", "found", "VERB", "VBD", 1, "acl:relcl"),
            row(5, org, org.lower(), "PROPN", "NNP", 4, "dobj"),
            row(6, ",", ",", "PUNCT", ",", 1, "punct"),
            row(7, final_verb, final_lemma, "VERB", "VBD", 0, "root"),
        ])


def conjunction(person, org1, org2, split, construction):
    add("org:founded_by", (1, 1), (5, 5), split, construction,
        f"{person} founded {org1} and {org2}", [
            row(1, person, person.lower(), "PROPN", "NNP", 2, "nsubj"),
            row(2, "founded", "found", "VERB", "VBD", 0, "root"),
            row(3, org1, org1.lower(), "PROPN", "NNP", 2, "dobj"),
            row(4, "and", "and", "CCONJ", "CC", 3, "cc"),
            row(5, org2, org2.lower(), "PROPN", "NNP", 3, "conj"),
        ])


def passive(org, person, split, construction):
    add("org:founded_by", (5, 5), (1, 1), split, construction,
        f"{org} was founded by {person}", [
            row(1, org, org.lower(), "PROPN", "NNP", 3, "nsubjpass"),
            row(2, "was", "be", "AUX", "VBD", 3, "auxpass"),
            row(3, "founded", "found", "VERB", "VBN", 0, "root"),
            row(4, "by", "by", "ADP", "IN", 5, "case"),
            row(5, person, person.lower(), "PROPN", "NNP", 3, "nmod"),
        ])


def apposition(noun, person, org, split, construction):
    add("org:founded_by", (4, 4), (7, 7), split, construction,
        f"The {noun} , {person} , founded {org}", [
            row(1, "The", "the", "DET", "DT", 2, "det"),
            row(2, noun, noun, "NOUN", "NN", 6, "nsubj"),
            row(3, ",", ",", "PUNCT", ",", 2, "punct"),
            row(4, person, person.lower(), "PROPN", "NNP", 2, "appos"),
            row(5, ",", ",", "PUNCT", ",", 2, "punct"),
            row(6, "founded", "found", "VERB", "VBD", 0, "root"),
            row(7, org, org.lower(), "PROPN", "NNP", 6, "dobj"),
        ])


def title(person, profession, split, construction):
    add("per:title", (1, 1), (4, 4), split, construction,
        f"{person} is a {profession}", [
            row(1, person, person.lower(), "PROPN", "NNP", 4, "nsubj"),
            row(2, "is", "be", "AUX", "VBZ", 4, "cop"),
            row(3, "a", "a", "DET", "DT", 4, "det"),
            row(4, profession, profession, "NOUN", "NN", 0, "root"),
        ])


def employer(person, org, split, construction):
    add("per:employer", (1, 1), (4, 4), split, construction,
        f"{person} works for {org}", [
            row(1, person, person.lower(), "PROPN", "NNP", 2, "nsubj"),
            row(2, "works", "work", "VERB", "VBZ", 0, "root"),
            row(3, "for", "for", "ADP", "IN", 4, "case"),
            row(4, org, org.lower(), "PROPN", "NNP", 2, "nmod"),
        ])


def negative(p1, verb, lemma, p2, split):
    add("no_relation", (1, 1), (3, 3), split, None,
        f"{p1} {verb} {p2}", [
            row(1, p1, p1.lower(), "PROPN", "NNP", 2, "nsubj"),
            row(2, verb, lemma, "VERB", "VBD", 0, "root"),
            row(3, p2, p2.lower(), "PROPN", "NNP", 2, "dobj"),
        ])


# ---- train -----------------------------------------------------------
active("Anna", "founded", "found", "Acme", "train", "active")
active("Boris", "founded", "found", "Volga", "train", "active")
active("Chloe", "founded", "found", "Nimbus", "train", "active")
active_compound("Dmitri", "Zephyr", "Labs", "train", "active")
active("Elena", "established", "establish", "Orion", "train", "active")
active("Farid", "established", "establish", "Quasar", "train", "active")
relative("Greta", "Helix", "retired", "retire", "train", "relative")
relative("Hugo", "Ionix", "spoke", "speak", "train", "relative")
conjunction("Ivan", "Krypton", "Lumen", "train", "conjunction")
conjunction("Jolan", "Meridian", "Nadir", "train", "conjunction")
title("Carl", "teacher", "train", "copular")
title("Dina", "judge", "train", "copular")
title("Ewa", "painter", "train", "copular")
employer("Cara", "Orbis", "train", "active")
employer("Finn", "Trellis", "train", "active")
employer("Gil", "Vertex", "train", "active")
negative("Walt", "visited", "visit", "Xena", "train")
negative("Yara", "thanked", "thank", "Zane", "train")
negative("Rita", "praised", "praise", "Saul", "train")
negative("Omar", "called", "call", "Pia", "train")

# ---- dev -------------------------------------------------------------
active("Nadia", "founded", "found", "Baxter", "dev", "active")
active("Oscar", "founded", "found", "Corvid", "dev", "active")
active("Petra", "established", "establish", "Dorian", "dev", "active")
relative("Quinn", "Ember", "resigned", "resign", "dev", "relative")
conjunction("Rosa", "Fulcrum", "Gavel", "dev", "conjunction")
title("Hana", "lawyer", "dev", "copular")
title("Igor", "baker", "dev", "copular")
employer("Jana", "Helios", "dev", "active")
employer("Kai", "Imbrix", "dev", "active")
negative("Luka", "met", "meet", "Mara", "dev")
negative("Nora", "heard", "hear", "Ovid", "dev")
negative("Saskia", "saw", "see", "Quint", "dev")

# ---- test ------------------------------------------------------------
active("Sven", "founded", "found", "Juno", "test", "active")
active("Tara", "founded", "found", "Kilo", "test", "active")
active("Ugo", "founded", "found", "Lyra", "test", "active")
active("Vera", "established", "establish", "Mistral", "test", "active")
passive("Nexus", "Willa", "test", "passive")
passive("Orbit", "Xiu", "test", "passive")
apposition("visionary", "Yael", "Pharos", "test", "apposition")
apposition("pioneer", "Zara", "Quill", "test", "apposition")
conjunction("Abel", "Rondo", "Sable", "test", "conjunction")
conjunction("Beth", "Talus", "Umbra", "test", "conjunction")
relative("Cora", "Vanta", "retired", "retire", "test", "relative")
relative("Dian", "Wavel", "spoke", "speak", "test", "relative")
title("Uma", "nurse", "test", "copular")
title("Viggo", "tailor", "test", "copular")
title("Wren", "barista", "test", "copular")
employer("Xeno", "Argo", "test", "active")
employer("Yuri", "Brant", "test", "active")
employer("Zoe", "Cirrus", "test", "active")
negative("Aldo", "greeted", "greet", "Bea", "test")
negative("Cleo", "heard", "hear", "Dov", "test")
negative("Eli", "passed", "pass", "Fay", "test")
negative("Gus", "met", "meet", "Hale", "test")

with open(f"{OUT}/corpus.conllu", "w") as f:
    f.write("\n\n".join(sentences) + "\n\n")

with open(f"{OUT}/triggers.tsv", "w") as f:
    f.write("# trigger words per relation: relation<TAB>word[,word...]\n")
    f.write("org:founded_by\tfounded,established\n")
    f.write("per:employer\tworks\n")

print(f"{len(sentences)} sentences")
