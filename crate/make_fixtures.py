#!/usr/bin/env python3
# One-off generator for the figure-fidelity fixtures (hand-derived expectations).
import os

FIX = "crates/core/tests/fixtures/figures"
os.makedirs(FIX, exist_ok=True)

# Each fixture: (name, text, rows, expected_deps)
# rows: (id, form, lemma, upos, xpos, head, deprel)
# expected_deps: dict id -> deps string (already sorted); STATE rows added via "null_rows"
FIXTURES = [
    ("ex01_let", "Let my people go!", [
        (1, "Let", "let", "VERB", "VB", 0, "root"),
        (2, "my", "my", "PRON", "PRP$", 3, "nmod:poss"),
        (3, "people", "people", "NOUN", "NNS", 1, "dobj"),
        (4, "go!", "go", "VERB", "VB", 1, "xcomp"),
    ], {
        1: "0:root", 2: "3:nmod:poss", 3: "1:dobj|4:nsubj@src=xcomp", 4: "1:xcomp",
    }, []),
    ("ex02a_neon_god", "The neon god they made", [
        (1, "The", "the", "DET", "DT", 3, "det"),
        (2, "neon", "neon", "NOUN", "NN", 3, "compound"),
        (3, "god", "god", "NOUN", "NN", 0, "root"),
        (4, "they", "they", "PRON", "PRP", 5, "nsubj"),
        (5, "made", "make", "VERB", "VBD", 3, "acl:relcl"),
    ], {
        1: "3:det", 2: "3:compound|5:dobj@src=compound;unc",
        3: "0:root|5:dobj@src=acl_reduced", 4: "5:nsubj", 5: "3:acl:relcl",
    }, []),
    ("ex02b_vision", "A vision softly creeping", [
        (1, "A", "a", "DET", "DT", 2, "det"),
        (2, "vision", "vision", "NOUN", "NN", 0, "root"),
        (3, "softly", "softly", "ADV", "RB", 4, "advmod"),
        (4, "creeping", "creep", "VERB", "VBG", 2, "acl"),
    ], {
        1: "2:det", 2: "0:root|4:nsubj@src=acl_participle", 3: "4:advmod", 4: "2:acl",
    }, []),
    ("ex03_text_driving", "You shouldn't text while driving", [
        (1, "You", "you", "PRON", "PRP", 3, "nsubj"),
        (2, "shouldn't", "should", "AUX", "MD", 3, "aux"),
        (3, "text", "text", "VERB", "VB", 0, "root"),
        (4, "while", "while", "SCONJ", "IN", 5, "mark"),
        (5, "driving", "drive", "VERB", "VBG", 3, "advcl"),
    ], {
        1: "3:nsubj|5:nsubj@src=advcl_while", 2: "3:aux", 3: "0:root",
        4: "5:mark", 5: "3:advcl:while",
    }, []),
    ("unc_trusting", "She acted, trusting her instincts", [
        (1, "She", "she", "PRON", "PRP", 2, "nsubj"),
        (2, "acted,", "act", "VERB", "VBD", 0, "root"),
        (3, "trusting", "trust", "VERB", "VBG", 2, "dep"),
        (4, "her", "her", "PRON", "PRP$", 5, "nmod:poss"),
        (5, "instincts", "instinct", "NOUN", "NNS", 3, "dobj"),
    ], {
        1: "2:nsubj|3:nsubj@src=dep;unc", 2: "0:root", 3: "2:dep",
        4: "5:nmod:poss", 5: "3:dobj",
    }, []),
    ("alt_saw_driving", "You saw me while driving, Sue saw Sam after returning", [
        (1, "You", "you", "PRON", "PRP", 2, "nsubj"),
        (2, "saw", "see", "VERB", "VBD", 0, "root"),
        (3, "me", "me", "PRON", "PRP", 2, "dobj"),
        (4, "while", "while", "SCONJ", "IN", 5, "mark"),
        (5, "driving,", "drive", "VERB", "VBG", 2, "advcl"),
        (6, "Sue", "sue", "PROPN", "NNP", 7, "nsubj"),
        (7, "saw", "see", "VERB", "VBD", 2, "parataxis"),
        (8, "Sam", "sam", "PROPN", "NNP", 7, "dobj"),
        (9, "after", "after", "SCONJ", "IN", 10, "mark"),
        (10, "returning", "return", "VERB", "VBG", 7, "advcl"),
    ], {
        1: "2:nsubj|5:nsubj@src=advcl_while;alt=0", 2: "0:root",
        3: "2:dobj|5:nsubj@src=advcl_while;alt=0", 4: "5:mark", 5: "2:advcl:while",
        6: "7:nsubj|10:nsubj@src=advcl_after;alt=1", 7: "2:parataxis",
        8: "7:dobj|10:nsubj@src=advcl_after;alt=1", 9: "10:mark", 10: "7:advcl:after",
    }, []),
    ("ex04_et", "E.T., the Extraterrestrial, phones home", [
        (1, "E.T.,", "e.t.", "PROPN", "NNP", 4, "nsubj"),
        (2, "the", "the", "DET", "DT", 3, "det"),
        (3, "Extraterrestrial,", "extraterrestrial", "PROPN", "NNP", 1, "appos"),
        (4, "phones", "phone", "VERB", "VBZ", 0, "root"),
        (5, "home", "home", "ADV", "RB", 4, "advmod"),
    ], {
        1: "4:nsubj", 2: "3:det", 3: "1:appos|4:nsubj@src=appos",
        4: "0:root", 5: "4:advmod",
    }, []),
    ("ex05_wolves", "I was taught and raised by wolves", [
        (1, "I", "I", "PRON", "PRP", 3, "nsubjpass"),
        (2, "was", "be", "AUX", "VBD", 3, "auxpass"),
        (3, "taught", "teach", "VERB", "VBN", 0, "root"),
        (4, "and", "and", "CCONJ", "CC", 3, "cc"),
        (5, "raised", "raise", "VERB", "VBN", 3, "conj"),
        (6, "by", "by", "ADP", "IN", 7, "case"),
        (7, "wolves", "wolf", "NOUN", "NNS", 3, "nmod"),
    ], {
        1: "3:dobj@src=passive|3:nsubjpass|5:dobj@src=passive|5:nsubjpass@src=conj_and",
        2: "3:auxpass", 3: "0:root", 4: "3:cc", 5: "3:conj", 6: "7:case",
        7: "3:nmod:by|3:nsubj@src=passive|5:nmod:by@src=conj_and;unc|5:nsubj@src=passive;unc",
    }, []),
    ("ex06_parents", "My father and mother met here", [
        (1, "My", "my", "PRON", "PRP$", 2, "nmod:poss"),
        (2, "father", "father", "NOUN", "NN", 5, "nsubj"),
        (3, "and", "and", "CCONJ", "CC", 2, "cc"),
        (4, "mother", "mother", "NOUN", "NN", 2, "conj"),
        (5, "met", "meet", "VERB", "VBD", 0, "root"),
        (6, "here", "here", "ADV", "RB", 5, "advmod"),
    ], {
        1: "2:nmod:poss|4:nmod:poss@src=conj_and;unc", 2: "5:nsubj", 3: "2:cc",
        4: "2:conj|5:nsubj@src=conj_and", 5: "0:root", 6: "5:advmod",
    }, []),
    ("ex07_fruits", "I enjoy fruits such as apples", [
        (1, "I", "I", "PRON", "PRP", 2, "nsubj"),
        (2, "enjoy", "enjoy", "VERB", "VBP", 0, "root"),
        (3, "fruits", "fruit", "NOUN", "NNS", 2, "dobj"),
        (4, "such", "such", "ADJ", "JJ", 6, "case"),
        (5, "as", "as", "ADP", "IN", 4, "mwe"),
        (6, "apples", "apple", "NOUN", "NNS", 3, "nmod"),
    ], {
        1: "2:nsubj", 2: "0:root", 3: "2:dobj", 4: "6:case", 5: "4:mwe",
        6: "2:dobj@src=nmod_such_as|3:nmod:such_as",
    }, []),
    ("ex19_people_like", "People like you should feel lucky", [
        (1, "People", "people", "NOUN", "NNS", 5, "nsubj"),
        (2, "like", "like", "ADP", "IN", 3, "case"),
        (3, "you", "you", "PRON", "PRP", 1, "nmod"),
        (4, "should", "should", "AUX", "MD", 5, "aux"),
        (5, "feel", "feel", "VERB", "VB", 0, "root"),
        (6, "lucky", "lucky", "ADJ", "JJ", 5, "xcomp"),
    ], {
        1: "5:nsubj", 2: "3:case", 3: "1:nmod:like|5:nsubj@src=nmod_like",
        4: "5:aux", 5: "0:root", 6: "5:xcomp",
    }, []),
    ("ex08_woods", "He wonders in these woods here", [
        (1, "He", "he", "PRON", "PRP", 2, "nsubj"),
        (2, "wonders", "wonder", "VERB", "VBZ", 0, "root"),
        (3, "in", "in", "ADP", "IN", 5, "case"),
        (4, "these", "these", "DET", "DT", 5, "det"),
        (5, "woods", "wood", "NOUN", "NNS", 2, "nmod"),
        (6, "here", "here", "ADV", "RB", 5, "advmod"),
    ], {
        1: "2:nsubj", 2: "0:root", 3: "5:case", 4: "5:det", 5: "2:nmod:in",
        6: "2:advmod@src=advmod_indexical;unc|5:advmod",
    }, []),
    ("ex09_oil", "I used canola oil", [
        (1, "I", "I", "PRON", "PRP", 2, "nsubj"),
        (2, "used", "use", "VERB", "VBD", 0, "root"),
        (3, "canola", "canola", "NOUN", "NN", 4, "compound"),
        (4, "oil", "oil", "NOUN", "NN", 2, "dobj"),
    ], {
        1: "2:nsubj", 2: "0:root",
        3: "2:dobj@src=compound;unc|4:compound", 4: "2:dobj",
    }, []),
    ("ex10_sheriff", "The Sheriff was shot by Bob", [
        (1, "The", "the", "DET", "DT", 2, "det"),
        (2, "Sheriff", "sheriff", "PROPN", "NNP", 4, "nsubjpass"),
        (3, "was", "be", "AUX", "VBD", 4, "auxpass"),
        (4, "shot", "shoot", "VERB", "VBN", 0, "root"),
        (5, "by", "by", "ADP", "IN", 6, "case"),
        (6, "Bob", "bob", "PROPN", "NNP", 4, "nmod"),
    ], {
        1: "2:det", 2: "4:dobj@src=passive|4:nsubjpass", 3: "4:auxpass",
        4: "0:root", 5: "6:case", 6: "4:nmod:by|4:nsubj@src=passive",
    }, []),
    ("ex11_miami", "A Miami-based company", [
        (1, "A", "a", "DET", "DT", 5, "det"),
        (2, "Miami", "miami", "PROPN", "NNP", 4, "compound"),
        (3, "-", "-", "PUNCT", "HYPH", 4, "punct"),
        (4, "based", "base", "VERB", "VBN", 5, "amod"),
        (5, "company", "company", "NOUN", "NN", 0, "root"),
    ], {
        1: "5:det", 2: "4:compound|4:nmod@src=hyphen", 3: "4:punct",
        4: "5:amod", 5: "0:root|4:nsubj@src=hyphen",
    }, []),
    ("ex12_dead", "I see dead people", [
        (1, "I", "I", "PRON", "PRP", 2, "nsubj"),
        (2, "see", "see", "VERB", "VBP", 0, "root"),
        (3, "dead", "dead", "ADJ", "JJ", 4, "amod"),
        (4, "people", "people", "NOUN", "NNS", 2, "dobj"),
    ], {
        1: "2:nsubj", 2: "0:root", 3: "4:amod", 4: "2:dobj|3:nsubj@src=amod",
    }, []),
    ("ex20_smart_one", "The smart one waited patently", [
        (1, "The", "the", "DET", "DT", 3, "det"),
        (2, "smart", "smart", "ADJ", "JJ", 3, "amod"),
        (3, "one", "one", "NOUN", "NN", 4, "nsubj"),
        (4, "waited", "wait", "VERB", "VBD", 0, "root"),
        (5, "patently", "patently", "ADV", "RB", 4, "advmod"),
    ], {
        1: "3:det", 2: "3:amod", 3: "2:nsubj@src=amod|4:nsubj",
        4: "0:root", 5: "4:advmod",
    }, []),
    ("ex13_army", "Army of zombies", [
        (1, "Army", "army", "NOUN", "NN", 0, "root"),
        (2, "of", "of", "ADP", "IN", 3, "case"),
        (3, "zombies", "zombie", "NOUN", "NNS", 1, "nmod"),
    ], {
        1: "0:root", 2: "3:case", 3: "1:compound@src=nmod_of|1:nmod:of",
    }, []),
    ("ex14_tomorrow", "Tomorrow is another day", [
        (1, "Tomorrow", "tomorrow", "NOUN", "NN", 4, "nsubj"),
        (2, "is", "be", "AUX", "VBZ", 4, "cop"),
        (3, "another", "another", "DET", "DT", 4, "det"),
        (4, "day", "day", "NOUN", "NN", 0, "root"),
    ], {
        1: "2.1:nsubj@src=cop", 2: "2.1:ev@src=cop",
        3: "4:det", 4: "2.1:xcomp@src=cop",
    }, [("2.1", "0:root")]),
    ("ex21_israel", "They are from Israel", [
        (1, "They", "they", "PRON", "PRP", 4, "nsubj"),
        (2, "are", "be", "AUX", "VBP", 4, "cop"),
        (3, "from", "from", "ADP", "IN", 4, "case"),
        (4, "Israel", "israel", "PROPN", "NNP", 0, "root"),
    ], {
        1: "2.1:nsubj@src=cop", 2: "2.1:ev@src=cop",
        3: "4:case", 4: "2.1:nmod@src=cop",
    }, [("2.1", "0:root")]),
    ("ex_sally_smart", "Sally is smart", [
        (1, "Sally", "sally", "PROPN", "NNP", 3, "nsubj"),
        (2, "is", "be", "AUX", "VBZ", 3, "cop"),
        (3, "smart", "smart", "ADJ", "JJ", 0, "root"),
    ], {
        1: "2.1:nsubj@src=cop", 2: "2.1:ev@src=cop",
        3: "1:amod@src=cop|2.1:xcomp@src=cop",
    }, [("2.1", "0:root")]),
    ("ex_he_man", "He is the man", [
        (1, "He", "he", "PRON", "PRP", 4, "nsubj"),
        (2, "is", "be", "AUX", "VBZ", 4, "cop"),
        (3, "the", "the", "DET", "DT", 4, "det"),
        (4, "man", "man", "NOUN", "NN", 0, "root"),
    ], {
        1: "2.1:nsubj@src=cop", 2: "2.1:ev@src=cop",
        3: "4:det", 4: "2.1:xcomp@src=cop",
    }, [("2.1", "0:root")]),
    ("ex_sam_to_be", "Sam is to be a man", [
        (1, "Sam", "sam", "PROPN", "NNP", 2, "nsubj"),
        (2, "is", "be", "AUX", "VBZ", 0, "root"),
        (3, "to", "to", "PART", "TO", 6, "mark"),
        (4, "be", "be", "AUX", "VB", 6, "cop"),
        (5, "a", "a", "DET", "DT", 6, "det"),
        (6, "man", "man", "NOUN", "NN", 2, "xcomp"),
    ], {
        1: "4.1:nsubj@src=xcomp_to", 2: "4:ev@src=cop", 3: "4:mark@src=cop",
        4: "4.1:ev@src=cop", 5: "6:det", 6: "4.1:xcomp@src=cop",
    }, [("4.1", "0:root")]),
    ("ex_sounds_funny", "Sam sounds funny", [
        (1, "Sam", "sam", "PROPN", "NNP", 2, "nsubj"),
        (2, "sounds", "sound", "VERB", "VBZ", 0, "root"),
        (3, "funny", "funny", "ADJ", "JJ", 2, "xcomp"),
    ], {
        1: "2.1:nsubj@src=evidential_sound", 2: "2.1:ev@src=evidential_sound",
        3: "1:amod@src=evidential_sound|2.1:xcomp@src=evidential_sound",
    }, [("2.1", "0:root")]),
    ("ex_seems_happy", "Sam seems happy", [
        (1, "Sam", "sam", "PROPN", "NNP", 2, "nsubj"),
        (2, "seems", "seem", "VERB", "VBZ", 2 - 2, "root"),
        (3, "happy", "happy", "ADJ", "JJ", 2, "xcomp"),
    ], {
        1: "2.1:nsubj@src=evidential_seem", 2: "2.1:ev@src=evidential_seem",
        3: "1:amod@src=evidential_seem|2.1:xcomp@src=evidential_seem",
    }, [("2.1", "0:root")]),
    ("ex15r_seem_nice", "They seem nice.", [
        (1, "They", "they", "PRON", "PRP", 2, "nsubj"),
        (2, "seem", "seem", "VERB", "VBP", 0, "root"),
        (3, "nice.", "nice", "ADJ", "JJ", 2, "xcomp"),
    ], {
        1: "2.1:nsubj@src=evidential_seem", 2: "2.1:ev@src=evidential_seem",
        3: "1:amod@src=evidential_seem|2.1:xcomp@src=evidential_seem",
    }, [("2.1", "0:root")]),
    ("ex15l_seems_like", "Sam seems to like them.", [
        (1, "Sam", "sam", "PROPN", "NNP", 2, "nsubj"),
        (2, "seems", "seem", "VERB", "VBZ", 0, "root"),
        (3, "to", "to", "PART", "TO", 4, "mark"),
        (4, "like", "like", "VERB", "VB", 2, "xcomp"),
        (5, "them.", "they", "PRON", "PRP", 4, "dobj"),
    ], {
        1: "4:nsubj@src=xcomp_to", 2: "4:ev@src=evidential_seem",
        3: "4:mark", 4: "0:root", 5: "4:dobj",
    }, []),
    ("ex16_media", "The Media reported that peace was achieved", [
        (1, "The", "the", "DET", "DT", 2, "det"),
        (2, "Media", "media", "PROPN", "NNP", 3, "nsubj"),
        (3, "reported", "report", "VERB", "VBD", 0, "root"),
        (4, "that", "that", "SCONJ", "IN", 7, "mark"),
        (5, "peace", "peace", "NOUN", "NN", 7, "nsubjpass"),
        (6, "was", "be", "AUX", "VBD", 7, "auxpass"),
        (7, "achieved", "achieve", "VERB", "VBN", 3, "ccomp"),
    ], {
        1: "2:det", 2: "3:nsubj", 3: "0:root|7:ev@src=reported_report",
        4: "7:mark", 5: "7:dobj@src=passive|7:nsubjpass", 6: "7:auxpass",
        7: "3:ccomp",
    }, []),
    ("ex17_started", "He started talking funny", [
        (1, "He", "he", "PRON", "PRP", 2, "nsubj"),
        (2, "started", "start", "VERB", "VBD", 0, "root"),
        (3, "talking", "talk", "VERB", "VBG", 2, "xcomp"),
        (4, "funny", "funny", "ADV", "RB", 3, "advmod"),
    ], {
        1: "3:nsubj@src=xcomp", 2: "3:ev@src=aspectual_start",
        3: "0:root", 4: "3:advmod",
    }, []),
    ("ex_began_walking", "Sally began walking home", [
        (1, "Sally", "sally", "PROPN", "NNP", 2, "nsubj"),
        (2, "began", "begin", "VERB", "VBD", 0, "root"),
        (3, "walking", "walk", "VERB", "VBG", 2, "xcomp"),
        (4, "home", "home", "ADV", "RB", 3, "advmod"),
    ], {
        1: "3:nsubj@src=xcomp", 2: "3:ev@src=aspectual_begin",
        3: "0:root", 4: "3:advmod",
    }, []),
    ("ex18_decided", "I decided going home", [
        (1, "I", "I", "PRON", "PRP", 2, "nsubj"),
        (2, "decided", "decide", "VERB", "VBD", 0, "root"),
        (3, "going", "go", "VERB", "VBG", 2, "xcomp"),
        (4, "home", "home", "ADV", "RB", 3, "advmod"),
    ], {
        1: "2:nsubj|3:nsubj@src=xcomp", 2: "0:root", 3: "2:xcomp", 4: "3:advmod",
    }, []),
    ("fig1_neo", "Neo, the One, is a hero, for chasing this army of Robots", [
        (1, "Neo,", "neo", "PROPN", "NNP", 6, "nsubj"),
        (2, "the", "the", "DET", "DT", 3, "det"),
        (3, "One,", "one", "PROPN", "NNP", 1, "appos"),
        (4, "is", "be", "AUX", "VBZ", 6, "cop"),
        (5, "a", "a", "DET", "DT", 6, "det"),
        (6, "hero,", "hero", "NOUN", "NN", 0, "root"),
        (7, "for", "for", "SCONJ", "IN", 8, "mark"),
        (8, "chasing", "chase", "VERB", "VBG", 6, "advcl"),
        (9, "this", "this", "DET", "DT", 10, "det"),
        (10, "army", "army", "NOUN", "NN", 8, "dobj"),
        (11, "of", "of", "ADP", "IN", 12, "case"),
        (12, "Robots", "robot", "PROPN", "NNPS", 10, "nmod"),
    ], {
        1: "4.1:nsubj@src=cop|8:nsubj@src=advcl_for",
        2: "3:det",
        3: "1:appos|4.1:nsubj@src=appos|8:nsubj@src=appos",
        4: "4.1:ev@src=cop",
        5: "6:det",
        6: "4.1:xcomp@src=cop",
        7: "8:mark",
        8: "4.1:advcl:for@src=cop",
        9: "10:det",
        10: "8:dobj",
        11: "12:case",
        12: "8:dobj@src=compound;unc|10:compound@src=nmod_of|10:nmod:of",
    }, [("4.1", "0:root")]),
]


def render_input(text, rows):
    lines = [f"# text = {text}"]
    for (tid, form, lemma, upos, xpos, head, rel) in rows:
        lines.append(f"{tid}\t{form}\t{lemma}\t{upos}\t{xpos}\t_\t{head}\t{rel}\t_\t_")
    return "\n".join(lines) + "\n\n"


def render_expected(text, rows, deps, null_rows):
    lines = [f"# text = {text}"]
    nulls = dict()
    for (nid, ndeps) in null_rows:
        nulls.setdefault(int(nid.split(".")[0]), []).append((nid, ndeps))
    for (tid, form, lemma, upos, xpos, head, rel) in rows:
        lines.append(
            f"{tid}\t{form}\t{lemma}\t{upos}\t{xpos}\t_\t{head}\t{rel}\t{deps[tid]}\t_")
        for (nid, ndeps) in nulls.get(tid, []):
            lines.append(f"{nid}\tSTATE\t_\t_\t_\t_\t_\t_\t{ndeps}\t_")
    return "\n".join(lines) + "\n\n"


for (name, text, rows, deps, null_rows) in FIXTURES:
    with open(f"{FIX}/{name}.conllu", "w") as f:
        f.write(render_input(text, rows))
    with open(f"{FIX}/{name}.expected.conllu", "w") as f:
        f.write(render_expected(text, rows, deps, null_rows))

print(f"wrote {len(FIXTURES)} fixture pairs")
