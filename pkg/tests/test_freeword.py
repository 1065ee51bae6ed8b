from __future__ import annotations

import time

import pytest

from tagchart.errors import StartProductionError, UnknownWordError
from tagchart.grammar import Grammar, Nonterminal, load_grammar
from tagchart.lexicon import Lexicon, TaggedSentence, tag_pattern
from tagchart.parsers.freeword import (
    FreewordOptions,
    SententialItem,
    expand,
    initialize,
    parse,
    parse_sentence,
    scan_terminal,
)
from tagchart.parsers.trace import render_trace

from .conftest import RESULT_STEPS, WALKTHROUGH_STEPS, Case, golden, steps_for

WALKTHROUGH = "mai Aru si ekelge gharalE jAm".split()
RESULT = "gru ebidh upakArI za\\ntu".split()
UNRESTRICTED = FreewordOptions(verb_conditional=False)

STRESS_GRAMMAR = """
S -> PP VP | PP
PP -> NP | p NP
NP -> PP | NP PP | n
VP -> v
"""


def test_walkthrough_is_accepted(assamese_grammar: Grammar, assamese_lexicon: Lexicon) -> None:
    run = parse(assamese_grammar, assamese_lexicon, WALKTHROUGH)
    assert run.accepted
    assert all(str(s).endswith('"jAm" ., 0, 6') for s in run.successes)


def test_walkthrough_goal_trace(assamese_grammar: Grammar, assamese_lexicon: Lexicon) -> None:
    run = parse(assamese_grammar, assamese_lexicon, WALKTHROUGH)
    derivation = run.follow(steps_for(run.grammar, WALKTHROUGH_STEPS))
    assert render_trace(derivation.trace()) == golden("assamese_goal.trace")


def test_result_analysis_goal_trace(
    assamese_grammar: Grammar, assamese_lexicon: Lexicon
) -> None:
    run = parse(assamese_grammar, assamese_lexicon, RESULT)
    derivation = run.follow(steps_for(run.grammar, RESULT_STEPS))
    assert render_trace(derivation.trace()) == golden("result_goal.trace")
    assert [str(p) for _, p in derivation.history[:4]] == [
        "S → PP",
        "PP → NP",
        "NP → NP PP",
        "NP → NP ART",
    ]


@pytest.mark.parametrize(
    ("words", "name"),
    [(WALKTHROUGH, "assamese_goal.trace"), (RESULT, "result_goal.trace")],
)
def test_goal_path_prefers_the_balanced_analysis(
    assamese_grammar: Grammar, assamese_lexicon: Lexicon, words: list[str], name: str
) -> None:
    run = parse(assamese_grammar, assamese_lexicon, words)
    path = run.goal_path()
    assert path is not None
    assert render_trace(path.trace()) == golden(name)
    again = parse(assamese_grammar, assamese_lexicon, words).goal_path()
    assert again is not None and again.items == path.items


def test_goal_path_ranking(assamese_grammar: Grammar, assamese_lexicon: Lexicon) -> None:
    run = parse(assamese_grammar, assamese_lexicon, WALKTHROUGH)
    preferred = run.follow(steps_for(run.grammar, WALKTHROUGH_STEPS))
    imbalance, unary, _ = run.preference(preferred)
    # S -> PP VP splits 5 against 1; the best split of the rest costs 2
    assert (imbalance, unary) == (6, 1)
    assert all(run.preference(d) >= run.preference(preferred) for d in run.derivations())


def test_goal_path_without_success(assamese_grammar: Grammar) -> None:
    assert parse_sentence(assamese_grammar, tag_pattern(["VP", "VP"])).goal_path() is None


def test_goal_path_is_a_real_derivation(
    assamese_grammar: Grammar, assamese_lexicon: Lexicon
) -> None:
    run = parse(assamese_grammar, assamese_lexicon, WALKTHROUGH)
    path = run.goal_path()
    assert path is not None
    assert path.items[0].key == run.seeds[0].key
    assert path.items[-1] in run.successes
    assert path.actions[-1] == "Complete"
    assert path.actions.count("Apply Phase 2") == len(WALKTHROUGH)
    expansions = iter(production for _, production in path.history[1:])
    moves = [next(expansions) if a == "Apply Phase 1" else None for a in path.actions[:-1]]
    assert run.follow(moves).items == path.items


def test_path_to_an_intermediate_item(
    assamese_grammar: Grammar, assamese_lexicon: Lexicon
) -> None:
    run = parse(assamese_grammar, assamese_lexicon, WALKTHROUGH)
    item = next(i for i in run.items.values() if i.pos == 2 and not i.is_complete)
    path = run.path(item)
    assert path is not None
    assert path.items[0].key == run.seeds[0].key
    assert path.items[-1] is item
    assert path.actions[-1] in ("Apply Phase 1", "Apply Phase 2")
    assert path.actions[:-1].count("Apply Phase 2") == 2
    stranger = SententialItem(Nonterminal("S"), (Nonterminal("ZZ"),), 0, 0)
    assert run.path(stranger) is None


def test_follow_rejects_moves_the_parser_never_made(
    assamese_grammar: Grammar, assamese_lexicon: Lexicon
) -> None:
    run = parse(assamese_grammar, assamese_lexicon, WALKTHROUGH)
    with pytest.raises(LookupError):
        run.follow([None])


def test_seed_depends_on_verb(assamese_grammar: Grammar) -> None:
    with_verb = initialize(assamese_grammar, tag_pattern(["PN", "VP"]))
    without = initialize(assamese_grammar, tag_pattern(["NP", "ART"]))
    assert str(with_verb) == 'S → .PP "VP", 0, 0'
    assert str(without) == "S → .PP, 0, 0"


def test_missing_start_production() -> None:
    g = load_grammar("S -> PP\nPP -> n\n")
    with pytest.raises(StartProductionError):
        initialize(g, tag_pattern(["n", "VP"]))


def test_unknown_word(assamese_grammar: Grammar, assamese_lexicon: Lexicon) -> None:
    with pytest.raises(UnknownWordError):
        parse(assamese_grammar, assamese_lexicon, ["mai", "xyzzy"])


def test_expand_prunes_long_forms(assamese_grammar: Grammar) -> None:
    item = initialize(assamese_grammar, tag_pattern(["PN", "VP"]))
    # every two-symbol PP rewrite would make the form longer than the input
    successors = expand(item, assamese_grammar, 2)
    assert [str(s) for s in successors] == [
        'S → .NP "VP", 0, 0',
        'S → ."ADJ" "VP", 0, 0',
        'S → ."PN" "VP", 0, 0',
        'S → ."ADV" "VP", 0, 0',
    ]
    assert len(expand(item, assamese_grammar, 2, length_pruning=False)) == 10


def test_expand_last_word_restriction(assamese_grammar: Grammar) -> None:
    item = SententialItem(Nonterminal("S"), (Nonterminal("PN"), Nonterminal("PP")), 1, 1)
    restricted = expand(item, assamese_grammar, 2, length_pruning=False)
    unrestricted = expand(
        item, assamese_grammar, 2, last_word_restriction=False, length_pruning=False
    )
    assert [str(s.production) for s in restricted] == [
        "PP → NP",
        'PP → "ADJ"',
        'PP → "PN"',
        'PP → "ADV"',
    ]
    assert len(unrestricted) == 10


def test_expand_skips_seen(assamese_grammar: Grammar) -> None:
    item = initialize(assamese_grammar, tag_pattern(["NP", "ART"]))
    first = expand(item, assamese_grammar, 2)
    again = expand(item, assamese_grammar, 2, seen={s.key for s in first})
    assert first and again == []


def test_scan_terminal(assamese_grammar: Grammar) -> None:
    sentence = tag_pattern(["PP", "VP"])
    item = initialize(assamese_grammar, sentence)
    scanned = scan_terminal(item, sentence)
    assert scanned is not None
    assert str(scanned) == 'S → PP ."VP", 0, 1'
    assert scan_terminal(item, tag_pattern(["NP", "VP"])) is None


def test_dot_tracks_position() -> None:
    g = load_grammar("S -> a\n")
    with pytest.raises(AssertionError):
        SententialItem(g.start, g.productions[0].rhs, 1, 0)


ACCEPTED_PATTERNS = [
    "NP ART ADJ ADJ",
    "NP NP VP",
    "NP ART NP",
    "PN NP VP",
    "PN IND PN ADV NP VP",
    "IND ADV ADJ NP",
    "IND PN VP",
    "PN IND VP",
    "NP NP NP VP",
    "ADV VP",
    "ADJ ADJ NP",
    "ADJ NP",
    "ADJ VP",
    "NP ART ADJ NP",
    "PN NP ART NP VP",
    "PN ART NP NP VP",
    "NP ART PN NP VP",
    "NP NP ART PN NP",
    "NP NP ART PN VP",
    "ART NP PN NP VP",
    "NP PN NP ART VP",
]


@pytest.mark.parametrize("pattern", ACCEPTED_PATTERNS)
def test_free_word_order_patterns(assamese_grammar: Grammar, pattern: str) -> None:
    run = parse_sentence(assamese_grammar, tag_pattern(pattern.split()))
    assert run.accepted


@pytest.mark.parametrize("pattern", ["VP VP", "VP", "VP NP"])
def test_rejected_patterns(assamese_grammar: Grammar, pattern: str) -> None:
    assert not parse_sentence(assamese_grammar, tag_pattern(pattern.split())).accepted


@pytest.mark.parametrize(
    "sentence",
    [
        "mai mAnuH ezan pArkt dekhiCo",
        "mai ezan mAnuH pArkt dekhiCo",
        "mAnuH ezan mai pArkt dekhiCo",
        "pArkt mAnuH ezan mai dekhiCo",
        "ezan mAnuH mai pArkt dekhiCo",
        "pArkt mai mAnuH ezan dekhiCo",
    ],
)
def test_permuted_sentences(
    assamese_grammar: Grammar, assamese_lexicon: Lexicon, sentence: str
) -> None:
    assert parse(assamese_grammar, assamese_lexicon, sentence.split()).accepted


def test_first_success_stops_early() -> None:
    g = load_grammar("S -> A | B\nA -> a\nB -> C\nC -> D\nD -> a\n")
    sentence = TaggedSentence.of_terminals(["a"])
    full = parse_sentence(g, sentence, UNRESTRICTED)
    first = parse_sentence(
        g, sentence, FreewordOptions(verb_conditional=False, first_success=True)
    )
    assert first.successes == [first.steps[-1].item]
    assert len(first) == 5
    assert len(full) == 6


def test_items_are_unique(assamese_grammar: Grammar, assamese_lexicon: Lexicon) -> None:
    run = parse(assamese_grammar, assamese_lexicon, WALKTHROUGH)
    keys = [step.item.key for step in run.steps]
    assert len(keys) == len(set(keys))
    assert run.duplicates > 0
    assert all(item.dot == item.pos for item in run.items.values())
    assert all(len(item.rhs) <= len(WALKTHROUGH) for item in run.items.values() if item.parent)


@pytest.mark.parametrize("length", range(1, 9))
def test_terminates_on_cycles_and_left_recursion(length: int) -> None:
    g = load_grammar(STRESS_GRAMMAR)
    words = ["n", "p"] * length
    sentence = TaggedSentence.of_terminals([*words[: length - 1], "v"])
    started = time.perf_counter()
    run = parse_sentence(g, sentence, UNRESTRICTED)
    assert time.perf_counter() - started < 5
    assert run.accepted == (length > 1 and length % 2 == 0)


def test_sound_and_complete_on_random_grammars(random_cases: list[Case]) -> None:
    for restriction, lookahead in ((True, True), (False, True), (True, False)):
        options = FreewordOptions(
            verb_conditional=False,
            last_word_restriction=restriction,
            lookahead_pruning=lookahead,
        )
        false_accepts = []
        misses = []
        for case in random_cases:
            accepted = parse_sentence(case.grammar, case.sentence, options).accepted
            if accepted and not case.expected:
                false_accepts.append(str(case.sentence))
            if case.expected and not accepted:
                misses.append(str(case.sentence))
        assert false_accepts == []
        assert misses == []


def test_full_trace_actions(assamese_grammar: Grammar, assamese_lexicon: Lexicon) -> None:
    run = parse(assamese_grammar, assamese_lexicon, WALKTHROUGH)
    actions = [step.action for step in run.steps]
    assert actions[0] == "Initialization"
    assert set(actions[1:]) == {"Apply Phase 1", "Apply Phase 2", "Complete"}
    assert actions.count("Complete") == len(run.successes)


@pytest.mark.parametrize("pattern", [*ACCEPTED_PATTERNS, "VP VP", "NP VP NP", "ART ART"])
def test_lookahead_keeps_verdicts(assamese_grammar: Grammar, pattern: str) -> None:
    sentence = tag_pattern(pattern.split())
    pruned = parse_sentence(assamese_grammar, sentence)
    plain = parse_sentence(assamese_grammar, sentence, FreewordOptions(lookahead_pruning=False))
    assert pruned.accepted == plain.accepted
    assert len(pruned) <= len(plain)
    assert {s.key for s in pruned.successes} == {s.key for s in plain.successes}


@pytest.mark.parametrize(
    ("sentence", "tags"),
    [
        ("NP NP NP NP NP NP NP NP", True),
        ("PN IND PN ADV NP NP NP VP", True),
        ("mai Aru si ekelge gharalE mAnuH ezan jAm", False),
    ],
)
def test_eight_tokens_on_the_bundled_grammar(
    assamese_grammar: Grammar, assamese_lexicon: Lexicon, sentence: str, tags: bool
) -> None:
    started = time.perf_counter()
    if tags:
        run = parse_sentence(assamese_grammar, tag_pattern(sentence.split()))
    else:
        run = parse(assamese_grammar, assamese_lexicon, sentence.split())
    assert time.perf_counter() - started < 5
    assert run.accepted
