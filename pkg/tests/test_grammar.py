from __future__ import annotations

import pytest

from tagchart.errors import GrammarError
from tagchart.grammar import (
    Grammar,
    Nonterminal,
    Production,
    Terminal,
    load_grammar,
    productions_of,
    render_grammar,
    single_rhs_productions_of,
)


def test_english_grammar_loads(english_grammar: Grammar) -> None:
    assert english_grammar.start == Nonterminal("S")
    assert len(english_grammar) == 11
    assert Terminal("man") in english_grammar.terminals
    assert Nonterminal("NP") in english_grammar.nonterminals


def test_assamese_grammar_loads(assamese_grammar: Grammar) -> None:
    assert len(assamese_grammar.productions_of(Nonterminal("S"))) == 2
    assert len(assamese_grammar.productions_of(Nonterminal("PP"))) == 10
    assert len(assamese_grammar.productions_of(Nonterminal("NP"))) == 8
    # tags without rules of their own are terminals until a sentence is lexicalized
    assert assamese_grammar.symbol("VP") == Terminal("VP")
    assert assamese_grammar.symbol("NP") == Nonterminal("NP")


def test_productions_keep_file_order(assamese_grammar: Grammar) -> None:
    pp = productions_of(assamese_grammar, Nonterminal("PP"))
    assert str(pp[0]) == 'PP → "PN" NP'
    assert str(pp[-1]) == 'PP → "ADV"'


def test_single_rhs_productions(assamese_grammar: Grammar) -> None:
    pp = single_rhs_productions_of(assamese_grammar, Nonterminal("PP"))
    assert [str(p) for p in pp] == ["PP → NP", 'PP → "ADJ"', 'PP → "PN"', 'PP → "ADV"']
    assert single_rhs_productions_of(assamese_grammar, Nonterminal("S"))[0].rhs == (
        Nonterminal("PP"),
    )


def test_unknown_nonterminal_has_no_productions(english_grammar: Grammar) -> None:
    assert productions_of(english_grammar, Nonterminal("ZZ")) == ()


def test_quoted_tokens_are_terminals() -> None:
    g = load_grammar('n -> "I" | man\n')
    assert g.productions[0].rhs == (Terminal("I"),)
    assert g.productions[1].rhs == (Terminal("man"),)


def test_comments_and_unicode_arrow() -> None:
    g = load_grammar('# a comment\nS → A "#"  # trailing\nA -> a\n')
    assert g.productions[0].rhs == (Nonterminal("A"), Terminal("#"))


def test_start_directive() -> None:
    g = load_grammar("%start B\nA -> a\nB -> A A\n")
    assert g.start == Nonterminal("B")


@pytest.mark.parametrize(
    ("source", "line", "message"),
    [
        ("S -> A |\n", 1, "empty alternative"),
        ("S -> a\nS -> a\n", 2, "duplicate production"),
        ("S -> a\nS a\n", 2, "expected"),
        ('S -> "a\n', 1, "unbalanced quote"),
        ("%start X\nS -> a\n", 1, "no productions"),
        ('S -> "S"\n', 1, "both as a terminal and a nonterminal"),
        ("%frob\nS -> a\n", 1, "unknown directive"),
    ],
)
def test_load_errors_name_the_line(source: str, line: int, message: str) -> None:
    with pytest.raises(GrammarError) as info:
        load_grammar(source, name="bad.cfg")
    assert info.value.line == line
    assert message in str(info.value)
    assert str(info.value).startswith(f"bad.cfg:{line}: ")


def test_empty_grammar_is_rejected() -> None:
    with pytest.raises(GrammarError, match="no start symbol"):
        load_grammar("# nothing here\n")


def test_grammar_rejects_undefined_nonterminal() -> None:
    with pytest.raises(GrammarError, match="undefined nonterminal B"):
        Grammar([Production(Nonterminal("S"), (Nonterminal("B"),))])


def test_production_rejects_empty_rhs() -> None:
    with pytest.raises(ValueError):
        Production(Nonterminal("S"), ())


def test_render_grammar_reloads_to_the_same_grammar(
    english_grammar: Grammar, assamese_grammar: Grammar
) -> None:
    for g in (english_grammar, assamese_grammar):
        assert load_grammar(render_grammar(g)) == g


def test_render_grammar_output() -> None:
    g = load_grammar('%start B\nA -> a "|"\nB -> A | A A\n')
    assert render_grammar(g) == '%start B\nA -> a "|"\nB -> A | A A\n'
