from __future__ import annotations

import itertools
import random
import typing
from pathlib import Path

import pytest

from tagchart.grammar import Grammar, Nonterminal, Production, Symbol, Terminal, load_grammar_file
from tagchart.lexicon import Lexicon, TaggedSentence, load_lexicon_file
from tagchart.parsers.oracle import derives

DATA_DIR = Path(__file__).resolve().parent.parent / "tagchart" / "data"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

RANDOM_SEED = 20240611
RANDOM_GRAMMARS = 200
MAX_RANDOM_LENGTH = 5

# printed derivations of the two worked Assamese sentences, None marks a scan
WALKTHROUGH_STEPS = (
    ("PP", "NP"),
    ("NP", "PP", "NP"),
    ("PP", "PN", "NP"),
    ("PN", "mai"),
    None,
    ("NP", "IND", "PN"),
    ("IND", "Aru"),
    None,
    ("PN", "si"),
    None,
    ("NP", "ADV", "NP"),
    ("ADV", "ekelge"),
    None,
    ("NP", "gharalE"),
    None,
    ("VP", "jAm"),
    None,
)
RESULT_STEPS = (
    ("PP", "NP"),
    ("NP", "NP", "PP"),
    ("NP", "NP", "ART"),
    ("NP", "gru"),
    None,
    ("ART", "ebidh"),
    None,
    ("PP", "ADJ", "NP"),
    ("ADJ", "upakArI"),
    None,
    ("NP", "za\\ntu"),
    None,
)


def golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text(encoding="utf-8")


def production(g: Grammar, lhs: str, *rhs: str) -> Production:
    """Build a production from symbol names as ``g`` classifies them."""
    symbols = []
    for name in rhs:
        symbol = g.symbol(name)
        assert symbol is not None, name
        symbols.append(symbol)
    return Production(Nonterminal(lhs), tuple(symbols))


def steps_for(
    g: Grammar, steps: typing.Iterable[tuple[str, ...] | None]
) -> list[Production | None]:
    return [None if step is None else production(g, *step) for step in steps]


def random_grammar(rng: random.Random) -> Grammar:
    names = ["S", "A", "B", "C", "D", "E"][: rng.randint(1, 6)]
    terminals = ["a", "b", "c"][: rng.randint(2, 3)]
    symbols: list[Symbol] = [Nonterminal(n) for n in names] + [Terminal(t) for t in terminals]
    budget = rng.randint(len(names), 12)
    found: dict[Production, None] = {}
    for index in range(budget * 3):
        if len(found) >= budget:
            break
        # every nonterminal gets a production before any gets a second one
        lhs = names[index] if index < len(names) else rng.choice(names)
        rhs = tuple(rng.choice(symbols) for _ in range(rng.randint(1, 3)))
        found.setdefault(Production(Nonterminal(lhs), rhs))
    for name in names:
        if not any(p.lhs.name == name for p in found):
            found.setdefault(Production(Nonterminal(name), (Terminal(terminals[0]),)))
    return Grammar(found, Nonterminal("S"))


def all_strings(g: Grammar, max_length: int) -> typing.Iterator[tuple[str, ...]]:
    alphabet = sorted({t.name for t in g.terminals} | {"a", "b"})
    for length in range(1, max_length + 1):
        yield from itertools.product(alphabet, repeat=length)


class Case(typing.NamedTuple):
    grammar: Grammar
    sentence: TaggedSentence
    expected: bool


@pytest.fixture(scope="session")
def english_grammar() -> Grammar:
    return load_grammar_file(DATA_DIR / "english.cfg")


@pytest.fixture(scope="session")
def english_lexicon() -> Lexicon:
    return load_lexicon_file(DATA_DIR / "english.lex")


@pytest.fixture(scope="session")
def assamese_grammar() -> Grammar:
    return load_grammar_file(DATA_DIR / "assamese.cfg")


@pytest.fixture(scope="session")
def assamese_lexicon() -> Lexicon:
    return load_lexicon_file(DATA_DIR / "assamese.lex")


@pytest.fixture(scope="session")
def random_grammars() -> list[Grammar]:
    rng = random.Random(RANDOM_SEED)
    return [random_grammar(rng) for _ in range(RANDOM_GRAMMARS)]


@pytest.fixture(scope="session")
def random_cases(random_grammars: list[Grammar]) -> list[Case]:
    """Every grammar against every short string, with the oracle's verdict."""
    cases = []
    for g in random_grammars:
        for words in all_strings(g, MAX_RANDOM_LENGTH):
            sentence = TaggedSentence.of_terminals(words)
            cases.append(Case(g, sentence, derives(g, sentence)))
    return cases
