"""Lexical Analysis: per-tag word databases, tagging and lexicalization."""

from __future__ import annotations

import dataclasses
import logging
import typing
from pathlib import Path

from .enums import InputKind
from .errors import GrammarError, LexiconError, TagchartError, UnknownWordError
from .grammar import Grammar, Nonterminal, Production, Symbol, Terminal

__all__: typing.Sequence[str] = (
    "ASSAMESE_TAGS",
    "TagDatabase",
    "Lexicon",
    "Token",
    "TaggedSentence",
    "load_lexicon",
    "load_lexicon_file",
    "tag_word",
    "tag_sentence",
    "tag_pattern",
    "tokenize",
    "lexicalize",
    "contains_verb",
)

logger = logging.getLogger(__name__)

ASSAMESE_TAGS: typing.Final = ("NP", "PN", "VP", "ADJ", "ADV", "ART", "IND")
SENTENCE_PUNCTUATION: typing.Final = (".", "।")


@dataclasses.dataclass(frozen=True, slots=True)
class TagDatabase:
    tag: Symbol
    words: frozenset[str]

    def __contains__(self, word: object) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)


class Lexicon:
    """Mapping of tag name to `TagDatabase`, enumerated in tag order.

    Tag order is the seven Assamese tags first (NP, PN, VP, ADJ, ADV, ART, IND),
    then any other tag in the order the lexicon file declared it.
    """

    def __init__(self, databases: typing.Iterable[TagDatabase] = ()) -> None:
        by_name = {db.tag.name: db for db in databases}
        ordered = [by_name[t] for t in ASSAMESE_TAGS if t in by_name]
        ordered += [db for name, db in by_name.items() if name not in ASSAMESE_TAGS]
        self.databases: dict[str, TagDatabase] = {db.tag.name: db for db in ordered}

    @property
    def tags(self) -> tuple[Symbol, ...]:
        return tuple(db.tag for db in self.databases.values())

    def tag_word(self, word: str) -> tuple[Symbol, ...]:
        tags = tuple(db.tag for db in self.databases.values() if word in db)
        if not tags:
            raise UnknownWordError([word])
        return tags

    def __len__(self) -> int:
        return len(self.databases)

    def __repr__(self) -> str:
        return f"Lexicon({', '.join(f'{k}:{len(v)}' for k, v in self.databases.items())})"


@dataclasses.dataclass(frozen=True, slots=True)
class Token:
    word: str
    candidate_tags: tuple[Symbol, ...]

    @property
    def tag_names(self) -> tuple[str, ...]:
        return tuple(tag.name for tag in self.candidate_tags)


@dataclasses.dataclass(frozen=True, slots=True)
class TaggedSentence:
    """Tokens with their candidate tags.

    Position ``i`` sits before token ``i``; position ``n`` follows the last one.
    In `InputKind.TAGS` mode a grammar symbol matches a token when its name is
    one of the token's tags, otherwise a terminal must equal the word.
    """

    tokens: tuple[Token, ...]
    kind: InputKind = InputKind.WORDS

    @classmethod
    def of_terminals(cls, words: typing.Iterable[str]) -> TaggedSentence:
        """Untagged word input, used when the grammar spells its own terminals."""
        return cls(tuple(Token(w, ()) for w in words), InputKind.WORDS)

    @property
    def n(self) -> int:
        return len(self.tokens)

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(token.word for token in self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __getitem__(self, index: int) -> Token:
        return self.tokens[index]

    def matches(self, symbol: Symbol, position: int) -> bool:
        if not 0 <= position < len(self.tokens):
            return False
        token = self.tokens[position]
        if self.kind is InputKind.TAGS:
            return symbol.name in token.tag_names
        return symbol.is_terminal and symbol.name == token.word

    def contains_verb(self, verb_tag: str = "VP") -> bool:
        return any(verb_tag in token.tag_names for token in self.tokens)

    def __str__(self) -> str:
        return " ".join(self.words)


def contains_verb(sentence: TaggedSentence, verb_tag: str = "VP") -> bool:
    return sentence.contains_verb(verb_tag)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def load_lexicon(
    source: str,
    allowed_tags: typing.Collection[str] | None = None,
    name: str | None = None,
) -> Lexicon:
    """Parse lexicon text: ``TAG:`` headers followed by whitespace-separated words.

    Raises
    ------
    LexiconError
        When a word precedes every header, a header is empty, or a tag is not
        in ``allowed_tags`` (when given).
    """
    words: dict[str, dict[str, None]] = {}
    current: str | None = None
    for lineno, raw in enumerate(source.splitlines(), start=1):
        for item in _strip_comment(raw).split():
            if item.endswith(":") and len(item) > 1:
                current = item[:-1]
                if allowed_tags is not None and current not in allowed_tags:
                    raise LexiconError(f"unknown tag {current}", lineno, name)
                words.setdefault(current, {})
                continue
            if item == ":":
                raise LexiconError("tag header without a name", lineno, name)
            if current is None:
                raise LexiconError(f"word {item!r} before any tag header", lineno, name)
            words[current].setdefault(item)

    databases = []
    for tag, entries in words.items():
        if not entries:
            logger.warning("lexicon %s: tag %s has no words", name or "<string>", tag)
        databases.append(TagDatabase(Nonterminal(tag), frozenset(entries)))
    lexicon = Lexicon(databases)
    logger.debug("loaded lexicon %s: %r", name or "<string>", lexicon)
    return lexicon


def load_lexicon_file(
    path: str | Path, allowed_tags: typing.Collection[str] | None = None
) -> Lexicon:
    path = Path(path)
    return load_lexicon(path.read_text(encoding="utf-8"), allowed_tags, str(path))


def tag_word(lex: Lexicon, word: str) -> tuple[Symbol, ...]:
    return lex.tag_word(word)


def tokenize(text: str) -> list[str]:
    words = text.split()
    while words and words[-1] in SENTENCE_PUNCTUATION:
        words.pop()
    if words:
        last = words[-1]
        while last and last[-1] in SENTENCE_PUNCTUATION:
            last = last[:-1]
        if last:
            words[-1] = last
        else:
            words.pop()
    return words


def tag_sentence(lex: Lexicon, words: typing.Sequence[str]) -> TaggedSentence:
    """Tag every word, collecting all unknown words into one error."""
    if not words:
        raise TagchartError("cannot tag an empty sentence")
    tokens: list[Token] = []
    unknown: list[str] = []
    for word in words:
        try:
            tokens.append(Token(word, lex.tag_word(word)))
        except UnknownWordError:
            unknown.append(word)
    if unknown:
        raise UnknownWordError(unknown)
    return TaggedSentence(tuple(tokens), InputKind.WORDS)


def tag_pattern(tags: typing.Sequence[str]) -> TaggedSentence:
    """A pre-tagged sentence: each token is a tag standing for itself."""
    if not tags:
        raise TagchartError("cannot parse an empty tag sequence")
    return TaggedSentence(
        tuple(Token(tag, (Nonterminal(tag),)) for tag in tags), InputKind.TAGS
    )


def lexicalize(g: Grammar, sentence: TaggedSentence) -> Grammar:
    """Add the lexical productions ``TAG -> "word"`` for this sentence's words.

    Tags that the grammar uses as terminals (PN, VP, ... in the Assamese rules)
    become nonterminals.  Tag-mode sentences are returned unchanged, as are
    productions the grammar already spells out (``n -> "I"``).
    """
    if sentence.kind is InputKind.TAGS:
        return g
    lexical: dict[Production, None] = {}
    promoted: set[str] = set()
    for token in sentence.tokens:
        for tag in token.candidate_tags:
            symbol = g.symbol(tag.name)
            if symbol is None:
                continue
            if symbol.is_terminal:
                promoted.add(tag.name)
            lexical.setdefault(Production(Nonterminal(tag.name), (Terminal(token.word),)))
    if not lexical:
        return g

    lhs_names = {nt.name for nt in g.nonterminals} | promoted
    for production in lexical:
        if production.rhs[0].name in lhs_names:
            raise GrammarError(
                f"word {production.rhs[0].name} clashes with a grammar category"
            )

    def promote(symbol: Symbol) -> Symbol:
        if symbol.is_terminal and symbol.name in promoted:
            return Nonterminal(symbol.name)
        return symbol

    productions = [
        Production(p.lhs, tuple(promote(s) for s in p.rhs)) for p in g.productions
    ]
    existing = set(productions)
    productions += [p for p in lexical if p not in existing]
    return Grammar(productions, g.start)
