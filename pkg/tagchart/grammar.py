"""Context-free grammars: symbols, productions, loading and rendering.

Grammar files hold one rule per line::

    %start S
    S -> PP VP | PP      # alternatives become separate productions
    n -> "I" | man

Names that appear on the left of some rule are nonterminals, every other name
is a terminal.  A quoted token is always a terminal.
"""

from __future__ import annotations

import dataclasses
import logging
import typing
from pathlib import Path

from .errors import GrammarError

__all__: typing.Sequence[str] = (
    "Symbol",
    "Production",
    "Grammar",
    "Terminal",
    "Nonterminal",
    "load_grammar",
    "load_grammar_file",
    "render_grammar",
    "productions_of",
    "single_rhs_productions_of",
)

logger = logging.getLogger(__name__)

ARROWS = ("->", "→")
_RESERVED = ("|", *ARROWS)


@dataclasses.dataclass(frozen=True, slots=True)
class Symbol:
    name: str
    is_terminal: bool

    def __post_init__(self) -> None:
        if not self.name or any(c.isspace() for c in self.name):
            raise ValueError(f"invalid symbol name {self.name!r}")

    @property
    def is_nonterminal(self) -> bool:
        return not self.is_terminal

    def __str__(self) -> str:
        return f'"{self.name}"' if self.is_terminal else self.name

    def __repr__(self) -> str:
        kind = "Terminal" if self.is_terminal else "Nonterminal"
        return f"{kind}({self.name!r})"


def Terminal(name: str) -> Symbol:
    return Symbol(name, True)


def Nonterminal(name: str) -> Symbol:
    return Symbol(name, False)


@dataclasses.dataclass(frozen=True, slots=True)
class Production:
    lhs: Symbol
    rhs: tuple[Symbol, ...]

    def __post_init__(self) -> None:
        if self.lhs.is_terminal:
            raise ValueError(f"production lhs must be a nonterminal, got {self.lhs!r}")
        if not self.rhs:
            raise ValueError(f"empty right-hand side for {self.lhs.name}")

    def __len__(self) -> int:
        return len(self.rhs)

    @property
    def is_unit(self) -> bool:
        return len(self.rhs) == 1 and self.rhs[0].is_nonterminal

    @property
    def is_lexical(self) -> bool:
        return len(self.rhs) == 1 and self.rhs[0].is_terminal

    def __str__(self) -> str:
        return f"{self.lhs} → {' '.join(map(str, self.rhs))}"


class Grammar:
    """An ordered, immutable set of productions with a start symbol.

    Parameters
    ----------
    productions: Iterable[Production]
        Productions in the order traces and tree enumeration depend on.
    start: Symbol | None
        The start symbol; defaults to the lhs of the first production.
    """

    __slots__ = ("_productions", "_start", "_index")

    def __init__(
        self, productions: typing.Iterable[Production], start: Symbol | None = None
    ) -> None:
        self._productions = tuple(productions)
        if not self._productions:
            raise GrammarError("grammar has no productions, so no start symbol")
        self._start = start if start is not None else self._productions[0].lhs
        index: dict[Symbol, list[Production]] = {}
        for production in self._productions:
            index.setdefault(production.lhs, []).append(production)
        self._index = {lhs: tuple(group) for lhs, group in index.items()}
        self._validate()

    def _validate(self) -> None:
        if self._start not in self._index:
            raise GrammarError(f"start symbol {self._start.name} has no productions")
        if len(set(self._productions)) != len(self._productions):
            seen: set[Production] = set()
            for production in self._productions:
                if production in seen:
                    raise GrammarError(f"duplicate production {production}")
                seen.add(production)
        names = {lhs.name for lhs in self._index}
        for production in self._productions:
            for symbol in production.rhs:
                if symbol.is_nonterminal and symbol not in self._index:
                    raise GrammarError(
                        f"undefined nonterminal {symbol.name} in {production}"
                    )
                if symbol.is_terminal and symbol.name in names:
                    raise GrammarError(
                        f"{symbol.name} is used both as a terminal and a nonterminal"
                    )

    @property
    def productions(self) -> tuple[Production, ...]:
        return self._productions

    @property
    def start(self) -> Symbol:
        return self._start

    @property
    def nonterminals(self) -> tuple[Symbol, ...]:
        return tuple(self._index)

    @property
    def terminals(self) -> tuple[Symbol, ...]:
        seen: dict[Symbol, None] = {}
        for production in self._productions:
            for symbol in production.rhs:
                if symbol.is_terminal:
                    seen.setdefault(symbol)
        return tuple(seen)

    def symbol(self, name: str) -> Symbol | None:
        """Look a symbol up by name, nonterminals first."""
        if Nonterminal(name) in self._index:
            return Nonterminal(name)
        if Terminal(name) in self.terminals:
            return Terminal(name)
        return None

    def productions_of(self, nt: Symbol) -> tuple[Production, ...]:
        return self._index.get(nt, ())

    def single_rhs_productions_of(self, nt: Symbol) -> tuple[Production, ...]:
        return tuple(p for p in self.productions_of(nt) if len(p.rhs) == 1)

    def __iter__(self) -> typing.Iterator[Production]:
        return iter(self._productions)

    def __len__(self) -> int:
        return len(self._productions)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grammar):
            return NotImplemented
        return self._start == other._start and self._productions == other._productions

    def __hash__(self) -> int:
        return hash((self._start, self._productions))

    def __repr__(self) -> str:
        return f"Grammar(start={self._start.name}, productions={len(self)})"


def productions_of(g: Grammar, nt: Symbol) -> tuple[Production, ...]:
    return g.productions_of(nt)


def single_rhs_productions_of(g: Grammar, nt: Symbol) -> tuple[Production, ...]:
    return g.single_rhs_productions_of(nt)


def _strip_comment(line: str) -> str:
    # '#' inside a quoted terminal is kept
    quoted = False
    for i, char in enumerate(line):
        if char == '"':
            quoted = not quoted
        elif char == "#" and not quoted:
            return line[:i]
    return line


def _split_rule(line: str) -> tuple[str, str] | None:
    for arrow in ARROWS:
        lhs, sep, rest = line.partition(arrow)
        if sep:
            return lhs, rest
    return None


def _split_alternatives(text: str) -> list[list[str]]:
    alternatives: list[list[str]] = [[]]
    for token in text.split():
        if len(token) >= 2 and token[0] == token[-1] == '"':
            alternatives[-1].append(token)
            continue
        for index, part in enumerate(token.split("|")):
            if index:
                alternatives.append([])
            if part:
                alternatives[-1].append(part)
    return alternatives


def load_grammar(source: str, name: str | None = None) -> Grammar:
    """Parse grammar text into a `Grammar`.

    Raises
    ------
    GrammarError
        On syntax errors, ε-productions, duplicate productions, name clashes
        or a missing start symbol.  The offending line is reported.
    """
    start_name: str | None = None
    start_line = 0
    rules: list[tuple[str, list[list[str]], int]] = []

    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if line.startswith("%"):
            directive, *args = line.split()
            if directive != "%start" or len(args) != 1:
                raise GrammarError(f"unknown directive {line!r}", lineno, name)
            if start_name is not None:
                raise GrammarError("start symbol declared twice", lineno, name)
            start_name, start_line = args[0], lineno
            continue
        split = _split_rule(line)
        if split is None:
            raise GrammarError("expected 'LHS -> alternatives'", lineno, name)
        lhs_text, rhs_text = split
        lhs_tokens = lhs_text.split()
        if len(lhs_tokens) != 1 or lhs_tokens[0].startswith('"'):
            raise GrammarError("left-hand side must be one nonterminal name", lineno, name)
        alternatives = _split_alternatives(rhs_text)
        for alt in alternatives:
            if not alt:
                raise GrammarError(
                    f"empty alternative for {lhs_tokens[0]} (ε-productions are not supported)",
                    lineno,
                    name,
                )
        rules.append((lhs_tokens[0], alternatives, lineno))

    if not rules:
        raise GrammarError("grammar has no rules, so no start symbol", None, name)

    lhs_names = {lhs for lhs, _, _ in rules}

    def to_symbol(token: str, lineno: int) -> Symbol:
        if len(token) >= 2 and token[0] == token[-1] == '"':
            text = token[1:-1]
            if text in lhs_names:
                raise GrammarError(
                    f"{text} is used both as a terminal and a nonterminal", lineno, name
                )
            return Terminal(text)
        if token.startswith('"') or token.endswith('"'):
            raise GrammarError(f"unbalanced quote in {token!r}", lineno, name)
        return Nonterminal(token) if token in lhs_names else Terminal(token)

    productions: list[Production] = []
    seen: set[Production] = set()
    for lhs, alternatives, lineno in rules:
        for alt in alternatives:
            production = Production(
                Nonterminal(lhs), tuple(to_symbol(t, lineno) for t in alt)
            )
            if production in seen:
                raise GrammarError(f"duplicate production {production}", lineno, name)
            seen.add(production)
            productions.append(production)

    start: Symbol | None = None
    if start_name is not None:
        if start_name not in lhs_names:
            raise GrammarError(
                f"start symbol {start_name} has no productions", start_line, name
            )
        start = Nonterminal(start_name)

    grammar = Grammar(productions, start)
    logger.debug(
        "loaded grammar %s: %d productions, start %s",
        name or "<string>",
        len(grammar),
        grammar.start.name,
    )
    return grammar


def load_grammar_file(path: str | Path) -> Grammar:
    path = Path(path)
    return load_grammar(path.read_text(encoding="utf-8"), name=str(path))


def _render_symbol(symbol: Symbol) -> str:
    if symbol.is_terminal and (
        symbol.name in _RESERVED or symbol.name[0] in '"#%' or '"' in symbol.name
    ):
        return f'"{symbol.name}"'
    return symbol.name


def render_grammar(g: Grammar) -> str:
    """Render a grammar in the file format accepted by `load_grammar`.

    Consecutive productions sharing a lhs are joined on one line, so the
    production order survives a reload.
    """
    lines: list[str] = []
    if g.start != g.productions[0].lhs:
        lines.append(f"%start {g.start.name}")
    current: Symbol | None = None
    alternatives: list[str] = []
    for production in g.productions:
        if production.lhs != current and alternatives:
            lines.append(f"{current.name} -> {' | '.join(alternatives)}")  # type: ignore[union-attr]
            alternatives = []
        current = production.lhs
        alternatives.append(" ".join(_render_symbol(s) for s in production.rhs))
    lines.append(f"{current.name} -> {' | '.join(alternatives)}")  # type: ignore[union-attr]
    return "\n".join(lines) + "\n"
