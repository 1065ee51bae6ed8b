"""Classic Earley recognition with Predictor, Scanner and Completer.

Positions are processed left to right.  At each position a stack drives
Predictor and Completer to a fixpoint, taking items in creation order and
following an item's successors before its younger siblings; the Scanner then
runs over the position's items in creation order.  This order reproduces the
step numbering of the textbook trace for "I saw a man".
"""

from __future__ import annotations

import dataclasses
import logging
import typing

from ..grammar import Grammar, Production, Symbol
from ..lexicon import TaggedSentence, lexicalize
from .trace import TraceStep, render_dotted

__all__: typing.Sequence[str] = (
    "EarleyItem",
    "Chart",
    "predict",
    "scan",
    "complete",
    "recognize",
)

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, slots=True)
class EarleyItem:
    production: Production
    dot: int
    start: int
    end: int

    def __post_init__(self) -> None:
        if not 0 <= self.dot <= len(self.production.rhs):
            raise ValueError(f"dot {self.dot} out of range for {self.production}")
        if not 0 <= self.start <= self.end:
            raise ValueError(f"bad span {self.start}..{self.end}")

    @property
    def lhs(self) -> Symbol:
        return self.production.lhs

    @property
    def is_complete(self) -> bool:
        return self.dot == len(self.production.rhs)

    @property
    def next_symbol(self) -> Symbol | None:
        if self.is_complete:
            return None
        return self.production.rhs[self.dot]

    def advance(self, end: int) -> EarleyItem:
        return EarleyItem(self.production, self.dot + 1, self.start, end)

    def __str__(self) -> str:
        rhs = render_dotted(self.production.rhs, self.dot)
        return f"{self.lhs} → {rhs}, {self.start}, {self.end}"


class Chart:
    """Insertion-ordered set of items plus the numbered trace that built it."""

    def __init__(
        self, grammar: Grammar, sentence: TaggedSentence, lexical_filter: bool = True
    ) -> None:
        self.grammar = grammar
        self.sentence = sentence
        self.lexical_filter = lexical_filter
        self.n = len(sentence)
        self.steps: list[TraceStep] = []
        self._numbers: dict[EarleyItem, int] = {}
        self._by_end: list[list[EarleyItem]] = [[] for _ in range(self.n + 1)]
        self._waiting: dict[tuple[int, Symbol], list[EarleyItem]] = {}
        self._completed: dict[tuple[Symbol, int, int], list[EarleyItem]] = {}
        self.accepted = False

    @property
    def items(self) -> tuple[EarleyItem, ...]:
        return tuple(self._numbers)

    def __contains__(self, item: object) -> bool:
        return item in self._numbers

    def __len__(self) -> int:
        return len(self._numbers)

    def step_of(self, item: EarleyItem) -> int:
        return self._numbers[item]

    def items_ending_at(self, position: int) -> tuple[EarleyItem, ...]:
        return tuple(self._by_end[position])

    def waiting_for(self, symbol: Symbol, position: int) -> tuple[EarleyItem, ...]:
        """Items ending at ``position`` whose dot sits before ``symbol``."""
        return tuple(self._waiting.get((position, symbol), ()))

    def completed(self, lhs: Symbol, start: int, end: int) -> tuple[EarleyItem, ...]:
        return tuple(self._completed.get((lhs, start, end), ()))

    def accepting_items(self) -> tuple[EarleyItem, ...]:
        return self.completed(self.grammar.start, 0, self.n)

    def add(self, item: EarleyItem, action: str) -> bool:
        if item in self._numbers:
            return False
        number = len(self.steps) + 1
        self._numbers[item] = number
        self.steps.append(TraceStep(number, item, action))
        self._by_end[item.end].append(item)
        symbol = item.next_symbol
        if symbol is None:
            self._completed.setdefault((item.lhs, item.start, item.end), []).append(item)
            if item.lhs == self.grammar.start and item.start == 0 and item.end == self.n:
                self.accepted = True
        else:
            self._waiting.setdefault((item.end, symbol), []).append(item)
        return True


def predict(chart: Chart, item: EarleyItem, g: Grammar) -> list[EarleyItem]:
    symbol = item.next_symbol
    if symbol is None or symbol.is_terminal:
        return []
    j = item.end
    source = chart.step_of(item)
    added = []
    for production in g.productions_of(symbol):
        if (
            chart.lexical_filter
            and production.is_lexical
            and not chart.sentence.matches(production.rhs[0], j)
        ):
            continue
        new = EarleyItem(production, 0, j, j)
        if chart.add(new, f"Predictor(from step {source})"):
            added.append(new)
    return added


def scan(chart: Chart, item: EarleyItem, sentence: TaggedSentence) -> list[EarleyItem]:
    symbol = item.next_symbol
    if symbol is None or not sentence.matches(symbol, item.end):
        return []
    new = item.advance(item.end + 1)
    if chart.add(new, f"Scanner(from step {chart.step_of(item)})"):
        return [new]
    return []


def complete(chart: Chart, item: EarleyItem) -> list[EarleyItem]:
    if not item.is_complete:
        return []
    source = chart.step_of(item)
    added = []
    for customer in chart.waiting_for(item.lhs, item.start):
        new = customer.advance(item.end)
        if chart.add(new, f"Completer(step {source} with step {chart.step_of(customer)})"):
            added.append(new)
    return added


def recognize(
    g: Grammar,
    sentence: TaggedSentence,
    *,
    lexical_filter: bool = True,
    stop_at_accept: bool = False,
) -> tuple[bool, Chart]:
    """Run the recognizer; rejection is a normal result, not an error.

    Parameters
    ----------
    lexical_filter: bool
        Skip predicting ``B -> w`` when the terminal ``w`` does not match the
        next token.
    stop_at_accept: bool
        Stop as soon as an item ``[S -> α., 0, n]`` is added.
    """
    g = lexicalize(g, sentence)
    chart = Chart(g, sentence, lexical_filter)
    for production in g.productions_of(g.start):
        chart.add(EarleyItem(production, 0, 0, 0), "Initialization")

    for j in range(chart.n + 1):
        stack = list(reversed(chart.items_ending_at(j)))
        while stack:
            if stop_at_accept and chart.accepted:
                break
            item = stack.pop()
            if item.is_complete:
                new = complete(chart, item)
            else:
                new = predict(chart, item, g)
            stack.extend(reversed(new))
        if stop_at_accept and chart.accepted:
            break
        for item in chart.items_ending_at(j):
            scan(chart, item, sentence)

    logger.debug(
        "chart for %r: %d items, %s",
        str(sentence),
        len(chart),
        "accepted" if chart.accepted else "rejected",
    )
    return chart.accepted, chart
