"""Two-phase Earley variant for free-word-order sentences.

Every item is a single evolving right-hand side under the start symbol.
Phase 1 replaces the symbol after the dot by the right-hand side of one of its
productions, in place; Phase 2 moves the dot over a terminal that matches the
next token.  Three deviations from Earley apply to Phase 1:

1. left-recursive productions are expanded like any other;
2. a successor longer than the sentence is discarded;
3. while the last word is being analysed only productions with a
   single-symbol right-hand side are used.

Identical items (same rhs, dot and position) are generated once.  A duplicate
adds a derivation edge to the existing item, so every derivation stays
reachable for tree enumeration while the item space stays finite.  Unless
``lookahead_pruning`` is off, an item whose pending symbols cannot cover the
rest of the sentence is never generated.
"""

from __future__ import annotations

import collections
import dataclasses
import itertools
import logging
import typing

from ..config import CONFIG
from ..errors import StartProductionError
from ..grammar import Grammar, Production, Symbol
from ..lexicon import Lexicon, TaggedSentence, lexicalize, tag_sentence
from .trace import TraceStep, render_dotted

__all__: typing.Sequence[str] = (
    "FreewordOptions",
    "SententialItem",
    "Derivation",
    "FreewordRun",
    "initialize",
    "seed_items",
    "expand",
    "scan_terminal",
    "Lookahead",
    "parse",
    "parse_sentence",
)

logger = logging.getLogger(__name__)

ItemKey = tuple[tuple[Symbol, ...], int, int]
# (parent key, production or None for a scan, site of the rewritten symbol)
Edge = tuple[ItemKey, "Production | None", int]

PHASE_1 = "Apply Phase 1"
PHASE_2 = "Apply Phase 2"
COMPLETE = "Complete"
INITIALIZATION = "Initialization"


@dataclasses.dataclass(frozen=True)
class FreewordOptions:
    first_success: bool = False
    last_word_restriction: bool = True
    length_pruning: bool = True
    lookahead_pruning: bool = True
    verb_conditional: bool = True
    verb_tag: str = dataclasses.field(default_factory=lambda: str(CONFIG.VERB_TAG))


@dataclasses.dataclass(frozen=True, slots=True, eq=False)
class SententialItem:
    lhs: Symbol
    rhs: tuple[Symbol, ...]
    dot: int
    pos: int
    production: Production | None = None
    site: int = 0
    parent: SententialItem | None = None
    start: int = 0

    def __post_init__(self) -> None:
        if self.dot != self.pos - self.start:
            raise AssertionError(f"dot {self.dot} out of step with position {self.pos}")

    @property
    def key(self) -> ItemKey:
        return (self.rhs, self.dot, self.pos)

    @property
    def is_complete(self) -> bool:
        return self.dot == len(self.rhs)

    @property
    def next_symbol(self) -> Symbol | None:
        return None if self.is_complete else self.rhs[self.dot]

    @property
    def history(self) -> tuple[tuple[int, Production], ...]:
        """Expansions from the start symbol to this item, oldest first."""
        steps: list[tuple[int, Production]] = []
        item: SententialItem | None = self
        while item is not None:
            if item.production is not None:
                steps.append((item.site, item.production))
            item = item.parent
        return tuple(reversed(steps))

    def __str__(self) -> str:
        return f"{self.lhs} → {render_dotted(self.rhs, self.dot)}, {self.start}, {self.pos}"


@dataclasses.dataclass(frozen=True, slots=True)
class Derivation:
    """One path from a seed item to a success, with the expansions it applied."""

    items: tuple[SententialItem, ...]
    history: tuple[tuple[int, Production], ...]
    actions: tuple[str, ...]

    def trace(self) -> list[TraceStep]:
        return [
            TraceStep(number, item, action)
            for number, (item, action) in enumerate(zip(self.items, self.actions), 1)
        ]


def _verb_productions(
    g: Grammar, verb_tag: str
) -> tuple[Production | None, Production | None]:
    with_verb = without_verb = None
    for production in g.productions_of(g.start):
        names = [s.name for s in production.rhs]
        if with_verb is None and len(names) > 1 and names[-1] == verb_tag:
            with_verb = production
        if without_verb is None and verb_tag not in names:
            without_verb = production
    return with_verb, without_verb


def initialize(
    g: Grammar, sentence: TaggedSentence, verb_tag: str | None = None
) -> SententialItem:
    """Seed ``[S -> .PP VP, 0, 0]`` when a verb is present, else ``[S -> .PP, 0, 0]``."""
    verb_tag = verb_tag or str(CONFIG.VERB_TAG)
    with_verb, without_verb = _verb_productions(g, verb_tag)
    if sentence.contains_verb(verb_tag):
        production, wanted = with_verb, f"{g.start.name} -> ... {verb_tag}"
    else:
        production, wanted = without_verb, f"{g.start.name} -> ... without {verb_tag}"
    if production is None:
        raise StartProductionError(f"grammar has no start production {wanted}")
    return SententialItem(g.start, production.rhs, 0, 0, production, 0)


def seed_items(
    g: Grammar, sentence: TaggedSentence, options: FreewordOptions
) -> list[SententialItem]:
    if options.verb_conditional:
        return [initialize(g, sentence, options.verb_tag)]
    return [
        SententialItem(g.start, p.rhs, 0, 0, p, 0) for p in g.productions_of(g.start)
    ]


def expand(
    item: SententialItem,
    g: Grammar,
    n: int,
    *,
    last_word_restriction: bool = True,
    length_pruning: bool = True,
    seen: typing.Container[ItemKey] | None = None,
) -> list[SententialItem]:
    """Phase 1: rewrite the nonterminal after the dot in place."""
    symbol = item.next_symbol
    if symbol is None or symbol.is_nonterminal is False:
        return []
    if last_word_restriction and item.pos == n - 1:
        productions = g.single_rhs_productions_of(symbol)
    else:
        productions = g.productions_of(symbol)
    successors = []
    for production in productions:
        rhs = item.rhs[: item.dot] + production.rhs + item.rhs[item.dot + 1 :]
        if length_pruning and len(rhs) > n:
            continue
        if seen is not None and (rhs, item.dot, item.pos) in seen:
            continue
        successors.append(
            SententialItem(
                item.lhs, rhs, item.dot, item.pos, production, item.dot, item, item.start
            )
        )
    return successors


def scan_terminal(
    item: SententialItem, sentence: TaggedSentence
) -> SententialItem | None:
    """Phase 2: step over the symbol after the dot if it matches token ``pos``."""
    symbol = item.next_symbol
    if symbol is None or not sentence.matches(symbol, item.pos):
        return None
    return SententialItem(
        item.lhs, item.rhs, item.dot + 1, item.pos + 1, None, item.dot, item, item.start
    )


class Lookahead:
    """A necessary condition for a pending suffix to derive the rest of the input.

    Every pending symbol takes at least one token, and the first token it takes
    must match it or one of its left corners.  Symbols after a nonterminal may
    start anywhere later, so the earliest match is assumed.
    """

    def __init__(self, g: Grammar, sentence: TaggedSentence) -> None:
        self.sentence = sentence
        corners: dict[Symbol, set[Symbol]] = {nt: {nt} for nt in g.nonterminals}
        changed = True
        while changed:
            changed = False
            for production in g.productions:
                first = production.rhs[0]
                extra = corners[first] if first.is_nonterminal else {first}
                if not extra <= corners[production.lhs]:
                    corners[production.lhs] |= extra
                    changed = True
        self._starts = [
            frozenset(
                nt
                for nt, found in corners.items()
                if any(sentence.matches(s, i) for s in found)
            )
            for i in range(len(sentence))
        ]

    def can_start(self, symbol: Symbol, position: int) -> bool:
        if symbol.is_terminal:
            return self.sentence.matches(symbol, position)
        return position < len(self._starts) and symbol in self._starts[position]

    def viable(self, item: SententialItem) -> bool:
        n = len(self.sentence)
        i, stretchy = item.pos, False
        for symbol in item.rhs[item.dot :]:
            if stretchy:
                i = next((j for j in range(i, n) if self.can_start(symbol, j)), n)
            elif not self.can_start(symbol, i):
                return False
            if i >= n:
                return False
            i += 1
            stretchy = stretchy or symbol.is_nonterminal
        return stretchy or i == n


class FreewordRun:
    """Items, successes and derivation edges of one modified-mode parse."""

    def __init__(
        self, grammar: Grammar, sentence: TaggedSentence, options: FreewordOptions
    ) -> None:
        self.grammar = grammar
        self.sentence = sentence
        self.options = options
        self.n = len(sentence)
        self.items: dict[ItemKey, SententialItem] = {}
        self.successes: list[SententialItem] = []
        self.seeds: list[SententialItem] = []
        self._edges: dict[ItemKey, list[Edge]] = {}
        self.duplicates = 0
        self._rank: dict[Production, int] = {}
        for lhs in grammar.nonterminals:
            for index, production in enumerate(grammar.productions_of(lhs)):
                self._rank[production] = index

    @property
    def accepted(self) -> bool:
        return bool(self.successes)

    @property
    def steps(self) -> list[TraceStep]:
        return [
            TraceStep(
                number, item, INITIALIZATION if item.parent is None else self._action(item)
            )
            for number, item in enumerate(self.items.values(), 1)
        ]

    def _action(self, item: SententialItem) -> str:
        symbol = item.next_symbol
        if symbol is None:
            return COMPLETE
        return PHASE_1 if symbol.is_nonterminal else PHASE_2

    def add(self, item: SententialItem) -> bool:
        if item.dot != item.pos:
            raise AssertionError(f"{item}: dot and position out of step")
        if item.parent is None:
            edge = None
        else:
            edge = (item.parent.key, item.production, item.site)
        key = item.key
        if key in self.items:
            self.duplicates += 1
            if edge is not None and edge not in self._edges[key]:
                self._edges[key].append(edge)
            return False
        self.items[key] = item
        self._edges[key] = [edge] if edge is not None else []
        if item.parent is None:
            self.seeds.append(item)
        if item.is_complete and item.pos == self.n:
            self.successes.append(item)
        return True

    def __contains__(self, key: object) -> bool:
        return key in self.items

    def __len__(self) -> int:
        return len(self.items)

    def _derivation(self, keys: typing.Sequence[ItemKey], edges: typing.Sequence[Edge]) -> Derivation:
        items = tuple(self.items[k] for k in keys)
        seed = items[0]
        assert seed.production is not None
        history = [(0, seed.production)]
        actions = []
        for (_, production, site) in edges:
            if production is None:
                actions.append(PHASE_2)
            else:
                actions.append(PHASE_1)
                history.append((site, production))
        actions.append(self._action(items[-1]))
        return Derivation(items, tuple(history), tuple(actions))

    def derivations(self, limit: int | None = None) -> typing.Iterator[Derivation]:
        """Every derivation reaching a success, primary derivations first.

        A derivation that would revisit an item is skipped; those only differ
        by unit-production cycles.
        """
        found = itertools.chain.from_iterable(self._walk_back(s.key) for s in self.successes)
        return itertools.islice(found, limit)

    def _walk_back(self, target: ItemKey) -> typing.Iterator[Derivation]:
        seeds = {seed.key for seed in self.seeds}
        keys = [target]
        edges: list[Edge] = []
        on_path = {target}

        def walk(key: ItemKey) -> typing.Iterator[Derivation]:
            if key in seeds:
                yield self._derivation(keys[::-1], edges[::-1])
            for edge in self._edges[key]:
                parent = edge[0]
                if parent in on_path:
                    continue
                on_path.add(parent)
                keys.append(parent)
                edges.append(edge)
                yield from walk(parent)
                edges.pop()
                keys.pop()
                on_path.discard(parent)

        return walk(target)

    def path(self, item: SententialItem) -> Derivation | None:
        """How the parser first reached ``item``, or None if it never did."""
        if item.key not in self.items:
            return None
        return next(self._walk_back(item.key), None)

    def goal_path(self) -> Derivation | None:
        """The preferred derivation of a success, or None without one.

        Derivations are ranked by the shape of their tree.  The most balanced
        bracketing wins, then the one with the fewest unit expansions, then the
        one whose latest-listed productions come earliest in the grammar.  Ties
        keep discovery order, so the choice is the same on every run.
        """
        return min(self.derivations(), key=self.preference, default=None)

    def preference(self, derivation: Derivation) -> tuple[int, int, list[int]]:
        children: dict[int, list[int]] = {}
        frontier = [0]
        count = 1
        for site, production in derivation.history:
            kids = list(range(count, count + len(production.rhs)))
            count += len(kids)
            children[frontier[site]] = kids
            frontier[site : site + 1] = kids
        # node ids grow downwards, so children are sized before their parent
        sizes: dict[int, int] = {}
        for node in sorted(children, reverse=True):
            sizes[node] = sum(sizes.get(kid, 1) for kid in children[node])
        imbalance = unary = 0
        for kids in children.values():
            spans = [sizes.get(kid, 1) for kid in kids]
            imbalance += max(spans) - min(spans)
            if len(kids) == 1 and kids[0] in children:
                unary += 1
        ranks = sorted((self._rank.get(p, 0) for _, p in derivation.history), reverse=True)
        return imbalance, unary, ranks

    def follow(self, steps: typing.Sequence[Production | None]) -> Derivation:
        """Walk a given derivation through this run's item graph.

        ``steps`` lists the production applied at each Phase 1 step and
        ``None`` for each Phase 2 step.

        Raises
        ------
        LookupError
            If the parser never generated one of the items or moves.
        """
        if len(self.seeds) != 1:
            raise LookupError("follow needs a run with a single seed item")
        current = self.seeds[0]
        keys = [current.key]
        edges: list[Edge] = []
        for step in steps:
            if step is None:
                successor = scan_terminal(current, self.sentence)
                if successor is None:
                    raise LookupError(f"cannot scan from [{current}]")
            else:
                if current.next_symbol != step.lhs:
                    raise LookupError(f"[{current}] does not expand {step.lhs}")
                rhs = current.rhs[: current.dot] + step.rhs + current.rhs[current.dot + 1 :]
                successor = SententialItem(
                    current.lhs, rhs, current.dot, current.pos, step, current.dot, current
                )
            edge = (current.key, step, current.dot)
            if successor.key not in self.items or edge not in self._edges[successor.key]:
                raise LookupError(f"the parser did not generate [{successor}] from [{current}]")
            current = self.items[successor.key]
            keys.append(current.key)
            edges.append(edge)
        if current not in self.successes:
            raise LookupError(f"[{current}] is not a success")
        return self._derivation(keys, edges)


def parse_sentence(
    g: Grammar, sentence: TaggedSentence, options: FreewordOptions | None = None
) -> FreewordRun:
    """Run the modified parser on an already tagged sentence."""
    options = options or FreewordOptions()
    grammar = lexicalize(g, sentence)
    run = FreewordRun(grammar, sentence, options)
    queue: collections.deque[SententialItem] = collections.deque()
    for seed in seed_items(grammar, sentence, options):
        if run.add(seed):
            queue.append(seed)

    n = run.n
    lookahead = Lookahead(grammar, sentence) if options.lookahead_pruning else None
    while queue and not (options.first_success and run.successes):
        item = queue.popleft()
        if item.is_complete:
            continue
        successors = expand(
            item,
            grammar,
            n,
            last_word_restriction=options.last_word_restriction,
            length_pruning=options.length_pruning,
        )
        scanned = scan_terminal(item, sentence)
        if scanned is not None:
            successors.append(scanned)
        for successor in successors:
            if successor.is_complete and successor.pos != n:
                continue
            if lookahead is not None and not lookahead.viable(successor):
                continue
            if run.add(successor):
                queue.append(successor)
                if options.first_success and run.successes:
                    break

    logger.debug(
        "modified parse of %r (%s): %d items, %d duplicates, %d successes",
        str(sentence),
        sentence.kind,
        len(run),
        run.duplicates,
        len(run.successes),
    )
    return run


def parse(
    g: Grammar,
    lex: Lexicon,
    words: typing.Sequence[str],
    options: FreewordOptions | None = None,
) -> FreewordRun:
    """Lexical Analysis followed by the modified parse.

    Raises
    ------
    UnknownWordError
        If any word is missing from the lexicon.
    """
    return parse_sentence(g, tag_sentence(lex, words), options)


