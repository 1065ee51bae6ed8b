"""Parse trees rebuilt from successful runs, and their text renderings.

Trees are ``nltk`` immutable trees labelled with symbol names, with the input
words (or tags) as leaves.  The listing walks a tree in pre-order::

    1. S
    2. [S --> (PP VP)]
    3. [PP --> (NP)]VP
    4. [NP --> (PP NP)]VP
    5. [PP --> (PN NP)]NP VP
    6. [PN --> (pn : mai)]NP NP VP
    7. [NP]NP VP

Each line is followed by the symbols still waiting to the right.  A child that
is not the first of its parent is announced on its own line before it is
expanded.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging
import sys
import typing

from nltk.tree import ImmutableTree, Tree

from .config import CONFIG
from .errors import NoParseError
from .grammar import Production, Symbol
from .lexicon import TaggedSentence
from .parsers.chart import Chart
from .parsers.freeword import FreewordRun

__all__: typing.Sequence[str] = (
    "ParseTree",
    "TreeSet",
    "tree_from_history",
    "trees_from_freeword",
    "trees_from_chart",
    "render_tree",
    "render_sexpr",
)

logger = logging.getLogger(__name__)

ParseTree = ImmutableTree
Subtree = typing.Union[ImmutableTree, str]


@dataclasses.dataclass(frozen=True, slots=True)
class TreeSet:
    """Distinct trees, preferred first; ``truncated`` when the limit cut more off."""

    trees: tuple[ParseTree, ...]
    truncated: bool = False

    def __iter__(self) -> typing.Iterator[ParseTree]:
        return iter(self.trees)

    def __len__(self) -> int:
        return len(self.trees)

    def __getitem__(self, index: int) -> ParseTree:
        return self.trees[index]


class _Node:
    __slots__ = ("label", "children")

    def __init__(self, label: Symbol) -> None:
        self.label = label
        self.children: list[_Node] = []

    def freeze(self, words: typing.Iterator[str]) -> Subtree:
        if not self.children:
            return next(words)
        return ImmutableTree(self.label.name, [c.freeze(words) for c in self.children])


def tree_from_history(
    start: Symbol,
    history: typing.Iterable[tuple[int, Production]],
    sentence: TaggedSentence,
) -> ParseTree:
    """Replay ``(site, production)`` expansions of the frontier into a tree.

    ``site`` indexes the frontier of the tree built so far, which is exactly
    the right-hand side of a modified-mode item.
    """
    root = _Node(start)
    frontier = [root]
    for site, production in history:
        node = frontier[site]
        if node.label != production.lhs or node.children:
            raise ValueError(f"cannot apply {production} at frontier position {site}")
        node.children = [_Node(symbol) for symbol in production.rhs]
        frontier[site : site + 1] = node.children
    if len(frontier) != len(sentence) or not all(
        sentence.matches(node.label, i) for i, node in enumerate(frontier)
    ):
        raise ValueError("history does not derive the sentence")
    tree = root.freeze(iter(sentence.words))
    if not isinstance(tree, ImmutableTree):
        raise ValueError("history applies no production")
    return tree


def _collect(candidates: typing.Iterable[Subtree], limit: int | None) -> TreeSet:
    limit = int(CONFIG.TREE_LIMIT) if limit is None else limit
    seen: dict[ParseTree, None] = {}
    for tree in candidates:
        if not isinstance(tree, ImmutableTree) or tree in seen:
            continue
        if len(seen) == limit:
            return TreeSet(tuple(seen), truncated=True)
        seen[tree] = None
    return TreeSet(tuple(seen))


def trees_from_freeword(
    run: FreewordRun, limit: int | None = None, *, ranked: bool = True
) -> TreeSet:
    """Trees of every derivation, the goal path's tree first when ``ranked``."""
    if not run.successes:
        raise NoParseError(f"no parse for {run.sentence}")
    derivations = run.derivations()
    if ranked:
        goal = run.goal_path()
        derivations = itertools.chain([goal] if goal is not None else [], derivations)
    candidates = (
        tree_from_history(run.grammar.start, derivation.history, run.sentence)
        for derivation in derivations
    )
    trees = _collect(candidates, limit)
    logger.debug("%d tree(s) from modified run, truncated=%s", len(trees), trees.truncated)
    return trees


def trees_from_chart(chart: Chart, limit: int | None = None) -> TreeSet:
    """Split each completed item's span over its right-hand side, top-down.

    A (symbol, start, end) triple already being expanded higher up is not
    entered again, which cuts unit-production cycles.
    """
    if not chart.accepted:
        raise NoParseError(f"no parse for {chart.sentence}")
    sentence = chart.sentence
    words = sentence.words

    Guard = frozenset[tuple[Symbol, int, int]]

    def spans(symbol: Symbol, i: int, k: int, guard: Guard) -> typing.Iterator[Subtree]:
        if k == i + 1 and sentence.matches(symbol, i):
            yield words[i]
        if symbol.is_terminal or (symbol, i, k) in guard:
            return
        inner = guard | {(symbol, i, k)}
        for item in chart.completed(symbol, i, k):
            for children in splits(item.production.rhs, i, k, inner):
                yield ImmutableTree(symbol.name, list(children))

    def splits(
        rhs: tuple[Symbol, ...], i: int, k: int, guard: Guard
    ) -> typing.Iterator[tuple[Subtree, ...]]:
        if not rhs:
            if i == k:
                yield ()
            return
        head, rest = rhs[0], rhs[1:]
        for m in range(i + 1, k - len(rest) + 1):
            for tree in spans(head, i, m, guard):
                for tail in splits(rest, m, k, guard):
                    yield (tree, *tail)

    trees = _collect(spans(chart.grammar.start, 0, chart.n, frozenset()), limit)
    logger.debug("%d tree(s) from chart, truncated=%s", len(trees), trees.truncated)
    return trees


def _name(node: Subtree) -> str:
    return node.label() if isinstance(node, Tree) else node


def render_tree(tree: ParseTree) -> str:
    lines = [tree.label()]

    def visit(node: Subtree, context: tuple[str, ...], announce: bool) -> None:
        if not isinstance(node, Tree):
            return
        label = node.label()
        pending = " ".join(context)
        if announce:
            lines.append(f"[{label}]{pending}")
        if len(node) == 1 and not isinstance(node[0], Tree):
            lines.append(f"[{label} --> ({label.lower()} : {node[0]})]{pending}")
            return
        labels = tuple(_name(child) for child in node)
        lines.append(f"[{label} --> ({' '.join(labels)})]{pending}")
        for index, child in enumerate(node):
            visit(child, labels[index + 1 :] + context, index > 0)

    visit(tree, (), False)
    return "".join(f"{number}. {line}\n" for number, line in enumerate(lines, 1))


def render_sexpr(tree: ParseTree) -> str:
    """The bracketed form on a single line, e.g. ``(S (PP (PN mai)) (VP jAm))``."""
    return tree.pformat(margin=sys.maxsize)
