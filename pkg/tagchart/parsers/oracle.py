"""Brute-force derivation search used to check both parsers on short inputs.

A state is the number of tokens matched so far plus the pending suffix of the
leftmost sentential form.  Without ε-productions every pending symbol covers at
least one token, so a state whose pending part is longer than the unmatched
input is dead and the search space is finite.
"""

from __future__ import annotations

import collections
import dataclasses
import itertools
import typing

from ..config import CONFIG
from ..errors import OracleBoundError
from ..grammar import Grammar, Production, Symbol
from ..lexicon import TaggedSentence, lexicalize

__all__: typing.Sequence[str] = (
    "DerivationNode",
    "derives",
    "enumerate_derivations",
    "count_derivations",
)

State = tuple[int, tuple[Symbol, ...]]


@dataclasses.dataclass(frozen=True, slots=True)
class DerivationNode:
    """A leftmost sentential form and the step that produced it."""

    form: tuple[Symbol, ...]
    production: Production | None = None
    site: int = 0


def _check_bound(sentence: TaggedSentence, max_length: int | None) -> None:
    bound = int(CONFIG.ORACLE_MAX_LENGTH) if max_length is None else max_length
    if len(sentence) > bound:
        raise OracleBoundError(len(sentence), bound)


def _moves(
    g: Grammar, sentence: TaggedSentence, state: State
) -> typing.Iterator[tuple[State, Production | None]]:
    k, pending = state
    n = len(sentence)
    head, rest = pending[0], pending[1:]
    if head.is_nonterminal:
        for production in g.productions_of(head):
            new = production.rhs + rest
            if k + len(new) <= n:
                yield (k, new), production
    if sentence.matches(head, k):
        yield (k + 1, rest), None


def derives(
    g: Grammar, sentence: TaggedSentence, *, max_length: int | None = None
) -> bool:
    """True when the start symbol derives ``sentence``.

    Raises
    ------
    OracleBoundError
        If the sentence is longer than ``max_length`` (``ORACLE_MAX_LENGTH``).
    """
    _check_bound(sentence, max_length)
    g = lexicalize(g, sentence)
    n = len(sentence)
    start: State = (0, (g.start,))
    visited = {start}
    queue = collections.deque([start])
    while queue:
        state = queue.popleft()
        if not state[1]:
            if state[0] == n:
                return True
            continue
        for successor, _ in _moves(g, sentence, state):
            if successor not in visited:
                visited.add(successor)
                queue.append(successor)
    return False


def enumerate_derivations(
    g: Grammar,
    sentence: TaggedSentence,
    limit: int | None = None,
    *,
    max_length: int | None = None,
) -> typing.Iterator[tuple[DerivationNode, ...]]:
    """Leftmost derivations of ``sentence``, as the forms they pass through.

    A derivation that revisits a state is skipped, so each unit-production
    cycle contributes at most once.
    """
    _check_bound(sentence, max_length)
    g = lexicalize(g, sentence)
    n = len(sentence)

    def walk(
        state: State, nodes: list[DerivationNode], on_path: set[State]
    ) -> typing.Iterator[tuple[DerivationNode, ...]]:
        k, pending = state
        if not pending:
            if k == n:
                yield tuple(nodes)
            return
        for successor, production in _moves(g, sentence, state):
            if successor in on_path:
                continue
            if production is not None:
                # matches leave the form alone, so the prefix is the last form's
                form = nodes[-1].form[:k] + successor[1]
                nodes.append(DerivationNode(form, production, k))
            on_path.add(successor)
            yield from walk(successor, nodes, on_path)
            on_path.discard(successor)
            if production is not None:
                nodes.pop()

    start: State = (0, (g.start,))
    return itertools.islice(walk(start, [DerivationNode((g.start,))], {start}), limit)


def count_derivations(
    g: Grammar,
    sentence: TaggedSentence,
    limit: int | None = None,
    *,
    max_length: int | None = None,
) -> int:
    """Distinct derivations of ``sentence``, counting stops at ``limit``."""
    seen: set[tuple[tuple[int, Production | None], ...]] = set()
    for nodes in enumerate_derivations(g, sentence, max_length=max_length):
        seen.add(tuple((node.site, node.production) for node in nodes))
        if limit is not None and len(seen) >= limit:
            break
    return len(seen)
