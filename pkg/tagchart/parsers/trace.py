"""Trace lines shared by both parsers: ``<step>\\t[<item>]\\t<action>``."""

from __future__ import annotations

import dataclasses
import typing

from ..grammar import Symbol

__all__: typing.Sequence[str] = ("TraceStep", "render_dotted", "render_trace")


@dataclasses.dataclass(frozen=True, slots=True)
class TraceStep:
    number: int
    item: object
    action: str

    def __str__(self) -> str:
        return f"{self.number}\t[{self.item}]\t{self.action}"


def render_dotted(rhs: typing.Sequence[Symbol], dot: int) -> str:
    """``NP .VP`` style right-hand side; a complete rhs ends in `` .``."""
    parts = [str(s) for s in rhs[:dot]]
    if dot < len(rhs):
        parts.append("." + str(rhs[dot]))
        parts.extend(str(s) for s in rhs[dot + 1 :])
    else:
        parts.append(".")
    return " ".join(parts)


def render_trace(steps: typing.Iterable[TraceStep]) -> str:
    return "".join(f"{step}\n" for step in steps)
