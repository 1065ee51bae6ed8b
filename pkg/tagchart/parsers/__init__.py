import typing

from .chart import Chart, EarleyItem, recognize
from .freeword import Derivation, FreewordOptions, FreewordRun, SententialItem, parse, parse_sentence
from .oracle import DerivationNode, count_derivations, derives, enumerate_derivations
from .trace import TraceStep, render_trace

__all__: typing.Sequence[str] = (
    "Chart",
    "EarleyItem",
    "recognize",
    "Derivation",
    "FreewordOptions",
    "FreewordRun",
    "SententialItem",
    "parse",
    "parse_sentence",
    "DerivationNode",
    "count_derivations",
    "derives",
    "enumerate_derivations",
    "TraceStep",
    "render_trace",
)
