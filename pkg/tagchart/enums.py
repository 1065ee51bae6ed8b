from __future__ import annotations

import typing
from enum import Enum

__all__: typing.Sequence[str] = ("ParseMode", "TraceLevel", "TreeFormat", "InputKind")


class _Described(str, Enum):
    def __new__(cls, *args, **kwargs):
        obj = str.__new__(cls, args[0])
        obj._value_ = args[0]
        return obj

    def __init__(self, _: str, description: str):
        self._description_ = description

    def __str__(self) -> str:
        return self.value

    # this makes sure that the description is read-only
    @property
    def description(self) -> str:
        return self._description_


@typing.final
class ParseMode(_Described):
    STANDARD = "standard", "Classic Earley recognizer over dotted items."
    MODIFIED = "modified", "Two-phase Earley variant for free-word-order input."


@typing.final
class TraceLevel(_Described):
    NONE = "none", "No trace output."
    GOAL = "goal", "Only the steps on the path to success."
    FULL = "full", "Every generated item."


@typing.final
class TreeFormat(_Described):
    LISTING = "listing", "Numbered tree listing."
    SEXPR = "sexpr", "Bracketed S-expression, one tree per line."


@typing.final
class InputKind(_Described):
    WORDS = "words", "Words tagged through the lexicon."
    TAGS = "tags", "A pre-tagged sequence of POS tags."
