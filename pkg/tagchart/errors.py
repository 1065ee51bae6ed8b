from __future__ import annotations

import typing

__all__: typing.Sequence[str] = (
    "TagchartError",
    "GrammarError",
    "LexiconError",
    "UnknownWordError",
    "StartProductionError",
    "NoParseError",
    "OracleBoundError",
    "CorpusError",
)


class TagchartError(Exception):
    """Base class for every error raised by tagchart."""


class _LineError(TagchartError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.message = message
        self.line = line
        self.source = source
        super().__init__(str(self))

    def __str__(self) -> str:
        where = self.source or "<string>"
        if self.line is not None:
            return f"{where}:{self.line}: {self.message}"
        return f"{where}: {self.message}"


class GrammarError(_LineError):
    """The grammar text is malformed or violates a structural constraint."""


class LexiconError(_LineError):
    """The lexicon text is malformed or declares a disallowed tag."""


class CorpusError(_LineError):
    """The corpus file is malformed."""


class UnknownWordError(TagchartError):
    """Lexical Analysis failed for one or more words."""

    def __init__(self, words: typing.Sequence[str]):
        self.words = tuple(words)
        super().__init__("unknown word(s): " + ", ".join(self.words))


class StartProductionError(TagchartError):
    """The grammar lacks the start productions the modified parser seeds from."""


class NoParseError(TagchartError):
    """Trees were requested for a sentence that was not recognized."""


class OracleBoundError(TagchartError):
    def __init__(self, length: int, bound: int):
        self.length = length
        self.bound = bound
        super().__init__(f"target length {length} exceeds oracle bound {bound}")
