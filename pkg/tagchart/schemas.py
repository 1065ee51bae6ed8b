from __future__ import annotations

import typing
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field

from tagchart.config import CONFIG
from tagchart.enums import InputKind, ParseMode, TraceLevel, TreeFormat

__all__: typing.Sequence[str] = ("RunConfig", "CorpusEntry", "CorpusResult", "DEFAULT_FILES")

DEFAULT_FILES: typing.Final[dict[ParseMode, tuple[str, str]]] = {
    ParseMode.STANDARD: ("english.cfg", "english.lex"),
    ParseMode.MODIFIED: ("assamese.cfg", "assamese.lex"),
}


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    grammar: Path | None = None
    lexicon: Path | None = None
    data_dir: Path = Field(default_factory=lambda: Path(CONFIG.DATA_DIR))
    mode: ParseMode = ParseMode.MODIFIED
    words: tuple[str, ...] = ()
    tags: bool = False
    first: bool = False
    last_word_restriction: bool = True
    verb_conditional: bool = True
    trace: TraceLevel = TraceLevel.NONE
    tree_format: TreeFormat = TreeFormat.LISTING
    tree_limit: int = Field(default_factory=lambda: int(CONFIG.TREE_LIMIT), ge=1)

    @property
    def input_kind(self) -> InputKind:
        return InputKind.TAGS if self.tags else InputKind.WORDS

    @property
    def grammar_path(self) -> Path:
        return self.grammar or self.data_dir / DEFAULT_FILES[self.mode][0]

    @property
    def lexicon_path(self) -> Path:
        return self.lexicon or self.data_dir / DEFAULT_FILES[self.mode][1]


class CorpusEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    sentence: str
    kind: InputKind = InputKind.WORDS
    expect_accept: bool
    comment: str = ""
    line: int | None = None

    @property
    def tokens(self) -> list[str]:
        return self.sentence.split()

    @property
    def expected(self) -> str:
        return "accept" if self.expect_accept else "reject"


class CorpusResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    entry: CorpusEntry
    mode: ParseMode = ParseMode.MODIFIED
    standard: bool
    modified: bool
    modified_unrestricted: bool
    parses: int = 0
    error: str | None = None

    @property
    def disagreement(self) -> bool:
        return len({self.standard, self.modified, self.modified_unrestricted}) > 1

    @property
    def verdict(self) -> bool:
        return self.standard if self.mode is ParseMode.STANDARD else self.modified

    @property
    def passed(self) -> bool:
        return self.error is None and self.verdict == self.entry.expect_accept

    @property
    def status(self) -> str:
        if self.error is not None:
            return "error"
        return "pass" if self.passed else "fail"
