"""Batch runs over a corpus of sentences with accept/reject expectations.

Corpus files hold one sentence per line::

    tags:PN NP ART NP VP<TAB>expect:accept<TAB>first permutation
    mai Aru si ekelge gharalE jAm<TAB>expect:accept

A ``tags:`` prefix marks a pre-tagged pattern; ``#`` starts a comment line.
"""

from __future__ import annotations

import csv
import logging
import typing
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .config import CONFIG
from .enums import InputKind, ParseMode
from .errors import CorpusError, TagchartError
from .forest import trees_from_chart, trees_from_freeword
from .grammar import Grammar
from .lexicon import Lexicon, TaggedSentence, tag_pattern, tag_sentence
from .parsers.chart import recognize
from .parsers.freeword import FreewordOptions, parse_sentence
from .schemas import CorpusEntry, CorpusResult, RunConfig

__all__: typing.Sequence[str] = (
    "CSV_COLUMNS",
    "load_corpus",
    "load_corpus_file",
    "run_entry",
    "run_corpus",
    "write_csv",
)

logger = logging.getLogger(__name__)

CSV_COLUMNS: typing.Final = (
    "sentence",
    "kind",
    "expected",
    "standard",
    "modified",
    "modified_unrestricted",
    "parses",
    "disagreement",
    "status",
)
TAGS_PREFIX = "tags:"
_EXPECTATIONS = {"expect:accept": True, "expect:reject": False}


def load_corpus(source: str, name: str | None = None) -> list[CorpusEntry]:
    entries = []
    for lineno, raw in enumerate(source.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        fields = raw.split("\t")
        if len(fields) < 2:
            raise CorpusError("expected '<sentence>\\t<expect:accept|reject>'", lineno, name)
        sentence, expectation = fields[0].strip(), fields[1].strip()
        if expectation not in _EXPECTATIONS:
            raise CorpusError(f"unknown expectation {expectation!r}", lineno, name)
        kind = InputKind.WORDS
        if sentence.startswith(TAGS_PREFIX):
            kind = InputKind.TAGS
            sentence = sentence[len(TAGS_PREFIX) :].strip()
        if not sentence:
            raise CorpusError("empty sentence", lineno, name)
        entries.append(
            CorpusEntry(
                sentence=sentence,
                kind=kind,
                expect_accept=_EXPECTATIONS[expectation],
                comment="\t".join(fields[2:]).strip(),
                line=lineno,
            )
        )
    return entries


def load_corpus_file(path: str | Path) -> list[CorpusEntry]:
    path = Path(path)
    return load_corpus(path.read_text(encoding="utf-8"), str(path))


def _sentence(entry: CorpusEntry, lexicon: Lexicon, config: RunConfig) -> TaggedSentence:
    if entry.kind is InputKind.TAGS or config.tags:
        return tag_pattern(entry.tokens)
    return tag_sentence(lexicon, entry.tokens)


def run_entry(
    entry: CorpusEntry,
    grammar: Grammar,
    lexicon: Lexicon,
    config: RunConfig | None = None,
) -> CorpusResult:
    """Parse one entry in standard mode and in modified mode with and without
    the last-word restriction.

    ``config.mode`` picks the verdict checked against the expectation and the
    parser whose trees are counted.
    """
    config = config or RunConfig()
    try:
        sentence = _sentence(entry, lexicon, config)
        standard, chart = recognize(grammar, sentence, stop_at_accept=config.first)
        run = parse_sentence(
            grammar,
            sentence,
            FreewordOptions(
                first_success=config.first,
                last_word_restriction=config.last_word_restriction,
                verb_conditional=config.verb_conditional,
            ),
        )
        unrestricted = parse_sentence(
            grammar, sentence, FreewordOptions(first_success=True, last_word_restriction=False)
        )
        if config.mode is ParseMode.STANDARD:
            parses = len(trees_from_chart(chart, config.tree_limit)) if standard else 0
        else:
            parses = (
                len(trees_from_freeword(run, config.tree_limit, ranked=False))
                if run.accepted
                else 0
            )
    except TagchartError as e:
        logger.warning("line %s: %s", entry.line, e)
        return CorpusResult(
            entry=entry,
            mode=config.mode,
            standard=False,
            modified=False,
            modified_unrestricted=False,
            error=str(e),
        )
    return CorpusResult(
        entry=entry,
        mode=config.mode,
        standard=standard,
        modified=run.accepted,
        modified_unrestricted=unrestricted.accepted,
        parses=parses,
    )


def run_corpus(
    entries: typing.Sequence[CorpusEntry],
    grammar: Grammar,
    lexicon: Lexicon,
    workers: int | None = None,
    config: RunConfig | None = None,
) -> list[CorpusResult]:
    """Results come back in corpus order whatever the worker count."""
    workers = int(CONFIG.CORPUS_WORKERS) if workers is None else workers
    if not entries:
        return []
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(
            pool.map(lambda entry: run_entry(entry, grammar, lexicon, config), entries)
        )
    failed = sum(not r.passed for r in results)
    logger.info("corpus: %d sentences, %d failed", len(results), failed)
    return results


def _yes_no(value: bool) -> str:
    return "yes" if value else "no"


def write_csv(results: typing.Iterable[CorpusResult], stream: typing.TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for result in results:
        writer.writerow(
            (
                result.entry.sentence,
                result.entry.kind.value,
                result.entry.expected,
                _yes_no(result.standard),
                _yes_no(result.modified),
                _yes_no(result.modified_unrestricted),
                result.parses,
                _yes_no(result.disagreement),
                result.status,
            )
        )
