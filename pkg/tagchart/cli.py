from __future__ import annotations

import contextlib
import logging
import typing
from pathlib import Path

import typer
from rich.console import Console
from rich.table import Table
from typing_extensions import Annotated

from tagchart.corpus import load_corpus_file, run_corpus, write_csv
from tagchart.enums import InputKind, ParseMode, TraceLevel, TreeFormat
from tagchart.errors import NoParseError, OracleBoundError, TagchartError
from tagchart.forest import TreeSet, render_sexpr, render_tree, trees_from_chart, trees_from_freeword
from tagchart.grammar import Grammar, load_grammar_file
from tagchart.lexicon import (
    Lexicon,
    TaggedSentence,
    load_lexicon_file,
    tag_pattern,
    tag_sentence,
    tokenize,
)
from tagchart.logging import setup_logging
from tagchart.parsers import oracle
from tagchart.parsers.chart import recognize
from tagchart.parsers.freeword import FreewordOptions, FreewordRun, parse_sentence
from tagchart.parsers.trace import TraceStep, render_trace
from tagchart.schemas import RunConfig

__all__: typing.Sequence[str] = ("app", "main")

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="tagchart",
    help="Earley and free-word-order chart parsing for POS-tagged sentences.",
    no_args_is_help=True,
    add_completion=False,
)

RECOGNIZED = "SENTENCE RECOGNIZED"
NOT_RECOGNIZED = "SENTENCE NOT RECOGNIZED"

SentenceArg = Annotated[list[str], typer.Argument(help="Words, or tags with --tags.")]
GrammarOpt = Annotated[
    typing.Optional[Path], typer.Option("--grammar", "-g", help="Grammar file.")
]
LexiconOpt = Annotated[
    typing.Optional[Path], typer.Option("--lexicon", "-l", help="Lexicon file.")
]
# the default comes from TAGCHART_DATA_DIR through CONFIG, typed prefixes included
DataDirOpt = Annotated[
    typing.Optional[Path], typer.Option("--data-dir", help="Directory of default files.")
]
ModeOpt = Annotated[ParseMode, typer.Option("--mode", "-m", help="Parsing algorithm.")]
TraceOpt = Annotated[TraceLevel, typer.Option("--trace", help="Trace output.")]
TagsOpt = Annotated[bool, typer.Option("--tags", help="Input is a tag sequence.")]
FirstOpt = Annotated[
    bool,
    typer.Option("--first", help="Stop at the first success; `tree` prints the preferred tree only."),
]
RestrictionOpt = Annotated[
    bool,
    typer.Option(
        "--last-word-restriction/--no-last-word-restriction",
        help="Only single-symbol expansions while analysing the last word.",
    ),
]
TreeLimitOpt = Annotated[
    typing.Optional[int], typer.Option("--tree-limit", min=1, help="Maximum trees to build.")
]
FormatOpt = Annotated[
    TreeFormat, typer.Option("--format", "--tree-format", "-f", help="Tree rendering.")
]


@contextlib.contextmanager
def _exit_codes() -> typing.Iterator[None]:
    try:
        yield
    except NoParseError as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(1) from e
    except TagchartError as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(2) from e
    except OSError as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(2) from e


def _config(**kwargs: typing.Any) -> RunConfig:
    values = {k: v for k, v in kwargs.items() if v is not None}
    return RunConfig(**values)


def _load(config: RunConfig) -> tuple[Grammar, Lexicon]:
    grammar = load_grammar_file(config.grammar_path)
    lexicon = load_lexicon_file(config.lexicon_path)
    logger.info("grammar %s, lexicon %s", config.grammar_path, config.lexicon_path)
    return grammar, lexicon


def _sentence(config: RunConfig, lexicon: Lexicon) -> TaggedSentence:
    words = tokenize(" ".join(config.words))
    if config.input_kind is InputKind.TAGS:
        return tag_pattern(words)
    return tag_sentence(lexicon, words)


class _Outcome(typing.NamedTuple):
    accepted: bool
    trace: list[TraceStep]
    trees: typing.Callable[[int], TreeSet]


def _analyse(config: RunConfig, grammar: Grammar, sentence: TaggedSentence) -> _Outcome:
    if config.mode is ParseMode.STANDARD:
        accepted, chart = recognize(grammar, sentence, stop_at_accept=config.first)
        steps = chart.steps
        if config.trace is TraceLevel.GOAL and accepted:
            last = max(chart.step_of(item) for item in chart.accepting_items())
            steps = steps[:last]
        return _Outcome(accepted, steps, lambda limit: trees_from_chart(chart, limit))

    options = FreewordOptions(
        first_success=config.first,
        last_word_restriction=config.last_word_restriction,
        verb_conditional=config.verb_conditional,
    )
    run: FreewordRun = parse_sentence(grammar, sentence, options)
    if config.trace is TraceLevel.GOAL:
        path = run.goal_path()
        steps = path.trace() if path is not None else []
    else:
        steps = run.steps
    return _Outcome(run.accepted, steps, lambda limit: trees_from_freeword(run, limit))


@app.callback()
def main(
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Debug logging.")] = False,
) -> None:
    setup_logging()
    if verbose:
        logging.getLogger("tagchart").setLevel(logging.DEBUG)


@app.command()
def tag(
    sentence: SentenceArg,
    grammar: GrammarOpt = None,
    lexicon: LexiconOpt = None,
    data_dir: DataDirOpt = None,
    mode: ModeOpt = ParseMode.MODIFIED,
    trace: TraceOpt = TraceLevel.NONE,
    tags: TagsOpt = False,
    first: FirstOpt = False,
    last_word_restriction: RestrictionOpt = True,
    tree_limit: TreeLimitOpt = None,
    tree_format: FormatOpt = TreeFormat.LISTING,
) -> None:
    """Print each word with its candidate tags."""
    with _exit_codes():
        config = _config(
            words=sentence,
            grammar=grammar,
            lexicon=lexicon,
            data_dir=data_dir,
            mode=mode,
            trace=trace,
            tags=tags,
            first=first,
            last_word_restriction=last_word_restriction,
            tree_limit=tree_limit,
            tree_format=tree_format,
        )
        lex = Lexicon() if config.tags else load_lexicon_file(config.lexicon_path)
        for token in _sentence(config, lex).tokens:
            typer.echo(f"{token.word}\t{','.join(token.tag_names)}")


@app.command()
def parse(
    sentence: SentenceArg,
    grammar: GrammarOpt = None,
    lexicon: LexiconOpt = None,
    data_dir: DataDirOpt = None,
    mode: ModeOpt = ParseMode.MODIFIED,
    trace: TraceOpt = TraceLevel.NONE,
    tags: TagsOpt = False,
    first: FirstOpt = False,
    last_word_restriction: RestrictionOpt = True,
    tree_limit: TreeLimitOpt = None,
    tree_format: FormatOpt = TreeFormat.LISTING,
    use_oracle: Annotated[
        bool, typer.Option("--oracle", help="Also report the brute-force verdict.")
    ] = False,
) -> None:
    """Report whether the sentence is recognized."""
    with _exit_codes():
        config = _config(
            words=sentence,
            grammar=grammar,
            lexicon=lexicon,
            data_dir=data_dir,
            mode=mode,
            trace=trace,
            tags=tags,
            first=first,
            last_word_restriction=last_word_restriction,
            tree_limit=tree_limit,
            tree_format=tree_format,
        )
        g, lex = _load(config)
        tagged = _sentence(config, lex)
        outcome = _analyse(config, g, tagged)
        if config.trace is not TraceLevel.NONE:
            typer.echo(render_trace(outcome.trace), nl=False)
        typer.echo(RECOGNIZED if outcome.accepted else NOT_RECOGNIZED)
        if use_oracle:
            try:
                count = oracle.count_derivations(g, tagged, config.tree_limit)
                verdict = "accept" if count else "reject"
                typer.echo(f"ORACLE: {verdict} ({count} derivation(s))")
            except OracleBoundError as e:
                typer.echo(f"ORACLE: skipped ({e})")
    if not outcome.accepted:
        raise typer.Exit(1)


@app.command()
def tree(
    sentence: SentenceArg,
    grammar: GrammarOpt = None,
    lexicon: LexiconOpt = None,
    data_dir: DataDirOpt = None,
    mode: ModeOpt = ParseMode.MODIFIED,
    trace: TraceOpt = TraceLevel.NONE,
    tags: TagsOpt = False,
    first: FirstOpt = False,
    last_word_restriction: RestrictionOpt = True,
    tree_limit: TreeLimitOpt = None,
    tree_format: FormatOpt = TreeFormat.LISTING,
) -> None:
    """Print the parse trees of the sentence, preferred first, up to the tree limit."""
    with _exit_codes():
        config = _config(
            words=sentence,
            grammar=grammar,
            lexicon=lexicon,
            data_dir=data_dir,
            mode=mode,
            trace=trace,
            tags=tags,
            first=first,
            last_word_restriction=last_word_restriction,
            tree_limit=tree_limit,
            tree_format=tree_format,
        )
        g, lex = _load(config)
        tagged = _sentence(config, lex)
        # trees need the whole item graph, so --first only limits the output
        outcome = _analyse(config.model_copy(update={"first": False}), g, tagged)
        if config.trace is not TraceLevel.NONE:
            typer.echo(render_trace(outcome.trace), nl=False)
        typer.echo(f"INPUT SENTENCE--> : {tagged}.\n")
        if not outcome.accepted:
            typer.echo(NOT_RECOGNIZED)
            raise typer.Exit(1)
        trees = outcome.trees(1 if config.first else config.tree_limit)
        typer.echo(f"{RECOGNIZED}\n")
        typer.echo("TREE-->\n")
        if config.tree_format is TreeFormat.SEXPR:
            rendered = [render_sexpr(t) + "\n" for t in trees]
        else:
            rendered = [render_tree(t) for t in trees]
        typer.echo("\n".join(rendered), nl=False)
        if trees.truncated and not config.first:
            logger.warning("stopped after %d trees (--tree-limit)", len(trees))


@app.command()
def corpus(
    path: Annotated[Path, typer.Argument(help="Corpus file.")],
    grammar: GrammarOpt = None,
    lexicon: LexiconOpt = None,
    data_dir: DataDirOpt = None,
    mode: ModeOpt = ParseMode.MODIFIED,
    trace: TraceOpt = TraceLevel.NONE,
    tags: TagsOpt = False,
    first: FirstOpt = False,
    last_word_restriction: RestrictionOpt = True,
    tree_limit: TreeLimitOpt = None,
    tree_format: FormatOpt = TreeFormat.LISTING,
    csv_path: Annotated[
        typing.Optional[Path], typer.Option("--csv", help="Write results as CSV.")
    ] = None,
    workers: Annotated[typing.Optional[int], typer.Option("--workers", min=1)] = None,
) -> None:
    """Run every corpus sentence through both parsers and check expectations.

    ``--mode`` picks the verdict checked and the parser whose trees are counted.
    """
    with _exit_codes():
        config = _config(
            grammar=grammar,
            lexicon=lexicon,
            data_dir=data_dir,
            mode=mode,
            trace=trace,
            tags=tags,
            first=first,
            last_word_restriction=last_word_restriction,
            tree_limit=tree_limit,
            tree_format=tree_format,
        )
        g, lex = _load(config)
        entries = load_corpus_file(path)
        results = run_corpus(entries, g, lex, workers, config)

        table = Table("sentence", "expected", "standard", "modified", "parses", "status")
        for result in results:
            table.add_row(
                result.entry.sentence,
                result.entry.expected,
                "accept" if result.standard else "reject",
                "accept" if result.modified else "reject",
                str(result.parses),
                result.status,
            )
        Console(soft_wrap=True).print(table)
        failed = sum(not r.passed for r in results)
        typer.echo(f"{len(results)} sentence(s), {failed} failed")
        if csv_path is not None:
            with csv_path.open("w", encoding="utf-8", newline="") as stream:
                write_csv(results, stream)
    if failed:
        raise typer.Exit(1)
