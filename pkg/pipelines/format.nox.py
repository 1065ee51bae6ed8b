"""Code-style jobs."""

from __future__ import annotations

import pathlib
import time

from pipelines import config, nox


@nox.session()
def reformat_code(session: nox.Session) -> None:
    """Strip trailing whitespace, then format and sort imports with ruff."""
    session.install(*nox.dev_requirements("ruff"))

    trailing_whitespace(session)

    # ruff format does not sort imports; the isort rule does
    session.run("ruff", "format", *config.PYTHON_REFORMATTING_PATHS)
    session.run(
        "ruff", "check", "--select", "I", "--fix", *config.PYTHON_REFORMATTING_PATHS
    )


@nox.session()
def check_reformat_code(session: nox.Session) -> None:
    """Fail if ruff would reformat anything."""
    session.install(*nox.dev_requirements("ruff"))

    session.run("ruff", "format", "--check", *config.PYTHON_REFORMATTING_PATHS)
    session.run("ruff", "check", "--select", "I", *config.PYTHON_REFORMATTING_PATHS)


@nox.session(venv_backend="none")
def check_trailing_whitespaces(session: nox.Session) -> None:
    """Fail on trailing whitespace outside the golden files."""
    trailing_whitespace(session, check_only=True)


def _candidates() -> list[pathlib.Path]:
    golden = pathlib.Path(config.GOLDEN_DIRECTORY)
    files: list[pathlib.Path] = []
    for raw_path in config.FULL_REFORMATTING_PATHS:
        path = pathlib.Path(raw_path)
        found = [path] if path.is_file() else sorted(path.rglob("*"))
        files.extend(
            f
            for f in found
            if f.is_file()
            and f.name.casefold().endswith(config.REFORMATTING_FILE_EXTS)
            and golden not in f.parents
        )
    return files


def trailing_whitespace(session: nox.Session, check_only: bool = False) -> None:
    start = time.perf_counter()
    files = _candidates()
    dirty = [f for f in files if _strip(f, session, check_only)]
    took = 1_000 * (time.perf_counter() - start)

    if check_only and dirty:
        session.error(
            f"Found trailing whitespace in {len(dirty)} file(s). "
            "Run 'nox -s reformat-code' to fix them."
        )
    session.log(f"Checked {len(files)} files in {took:.2f}ms, {len(dirty)} needed fixing.")


def _strip(path: pathlib.Path, session: nox.Session, check_only: bool) -> bool:
    lines = path.read_bytes().splitlines(keepends=True)
    stripped = [line.rstrip(b"\n\r \t") + b"\n" for line in lines]
    if lines == stripped:
        return False

    if check_only:
        session.warn(f"Trailing whitespace in {path}")
    else:
        session.log(f"Removing trailing whitespace in {path}")
        path.write_bytes(b"".join(stripped))
    return True
