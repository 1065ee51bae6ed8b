from __future__ import annotations

from pipelines import config, nox

# romanized Assamese words that read as misspelled English
IGNORED_WORDS = ["mai", "aru", "si", "ezan"]


@nox.session()
def codespell(session: nox.Session) -> None:
    """Spell-check sources and docs, skipping grammar data and golden outputs."""
    session.install(*nox.dev_requirements("codespell"))
    session.run(
        "codespell",
        "--builtin",
        "clear,rare,code",
        "--ignore-words-list",
        ",".join(IGNORED_WORDS),
        "--skip",
        ",".join((*config.SKIP_FILE_EXTENSIONS, config.GOLDEN_DIRECTORY)),
        *config.FULL_REFORMATTING_PATHS,
    )
