"""Code-linting jobs."""

from __future__ import annotations

from pipelines import nox


@nox.session()
def type_check(session: nox.Session) -> None:
    """Run pyright over the package and its tests."""
    session.install("-r", "requirements.txt", *nox.dev_requirements("pyright", "pytest"))

    session.run("pyright")
