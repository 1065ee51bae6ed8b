"""Test jobs."""

from __future__ import annotations

from pipelines import config, nox


@nox.session()
def pytest(session: nox.Session) -> None:
    """Run the test suite."""
    session.install("-r", "requirements.txt", *nox.dev_requirements("pytest"))
    session.install("-e", ".", "--no-deps")

    session.run("pytest", config.TEST_PACKAGE, *session.posargs)
