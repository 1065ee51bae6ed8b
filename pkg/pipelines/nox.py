"""Thin wrapper around nox: session naming, venv reuse and dev requirement pins."""

from __future__ import annotations

import os as _os
import typing as _typing

from nox import options as _options
from nox import session as _session
from nox.sessions import Session

from pipelines import config as _pipelines_config

try:
    import uv

    del uv

    venv_backend = "uv"
except ModuleNotFoundError:
    venv_backend = "venv"


_options.sessions = ["reformat-code", "codespell", "type-check", "pytest"]
_options.default_venv_backend = venv_backend

_NoxCallbackSig = _typing.Callable[[Session], None]


def session(
    **kwargs: _typing.Any,
) -> _typing.Callable[[_NoxCallbackSig], _NoxCallbackSig]:
    """Register a job named after the function, with dashes for underscores."""

    def decorator(func: _NoxCallbackSig) -> _NoxCallbackSig:
        kwargs.setdefault("reuse_venv", True)
        return _session(name=func.__name__.replace("_", "-"), **kwargs)(func)

    return decorator


def dev_requirements(*groups: str) -> list[str]:
    """``-r`` arguments for the pinned files under ``dev-requirements/``."""
    args: list[str] = []
    for group in groups:
        path = _os.path.join(_pipelines_config.DEV_REQUIREMENTS_DIRECTORY, f"{group}.txt")
        args.extend(("-r", path))
    return args
