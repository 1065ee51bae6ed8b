import logging
import logging.config
import os
import pathlib
import typing

import yaml
from rich.console import Console
from rich.logging import RichHandler

from .config import CONFIG

__all__: typing.Sequence[str] = ("setup_logging", "stderr_handler")


def stderr_handler(**kwargs: typing.Any) -> RichHandler:
    # standard output carries parse results only
    return RichHandler(console=Console(stderr=True), **kwargs)


def setup_logging(
    default_path="logging.yaml", default_level=None, env_key="LOG_CFG"
):
    if default_level is None:
        default_level = logging.getLevelName(str(CONFIG.LOG_LEVEL).upper())
    path = pathlib.Path(__file__).parent / default_path
    value = os.getenv(env_key, None)
    if value:
        path = pathlib.Path(value)
    if path.exists():
        with open(path, "rt", encoding="utf-8") as f:
            try:
                config = yaml.safe_load(f.read())
                logging.config.dictConfig(config)
                logging.getLogger("tagchart").setLevel(default_level)
            except Exception:
                logging.basicConfig(level=default_level)
                logging.getLogger(__name__).warning(
                    "Error in logging configuration %s, using defaults", path
                )
    else:
        logging.basicConfig(level=default_level)
        logging.getLogger(__name__).warning(
            "Failed to load logging configuration %s, using defaults", path
        )
