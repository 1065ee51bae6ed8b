import os
import typing
import typing as t
from pathlib import Path

import dotenv

dotenv.load_dotenv()

__all__: typing.Sequence[str] = ("CONFIG", "ConfigEnv")

ENV_PREFIX = "TAGCHART_"


class ConfigMeta(type):
    _defaults: dict[str, t.Any]

    def resolve_value(cls, value: str) -> t.Any:
        _map: dict[str, t.Callable[[str], t.Any]] = {
            "str": str,
            "int": int,
            "float": float,
            "bool": lambda x: x.strip().lower() in ("1", "true", "yes", "on"),
            "path": lambda x: Path(x).expanduser(),
            "set": lambda x: set([cls.resolve_value(e.strip()) for e in x.split(",")]),
            "file": lambda x: Path(x).read_text(encoding="utf-8").strip("\n"),
        }
        kind, sep, rest = value.partition(":")
        if sep and kind in _map:
            return _map[kind](rest)
        return value

    def resolve_key(cls, key: str) -> t.Any:
        raw = os.environ.get(ENV_PREFIX + key)
        if raw is not None:
            return cls.resolve_value(raw)
        return cls._defaults[key]

    def __getattr__(cls, name: str) -> t.Any:
        if name.startswith("_"):
            raise AttributeError(name)
        try:
            return cls.resolve_key(name)
        except KeyError:
            raise AttributeError(f"{name} is not a key in config.") from None

    def __getitem__(cls, name: str) -> t.Any:
        return cls.__getattr__(name)


class ConfigEnv(metaclass=ConfigMeta):
    _defaults = {
        "DATA_DIR": Path(__file__).parent / "data",
        "TREE_LIMIT": 64,
        "ORACLE_MAX_LENGTH": 8,
        "CORPUS_WORKERS": 4,
        "VERB_TAG": "VP",
        "LOG_LEVEL": "INFO",
    }


CONFIG = ConfigEnv
