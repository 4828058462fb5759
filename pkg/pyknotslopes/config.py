from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Mapping, Optional, Union

from pyknotslopes.bracket import DEFAULT_ORACLE_BOUND, DP, ENGINES

THREADS_VARIABLE = "PYKNOTSLOPES_THREADS"
FORMATS = ("json", "text")


class ConfigError(Exception):
    ...


def available_threads() -> int:
    if hasattr(os, "sched_getaffinity"):
        return max(1, len(os.sched_getaffinity(0)))
    return max(1, os.cpu_count() or 1)


@dataclass
class ToolConfig:
    engine: str = DP
    oracleBound: int = DEFAULT_ORACLE_BOUND
    threads: int = 1
    maxN: Optional[int] = None
    format: str = "json"

    def __post_init__(self):
        self.validate()

    def validate(self):
        if self.engine not in ENGINES:
            raise ConfigError(f"engine must be one of {ENGINES}, got {self.engine!r}")
        if not isinstance(self.oracleBound, int) or self.oracleBound < 0:
            raise ConfigError(f"oracleBound must be a nonnegative integer, got {self.oracleBound!r}")
        if not isinstance(self.threads, int) or self.threads < 1:
            raise ConfigError(f"threads must be a positive integer, got {self.threads!r}")
        if self.maxN is not None and (not isinstance(self.maxN, int) or self.maxN < 2):
            raise ConfigError(f"maxN must be an integer >= 2, got {self.maxN!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.format!r}")

    @classmethod
    def defaults(cls) -> ToolConfig:
        return cls(threads=available_threads())

    @classmethod
    def load(cls, config: Optional[Union[dict, Path, str]] = None,
             environ: Optional[Mapping[str, str]] = None, **overrides) -> ToolConfig:
        """
        Layer built-in defaults, a JSON config (dict or path), the environment
        and explicit overrides, in increasing order of precedence. Overrides
        that are None are ignored.
        """
        values = asdict(cls.defaults())

        if not config:
            data = {}
        elif isinstance(config, dict):
            data = config
        else:
            path = Path(config)
            try:
                with path.open("r", encoding="utf-8") as f:
                    data = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                raise ConfigError(f"Could not read config {path}: {e}") from e

        if not isinstance(data, dict):
            raise ConfigError("Config must be a JSON object")

        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"Unknown config keys: {unknown}")
        values.update(data)

        environ = os.environ if environ is None else environ
        if environ.get(THREADS_VARIABLE):
            try:
                values["threads"] = int(environ[THREADS_VARIABLE])
            except ValueError as e:
                raise ConfigError(
                    f"{THREADS_VARIABLE} must be an integer, got {environ[THREADS_VARIABLE]!r}") from e

        for key, value in overrides.items():
            if key not in known:
                raise ConfigError(f"Unknown config key {key!r}")
            if value is not None:
                values[key] = value

        return cls(**values)

    def save(self, path: Union[Path, str]):
        with Path(path).open("w", encoding="utf-8") as f:
            json.dump(asdict(self), f, indent=4)
