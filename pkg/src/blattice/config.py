"""Runtime bounds and budgets.

Settings come from three layers, later ones winning: built-in defaults, an
optional ``key=value`` file, and the ``BLATTICE_MAX_N`` environment variable
(enumeration bound only).  Command-line flags override all of them.
"""
from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

ENV_MAX_N = "BLATTICE_MAX_N"


class BoundExceeded(ValueError):
    """A request exceeded a configured size bound or work budget."""


@dataclass(frozen=True)
class Settings:
    max_n: int = 7                   # enumeration bound
    oracle_max_n: int = 5            # brute-force partner counts
    tuple_budget: int = 2_000_000    # oracle work units (meets)
    series_max_terms: int = 200_000  # terms per series evaluation
    target_width: Fraction = Fraction(1, 1000)
    canfield_order: int = 8
    identity_eps: Fraction = Fraction(1, 10**8)


_INT_KEYS = {"max_n", "oracle_max_n", "tuple_budget", "series_max_terms", "canfield_order"}
_FRACTION_KEYS = {"target_width", "identity_eps"}


def parse_config_text(text: str) -> dict:
    """Parse ``key=value`` lines; ``#`` starts a comment."""
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in _INT_KEYS:
            values[key] = int(value)
        elif key in _FRACTION_KEYS:
            values[key] = Fraction(value)
        else:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
    return values


def load_settings(path: str | os.PathLike | None = None, **overrides) -> Settings:
    values: dict = {}
    if path is not None:
        values.update(parse_config_text(Path(path).read_text()))
    env = os.environ.get(ENV_MAX_N)
    if env:
        values["max_n"] = int(env)
    values.update({k: v for k, v in overrides.items() if v is not None})
    return dataclasses.replace(Settings(), **values)


_current: Settings | None = None


def get_settings() -> Settings:
    """Active settings; re-reads the environment unless explicitly installed."""
    if _current is not None:
        return _current
    return load_settings()


def set_settings(settings: Settings | None) -> None:
    global _current
    _current = settings
