"""Report records for the analysis routines, with text and JSON output."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Optional, Tuple


class CapExceeded(ValueError):
    """A computation would exceed its configured size cap."""


class _Report:
    def to_dict(self) -> dict:
        return asdict(self)

    def to_text(self) -> str:
        lines = []
        for key, value in self.to_dict().items():
            if key == "notes":
                lines.extend(f"note={v}" for v in value)
            elif key == "witness" and value is not None:
                lines.append(f"witness_u={value[0]}")
                lines.append(f"witness_v={value[1]}")
            elif isinstance(value, dict):
                lines.extend(f"{key}.{k}={v}" for k, v in value.items())
            else:
                lines.append(f"{key}={value}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), default=str)


@dataclass(frozen=True)
class GrowthReport(_Report):
    n: int
    max_entry: int
    argmax_word: str
    exponent: float
    notes: Tuple[str, ...] = ()


@dataclass(frozen=True)
class GirthReport(_Report):
    p: int
    girth: Optional[int]
    witness: Optional[Tuple[str, str]]
    definition_used: str = "sum_of_lengths"
    sum_of_lengths: Optional[int] = None
    max_of_lengths: Optional[int] = None
    complete: bool = True
    lower_bound: Optional[int] = None
    states_visited: int = 0


@dataclass(frozen=True)
class LyapunovReport(_Report):
    n: int
    trials: int
    seed: int
    mean_log_max_entry_over_n: float

    @property
    def rate(self) -> float:
        """Per-letter growth factor exp(mean)."""
        return math.exp(self.mean_log_max_entry_over_n)


@dataclass(frozen=True)
class TestResult(_Report):
    name: str
    statistic: float
    p_value: float
    passed: bool
    alpha: float = 0.01
    extra: dict = field(default_factory=dict)

    __test__ = False  # not a pytest class
