"""Two-sided check results shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .scalars import scalar_to_json


@dataclass(frozen=True)
class Certificate:
    name: str
    lhs: Any
    rhs: Any
    passed: bool
    ratio: Any = None
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "lhs": _enc(self.lhs),
            "rhs": _enc(self.rhs),
            "ratio": _enc(self.ratio),
            "pass": self.passed,
        }
        if self.detail:
            out["detail"] = {k: _enc(v) for k, v in self.detail.items()}
        return out


def _enc(x):
    if x is None or isinstance(x, (bool, str)):
        return x
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (list, tuple)):
        return [_enc(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _enc(v) for k, v in x.items()}
    try:
        return scalar_to_json(x)
    except TypeError:
        return str(x)
