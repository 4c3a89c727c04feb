"""Enumeration limits shared by every exhaustive routine."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

ENV_VAR = "LIFTEDCODES_CAP"


class CapExceeded(RuntimeError):
    """An enumeration would exceed a configured limit."""

    def __init__(self, what: str, required: int, limit: int):
        self.what = what
        self.required = required
        self.limit = limit
        super().__init__(f"{what}: requires {required}, cap is {limit}")


@dataclass(frozen=True)
class Caps:
    field_order: int = 1024
    coset_steps: int = 10**8
    vectors: int = 2**20
    codewords: int = 2**20

    def check(self, name: str, required: int, what: str | None = None) -> None:
        limit = getattr(self, name)
        if required > limit:
            raise CapExceeded(what or name, required, limit)

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def parse_caps(text: str, base: Caps | None = None) -> Caps:
    """Parse ``"vectors=4096,coset_steps=1e6"``; a bare number sets every cap."""
    base = base or Caps()
    text = text.strip()
    if not text:
        return base
    if "=" not in text:
        value = _parse_int(text)
        return Caps(**{name: value for name in base.to_dict()})
    updates = {}
    known = base.to_dict()
    for part in text.split(","):
        key, _, value = part.partition("=")
        key = key.strip().replace("-", "_")
        if key not in known:
            raise ValueError(f"unknown cap {key!r}; expected one of {sorted(known)}")
        updates[key] = _parse_int(value)
    return replace(base, **updates)


def _parse_int(value: str) -> int:
    value = value.strip()
    try:
        out = int(value)
    except ValueError:
        out = float(value)
        if not out.is_integer():
            raise ValueError(f"cap must be an integer, got {value!r}")
        out = int(out)
    if out <= 0:
        raise ValueError(f"caps must be positive, got {out}")
    return out


def default_caps() -> Caps:
    env = os.environ.get(ENV_VAR)
    if env:
        return parse_caps(env)
    return Caps()
