"""Verification plans: which identities, over which parameter boxes."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from ..errors import DomainError, PlanInvalid
from ..identities import get_entry


@dataclass(frozen=True)
class PlanItem:
    id: str
    ranges: dict = field(default_factory=dict)  # name -> (lo, hi), inclusive

    def to_json(self) -> dict:
        return {"id": self.id, "params": {k: list(v) for k, v in sorted(self.ranges.items())}}


@dataclass
class Plan:
    instances: list = field(default_factory=list)
    threads: int = 1
    report_path: str | None = None
    golden_path: str | None = None

    def echo(self) -> dict:
        return {"instances": [it.to_json() for it in self.instances], "threads": self.threads}


_RANGE = re.compile(r"^\s*([A-Za-z_]\w*)\s*=\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*$")


def parse_param(text: str) -> tuple[str, tuple[int, int]]:
    """``L=0..25`` or ``L=4``."""
    m = _RANGE.match(text)
    if not m:
        raise PlanInvalid(f"bad parameter range {text!r}; expected name=lo..hi or name=value")
    lo = int(m.group(2))
    hi = int(m.group(3)) if m.group(3) is not None else lo
    return m.group(1), (lo, hi)


def _coerce_range(name: str, value) -> tuple[int, int]:
    if isinstance(value, bool):
        raise PlanInvalid(f"range for {name} must be integers")
    if isinstance(value, int):
        return value, value
    if isinstance(value, (list, tuple)) and len(value) == 2 and all(
            isinstance(x, int) and not isinstance(x, bool) for x in value):
        return int(value[0]), int(value[1])
    raise PlanInvalid(f"range for {name} must be [lo, hi], got {value!r}")


def plan_from_json(doc: dict) -> Plan:
    if not isinstance(doc, dict):
        raise PlanInvalid("plan must be a JSON object")
    items = []
    for raw in doc.get("instances", []):
        if not isinstance(raw, dict) or "id" not in raw:
            raise PlanInvalid(f"plan instance needs an id: {raw!r}")
        ranges = {k: _coerce_range(k, v) for k, v in (raw.get("params") or {}).items()}
        items.append(PlanItem(raw["id"], ranges))
    threads = doc.get("threads", 1)
    if not isinstance(threads, int) or isinstance(threads, bool) or threads < 1:
        raise PlanInvalid("threads must be a positive integer")
    return Plan(items, threads, doc.get("report"), doc.get("golden"))


def load_plan(path: str | Path) -> Plan:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise PlanInvalid(f"plan file is not valid JSON: {exc}") from exc
    return plan_from_json(doc)


def expand_item(item: PlanItem) -> Iterator[dict]:
    """Every parameter assignment in the item's box that lies in the entry's domain.

    Explicit ranges must not start below a parameter's lower bound.  Ranges of
    dependent parameters are clipped to the bound implied by earlier values; an
    omitted dependent parameter ranges over all valid values.
    """
    try:
        entry = get_entry(item.id)
    except DomainError as exc:
        raise PlanInvalid(str(exc)) from exc
    names = [p.name for p in entry.params]
    unknown = set(item.ranges) - set(names)
    if unknown:
        raise PlanInvalid(f"{item.id}: unknown parameter(s) {sorted(unknown)}")
    for p in entry.params:
        if p.name in item.ranges:
            lo, hi = item.ranges[p.name]
            if lo > hi:
                raise PlanInvalid(f"{item.id}: empty range {p.name}={lo}..{hi}")
            if lo < p.lower:
                raise PlanInvalid(f"{item.id}: {p.name}={lo}..{hi} leaves the domain {p.describe()}")
        elif p.upper is None:
            raise PlanInvalid(f"{item.id}: no range given for {p.name}")

    def rec(idx: int, current: dict):
        if idx == len(entry.params):
            yield dict(current)
            return
        p = entry.params[idx]
        lo_d, hi_d = p.bounds(current)
        lo, hi = item.ranges.get(p.name, (lo_d, hi_d))
        if hi_d is not None:
            hi = min(hi, hi_d)
        for v in range(max(lo, lo_d), hi + 1):
            current[p.name] = v
            yield from rec(idx + 1, current)
        current.pop(p.name, None)

    yield from rec(0, {})


def expand_plan(plan: Plan) -> list:
    """(id, params) pairs in report order: by id, then by parameter values."""
    seen = {}
    for item in plan.instances:
        for params in expand_item(item):
            key = (item.id, tuple(params.values()))
            seen[key] = (item.id, params)
    return [seen[k] for k in sorted(seen)]
