"""Catalog record types."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

from ..errors import DomainError
from ..laurent import ONE, Poly


@dataclass(frozen=True)
class Param:
    """Integer parameter ``lower <= value <= upper(params)``.

    ``upper`` sees the values of the parameters declared before this one.
    """

    name: str
    lower: int = 0
    upper: Callable[[Mapping[str, int]], int] | None = None
    upper_text: str = ""

    def bounds(self, earlier: Mapping[str, int]) -> tuple[int, int | None]:
        return self.lower, (None if self.upper is None else self.upper(earlier))

    def describe(self) -> str:
        hi = f" <= {self.upper_text}" if self.upper_text else ""
        return f"{self.lower} <= {self.name}{hi}"


@dataclass(frozen=True)
class SideValue:
    poly: Poly
    summands: int


Evaluator = Callable[..., SideValue]


@dataclass(frozen=True)
class IdentityEntry:
    """One identity: both sides already multiplied by ``normalizer``.

    ``alternates`` are independent evaluations of the left side that must agree
    with ``lhs``; they cover the secondary derivation routes.
    """

    id: str
    name: str
    formula: str
    params: tuple
    normalizer_text: str
    lhs: Evaluator
    rhs: Evaluator
    normalizer: Callable[..., Poly] = field(default=lambda **_: ONE)
    variables: tuple = ("q",)
    tags: frozenset = frozenset({"lemma"})
    alternates: Mapping[str, Evaluator] = field(default_factory=dict)

    def check_params(self, params: Mapping[str, int]) -> dict:
        names = [p.name for p in self.params]
        extra = set(params) - set(names)
        if extra:
            raise DomainError(f"{self.id}: unknown parameter(s) {sorted(extra)}")
        out: dict = {}
        for p in self.params:
            if p.name not in params:
                raise DomainError(f"{self.id}: missing parameter {p.name}")
            v = params[p.name]
            if isinstance(v, bool) or not isinstance(v, int):
                raise DomainError(f"{self.id}: {p.name} must be an integer")
            lo, hi = p.bounds(out)
            if v < lo or (hi is not None and v > hi):
                raise DomainError(f"{self.id}: {p.name}={v} outside {p.describe()}")
            out[p.name] = v
        return out

    def metadata(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "formula": self.formula,
            "params": [{"name": p.name, "domain": p.describe()} for p in self.params],
            "variables": list(self.variables),
            "normalizer": self.normalizer_text,
            "tags": sorted(self.tags),
            "alternates": sorted(self.alternates),
        }


@dataclass
class InstanceResult:
    id: str
    params: dict
    status: str
    lhs: Poly | None = None
    rhs: Poly | None = None
    difference: Poly | None = None
    lhs_term_count: int = 0
    rhs_summand_count: int = 0
    lhs_summand_count: int = 0
    lhs_time: float = 0.0
    rhs_time: float = 0.0
    precheck: str = "skipped"
    error: str = ""

    @property
    def equal(self) -> bool:
        return self.status == "equal"
