from __future__ import annotations

from functools import lru_cache

from ..errors import DomainError
from . import cubic, hyper, jtp, lebesgue
from .base import IdentityEntry


@lru_cache(maxsize=1)
def _entries() -> tuple:
    found = (*jtp.entries(), *lebesgue.entries(), *hyper.entries(), *cubic.entries())
    ids = [e.id for e in found]
    if len(set(ids)) != len(ids):
        raise RuntimeError("duplicate catalog ids")
    return found


def catalog() -> list:
    """Every catalog entry, in a fixed order."""
    return list(_entries())


def get_entry(entry_id: str) -> IdentityEntry:
    for e in _entries():
        if e.id == entry_id:
            return e
    raise DomainError(f"unknown identity id {entry_id!r}")


def catalog_metadata() -> list:
    return [e.metadata() for e in _entries()]
