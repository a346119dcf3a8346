"""Executable catalog of the identities and the lemmas used to prove them."""
from .base import IdentityEntry, InstanceResult, Param, SideValue
from .registry import catalog, catalog_metadata, get_entry
from .verify import (REDUCTIONS, Side, antisymmetry_violations, evaluate_alternate, evaluate_side,
                     evaluate_side_value, id2_rhs_summand, random_points, reduce_check, verify_instance)

__all__ = [
    "IdentityEntry", "InstanceResult", "Param", "SideValue", "Side", "REDUCTIONS",
    "catalog", "catalog_metadata", "get_entry", "evaluate_side", "evaluate_side_value",
    "evaluate_alternate", "verify_instance", "reduce_check", "antisymmetry_violations",
    "id2_rhs_summand", "random_points",
]
