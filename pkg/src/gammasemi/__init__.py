"""Finite Gamma-semigroups: validation, Green's relations, ideals, regularity
hierarchies, decompositions, enumeration and counterexample search."""

from .constructors import all_fixtures, fixture, from_commutative_regular_semigroup, group_with_zero
from .core import GammaSemigroup, InvalidTable, Violation, find_zero, set_product, validate
from .enumeration import EnumSpec, census, enumerate_gamma_semigroups, random_instance
from .gsgp import GsgpSyntaxError, dumps, loads
from .regularity import is_2_0_strongly_regular, is_regular, is_strongly_regular
from .search import search_counterexample
from .theoremcheck import check, check_all

__all__ = [
    "EnumSpec", "GammaSemigroup", "GsgpSyntaxError", "InvalidTable", "Violation",
    "all_fixtures", "census", "check", "check_all", "dumps", "enumerate_gamma_semigroups",
    "find_zero", "fixture", "from_commutative_regular_semigroup", "group_with_zero",
    "is_2_0_strongly_regular", "is_regular", "is_strongly_regular", "loads",
    "random_instance", "search_counterexample", "set_product", "validate",
]
