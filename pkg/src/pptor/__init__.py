"""Exact-arithmetic toolkit for pp-definable subgroups of abelian groups."""

__version__ = "0.1.0"

from .formulas import is_low, parse, print_formula
from .groups import FgGroup, Subgroup, parse_group
from .ppsolve import evaluate

__all__ = [
    "FgGroup",
    "Subgroup",
    "evaluate",
    "is_low",
    "parse",
    "parse_group",
    "print_formula",
    "__version__",
]
