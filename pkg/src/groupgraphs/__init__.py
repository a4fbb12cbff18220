"""Finite-group engine and graph analyses, with an HTTP service and CLI."""

__version__ = "0.1.0"

from .build import build_group, direct_product, semidirect_product
from .group import FiniteGroup, GroupError, CapExceeded, SubgroupMask
from .graphs import graph_report, adjacency_matrix
from .lattice import all_subgroups, frattini, maximal_subgroups
from .mingen import contains_in_irredundant, enumerate_irredundant, rank_d, tarski_table
from .structure import classify_unique_minimal, is_soluble, quotient

__all__ = [
    "build_group", "direct_product", "semidirect_product",
    "FiniteGroup", "GroupError", "CapExceeded", "SubgroupMask",
    "graph_report", "adjacency_matrix",
    "all_subgroups", "frattini", "maximal_subgroups",
    "contains_in_irredundant", "enumerate_irredundant", "rank_d", "tarski_table",
    "classify_unique_minimal", "is_soluble", "quotient",
    "__version__",
]
