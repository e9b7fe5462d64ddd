"""Exact mixed dominating set solvers on bounded-treewidth graphs."""

from .dp import DPResult, run_dp
from .graph import (
    Graph,
    MixedElement,
    is_mixed_dominating_set,
    mixed_closed_neighborhood,
    neighbors,
    parse_gr,
    write_gr,
)
from .mds6 import Run6Result, run6
from .oracle import OracleResult, SizeGuardError, brute_force, greedy_upper_bound
from .treedec import (
    NiceTreeDecomposition,
    TreeDecomposition,
    make_very_nice,
    min_fill_decompose,
    parse_td,
    postorder_traversal,
    validate_td,
    write_td,
)

__all__ = [
    "DPResult",
    "Graph",
    "MixedElement",
    "NiceTreeDecomposition",
    "OracleResult",
    "Run6Result",
    "SizeGuardError",
    "TreeDecomposition",
    "brute_force",
    "greedy_upper_bound",
    "is_mixed_dominating_set",
    "make_very_nice",
    "min_fill_decompose",
    "mixed_closed_neighborhood",
    "neighbors",
    "parse_gr",
    "parse_td",
    "postorder_traversal",
    "run6",
    "run_dp",
    "validate_td",
    "write_gr",
    "write_td",
]
