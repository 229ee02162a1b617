"""Exact arithmetic for multidimensional figurate numbers.

The kernel evaluates the numbers themselves (two independent routes) and
their gnomon decompositions; :mod:`hypersolids.triangle` arranges them into
fixed-difference triangles and exposes the triangle's structural rules;
:mod:`hypersolids.sums` handles sums over the simplex v + d + n = s and the
underlying binomial identities; :mod:`hypersolids.search` inverts the value
map; :mod:`hypersolids.verify` sweeps every identity over finite grids.
"""

from .kernel import (
    COORD_LIMIT,
    METHODS,
    IndexTriple,
    RangeError,
    binomial,
    d_gnomon,
    gnomon_term,
    hyper4,
    hypersolid,
    n_gnomon,
    permutation,
    polygonal,
    pyramidal,
    v_gnomon,
)
from .search import RepresentationHit, rank_of, representations, sequence_slice
from .sums import (
    LEMMAS,
    SumReport,
    enumerate_triples,
    lemma_check,
    sum_fixed_s,
    sum_fixed_sd,
    sum_fixed_sn,
    sum_fixed_sv,
)
from .triangle import (
    Triangle,
    build_triangle,
    compile_row,
    diagonal_sum,
    pascal_entry_check,
    recurrence_sequence,
    row_sum,
)
from .verify import SUITES, GridBounds, VerifyOutcome, run_suite, run_suites

__version__ = "0.1.0"

__all__ = [
    "COORD_LIMIT",
    "METHODS",
    "SUITES",
    "GridBounds",
    "IndexTriple",
    "LEMMAS",
    "RangeError",
    "RepresentationHit",
    "SumReport",
    "Triangle",
    "VerifyOutcome",
    "__version__",
    "binomial",
    "build_triangle",
    "compile_row",
    "d_gnomon",
    "diagonal_sum",
    "enumerate_triples",
    "gnomon_term",
    "hyper4",
    "hypersolid",
    "lemma_check",
    "n_gnomon",
    "pascal_entry_check",
    "permutation",
    "polygonal",
    "pyramidal",
    "rank_of",
    "recurrence_sequence",
    "representations",
    "row_sum",
    "run_suite",
    "run_suites",
    "sequence_slice",
    "sum_fixed_s",
    "sum_fixed_sd",
    "sum_fixed_sn",
    "sum_fixed_sv",
    "v_gnomon",
]
