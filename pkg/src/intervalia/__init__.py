"""Interval orders and permutations with few interval lengths.

Exact constructions of 2-count representations (depth-2 permutations,
height-3 depth-2 interval orders), exact k-count oracles built on a rational
simplex, and exhaustive search tools.
"""

from .ascent import (AscentSequence, ascent_of_order, enumerate_ascent_sequences,
                     order_from_ascent, parse_ascent_sequence)
from .construct2 import two_count_for_coloring, two_count_permutation
from .errors import IntervaliaError
from .exactlp import LinearSystem, lp_feasible_strict
from .height3 import two_count_height3
from .intervals import IntervalFamily, distinct_lengths
from .kcount import is_k_count_order, is_k_count_perm
from .order import (IntervalOrder, Poset, canonical_representation, depth_order,
                    find_springs, height, magnitude, pp_graph,
                    verify_order_representation)
from .perm import (SortedColoring, mirsky_sorted_coloring, perm_depth,
                   verify_perm_representation)

__version__ = "0.1.0"
