"""cliquekit: clique enumeration with linear delay and bound verification.

The hot enumeration loop runs in a compiled extension when available and
falls back to pure Python otherwise; :data:`KERNEL_NAME` reports which
one is active ("c" or "python").
"""

from ._kernel import KERNEL_NAME
from .bounds import (
    BoundReport,
    CliqueSumInequality,
    almost_bipartite_clique_bound,
    clique_sum_square_inequality,
    degenerate_clique_bound,
    exact_almost_bipartite_count_bound,
    f_prime,
    planar_clique_bound,
    verify_clique_sum_tree_bound,
    verify_family_bound,
)
from .enumeration import (
    DELAY_CONSTANT,
    DelayStats,
    all_cliques,
    brute_force_cliques,
    cliques_recursive,
    count_cliques,
    degenerate_cliques,
    degenerate_step_count,
    measure_delay,
)
from .generators import (
    CliqueSumLeaf,
    CliqueSumNode,
    CliqueSumSpec,
    CliqueSumTree,
    SplitMix64,
    almost_bipartite_graph,
    apollonian,
    clique_sum,
    complete_bipartite,
    complete_graph,
    compose_clique_sum_tree,
    k_tree,
    random_clique_sum_tree,
    random_graph,
)
from .graph import (
    Graph,
    GraphError,
    build_graph,
    induced_subgraph,
    intersect_ascending,
    is_adjacent,
    is_bipartite,
    read_edge_list,
    write_edge_list,
)
from .ordering import DegenerateOrdering, degeneracy_ordering, ordered_adjacent

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CliqueSumInequality",
    "CliqueSumLeaf",
    "CliqueSumNode",
    "CliqueSumSpec",
    "CliqueSumTree",
    "DELAY_CONSTANT",
    "DegenerateOrdering",
    "DelayStats",
    "Graph",
    "GraphError",
    "KERNEL_NAME",
    "SplitMix64",
    "all_cliques",
    "almost_bipartite_clique_bound",
    "almost_bipartite_graph",
    "apollonian",
    "brute_force_cliques",
    "build_graph",
    "clique_sum",
    "clique_sum_square_inequality",
    "cliques_recursive",
    "complete_bipartite",
    "complete_graph",
    "compose_clique_sum_tree",
    "count_cliques",
    "degeneracy_ordering",
    "degenerate_clique_bound",
    "degenerate_cliques",
    "degenerate_step_count",
    "exact_almost_bipartite_count_bound",
    "f_prime",
    "induced_subgraph",
    "intersect_ascending",
    "is_adjacent",
    "is_bipartite",
    "k_tree",
    "measure_delay",
    "ordered_adjacent",
    "planar_clique_bound",
    "random_clique_sum_tree",
    "random_graph",
    "read_edge_list",
    "verify_clique_sum_tree_bound",
    "verify_family_bound",
    "write_edge_list",
    "__version__",
]
