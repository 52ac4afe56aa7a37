"""Closed-form clique-count bounds and verification against enumeration.

Each calculator returns the exact bound value (Python int, or Fraction
where a quarter factor appears); the verifiers enumerate the graph and
compare exactly. The composite bound's global constant is not
constructive, so verification is per family with explicit per-family
constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from .enumeration import all_cliques, count_cliques
from .generators import CliqueSumTree, compose_clique_sum_tree
from .graph import Graph, GraphError

BoundValue = Union[int, Fraction]


@dataclass(frozen=True)
class BoundReport:
    """One bound formula evaluated against an exact enumerated count."""

    family: str
    n: int
    params: dict = field(default_factory=dict)
    bound: BoundValue = 0
    actual: int = 0

    @property
    def holds(self) -> bool:
        return self.actual <= self.bound

    @property
    def tight(self) -> bool:
        return self.actual == self.bound


def degenerate_clique_bound(d: int, n: int) -> int:
    """2^d (n - d + 1): max cliques of a d-degenerate n-vertex graph."""
    if n < d or d < 0:
        raise GraphError(f"degenerate_clique_bound requires n >= d >= 0, got d={d}, n={n}")
    return (1 << d) * (n - d + 1)


def planar_clique_bound(n: int) -> int:
    """8(n - 2): max cliques of an n-vertex planar graph, n >= 3."""
    if n < 3:
        raise GraphError(f"planar_clique_bound requires n >= 3, got {n}")
    return 8 * (n - 2)


def almost_bipartite_clique_bound(h: int, n: int) -> int:
    """2^h n^2 + 2: cliques of a graph bipartite after removing h apices."""
    if h > n or h < 0:
        raise GraphError(f"almost_bipartite_clique_bound requires 0 <= h <= n, got h={h}, n={n}")
    return (1 << h) * n * n + 2


def exact_almost_bipartite_count_bound(h_actual: int, n: int) -> Fraction:
    """The sharper apexed-bipartite bound 2^h (1/4 (n-h)^2 + (n-h) + 1).

    Kept as an exact rational; comparisons against integer counts never
    round.
    """
    if h_actual > n or h_actual < 0:
        raise GraphError(
            f"exact_almost_bipartite_count_bound requires 0 <= h <= n, got h={h_actual}, n={n}"
        )
    r = n - h_actual
    return (1 << h_actual) * (Fraction(r * r, 4) + r + 1)


class CliqueSumInequality(NamedTuple):
    """(n1+n2-k)^2 >= n1^2 + n2^2 check plus its hypothesis test."""

    inequality_holds: bool
    hypotheses_hold: bool


def clique_sum_square_inequality(n1: int, n2: int, k: int) -> CliqueSumInequality:
    """Square superadditivity of a k-sum's vertex counts.

    The hypotheses are n1 >= k^2/2 + k and n2 >= k + 1 (checked exactly
    as 2*n1 >= k^2 + 2k); whenever they hold the inequality must too.
    A k-sum needs a k-clique in each summand, so n1, n2 >= k is required.
    """
    if k < 0 or n1 < max(k, 1) or n2 < max(k, 1):
        raise GraphError(f"requires n1, n2 >= max(k, 1) and k >= 0, got n1={n1}, n2={n2}, k={k}")
    n = n1 + n2 - k
    holds = n * n >= n1 * n1 + n2 * n2
    hyp = (2 * n1 >= k * k + 2 * k) and (n2 >= k + 1)
    return CliqueSumInequality(inequality_holds=holds, hypotheses_hold=hyp)


def f_prime(k: int, f_k: int) -> int:
    """max(f(k), 2^(k^2 + 2k)): the composite bound's leaf constant."""
    if k < 1:
        raise GraphError(f"f_prime requires k >= 1, got {k}")
    return max(f_k, 1 << (k * k + 2 * k))


def verify_family_bound(g: Graph, bound: BoundValue, label: str,
                        params: Optional[dict] = None) -> BoundReport:
    """Enumerate g exactly and compare against ``bound``."""
    actual = count_cliques(g)
    return BoundReport(family=label, n=g.n, params=dict(params or {}),
                       bound=bound, actual=actual)


def verify_clique_sum_tree_bound(t: CliqueSumTree, k: int, f_k: int) -> BoundReport:
    """Compose a clique-sum tree and check actual <= f'(k, f_k) * n^2.

    Preconditions checked per leaf: no k-clique, and clique count at most
    f_k * n_leaf^2; a violating leaf raises naming its index. When every
    leaf is non-small (n_leaf >= k^2/2 + k) the report's params also carry
    the leaf square sum against n^2.
    """
    g, leaf_sizes = compose_clique_sum_tree(t)
    leaves = _collect_leaves(t)
    for idx, leaf in enumerate(leaves):
        biggest = 0
        def track(c: tuple, _idx=idx) -> None:
            nonlocal biggest
            if len(c) > biggest:
                biggest = len(c)
        stats = all_cliques(leaf, sink=track)
        if biggest >= k:
            raise GraphError(f"leaf {idx} contains a {k}-clique")
        if stats.clique_count > f_k * leaf.n * leaf.n:
            raise GraphError(
                f"leaf {idx} has {stats.clique_count} cliques, above f_k * n^2 = "
                f"{f_k * leaf.n * leaf.n}"
            )
    actual = count_cliques(g)
    bound = f_prime(k, f_k) * g.n * g.n
    params: dict = {"k": k, "f_k": f_k, "leaves": len(leaf_sizes)}
    threshold = Fraction(k * k, 2) + k
    if all(sz >= threshold for sz in leaf_sizes):
        params["leaf_square_sum"] = sum(sz * sz for sz in leaf_sizes)
        params["n_squared"] = g.n * g.n
    return BoundReport(family="clique-sum-tree", n=g.n, params=params,
                       bound=bound, actual=actual)


def _collect_leaves(t: CliqueSumTree) -> list[Graph]:
    from .generators import CliqueSumLeaf

    if isinstance(t, CliqueSumLeaf):
        return [t.graph]
    return _collect_leaves(t.left) + _collect_leaves(t.right)
