"""Clique listing algorithms, an exact counter, and delay instrumentation.

Every algorithm here treats the empty set and all singletons as cliques,
so a graph on n vertices always has at least n + 1 cliques and K_n has
exactly 2^n. Counts are plain Python integers and therefore exact at any
magnitude.

Three listing routes are provided, all deterministic:

* :func:`cliques_recursive` - the reference recursion: split on the
  smallest vertex v, solve the neighborhood subgraph and the deletion
  subgraph, reassemble. Materializes the full clique set; intended for
  small graphs and as a cross-check.
* :func:`all_cliques` - the iterative stack algorithm with linear delay.
  The choice at each level is the smallest id in the candidate set, so
  the output order is the depth-first order (), (0,), (0, s), ...
  The hot loop lives in the selected kernel (compiled or pure Python).
* :func:`degenerate_cliques` - computes a degeneracy ordering and runs
  the stack algorithm on each small subgraph induced by a vertex and its
  forward neighborhood, so total work scales with d * 2^d * n instead of
  the worst case over the whole graph.

:func:`brute_force_cliques` is the independent oracle: it tests every
subset for pairwise adjacency and shares no code with the three routes.

Delay accounting is defined in ``_kernel_py`` and is identical in both
kernels. With that accounting, max_gap <= 2n + 3 on every graph; the
exported :data:`DELAY_CONSTANT` C = 3 satisfies max_gap <= C * n for all
n >= 3 (for smaller n the additive constant dominates).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from ._kernel import KERNEL_NAME, run_allcliques
from .graph import Graph, GraphError, induced_subgraph
from .ordering import degeneracy_ordering

Clique = tuple[int, ...]
Sink = Callable[[Clique], object]

# max_gap <= DELAY_CONSTANT * n for every graph with n >= 3 vertices
# (structural bound 2n + 3: at most n + 1 pop steps between outputs,
# then one emitting block of at most n + 2 steps).
DELAY_CONSTANT = 3

_ORACLE_LIMIT = 25


@dataclass(frozen=True)
class DelayStats:
    """Instrumented counts for one enumeration run (steps, not seconds)."""

    n: int
    clique_count: int
    total_steps: int
    max_gap: int

    @property
    def gap_per_vertex(self) -> float:
        return self.max_gap / self.n if self.n else 0.0


def cliques_recursive(g: Graph) -> set[Clique]:
    """Reference recursion returning the set of all cliques, incl. ().

    The branch vertex at each step is the smallest remaining id. Guarded
    to n <= 25 because the result is held in memory.
    """
    if g.n > _ORACLE_LIMIT:
        raise GraphError(f"cliques_recursive is limited to n <= {_ORACLE_LIMIT}, got {g.n}")
    masks = [0] * g.n
    for v in range(g.n):
        row = 0
        for w in g.adj[v]:
            row |= 1 << w
        masks[v] = row

    def rec(vmask: int) -> set[int]:
        if vmask == 0:
            return {0}
        v = (vmask & -vmask).bit_length() - 1
        with_v = {c | (1 << v) for c in rec(vmask & masks[v])}
        with_v |= rec(vmask & (vmask - 1))
        return with_v

    full = (1 << g.n) - 1
    return {_mask_to_tuple(c) for c in rec(full)}


def brute_force_cliques(g: Graph) -> set[Clique]:
    """Independent oracle: every subset, kept iff pairwise adjacent."""
    if g.n > _ORACLE_LIMIT:
        raise GraphError(f"brute_force_cliques is limited to n <= {_ORACLE_LIMIT}, got {g.n}")
    closed = [0] * g.n
    for v in range(g.n):
        row = 1 << v
        for w in g.adj[v]:
            row |= 1 << w
        closed[v] = row
    out: set[Clique] = set()
    for s in range(1 << g.n):
        t = s
        ok = True
        while t:
            v = (t & -t).bit_length() - 1
            if closed[v] & s != s:
                ok = False
                break
            t &= t - 1
        if ok:
            out.add(_mask_to_tuple(s))
    return out


def all_cliques(g: Graph, sink: Optional[Sink] = None,
                max_cliques: Optional[int] = None) -> DelayStats:
    """Stream every clique of g exactly once to ``sink``; return stats.

    Output starts with the empty clique and follows the deterministic
    smallest-id depth-first order. ``max_cliques`` truncates the run for
    prefix instrumentation of graphs too large to enumerate fully.
    """
    indptr, indices = g.csr()
    count, steps, max_gap = run_allcliques(
        g.n, indptr, indices, sink, max_cliques or 0
    )
    return DelayStats(n=g.n, clique_count=int(count), total_steps=int(steps),
                      max_gap=int(max_gap))


def count_cliques(g: Graph) -> int:
    """Exact number of cliques in g, including the empty clique."""
    return all_cliques(g).clique_count


def measure_delay(g: Graph, max_cliques: Optional[int] = None) -> DelayStats:
    """Run the streaming algorithm with counting only and report delays."""
    return all_cliques(g, sink=None, max_cliques=max_cliques)


def degenerate_cliques(g: Graph, sink: Optional[Sink] = None) -> int:
    """List all cliques via per-vertex forward neighborhoods; return count.

    The empty clique is delivered exactly once, up front. For each vertex
    v in degeneracy order the stack algorithm runs on the subgraph induced
    by {v} union N+(v), and only the cliques containing v are delivered
    (translated back to original ids), so each clique of g is delivered
    exactly once: by the minimum-position vertex it contains.
    """
    count, _ = _degenerate_run(g, sink)
    return count


def degenerate_step_count(g: Graph) -> tuple[int, int]:
    """(clique_count, summed kernel steps) of the per-vertex subproblems.

    The step total is what the d * 2^d * n time law is fitted against.
    """
    return _degenerate_run(g, None)


def _degenerate_run(g: Graph, sink: Optional[Sink]) -> tuple[int, int]:
    ordering = degeneracy_ordering(g)
    count = 1
    total_steps = 0
    if sink is not None:
        sink(())
    for v in ordering.order:
        verts = sorted((v, *ordering.forward[v]))
        sub, mapping = induced_subgraph(g, verts)
        local_v = mapping[v]
        indptr, indices = sub.csr()

        if sink is None:
            def deliver(t: Clique, _lv=local_v) -> None:
                nonlocal count
                if _lv in t:
                    count += 1
        else:
            def deliver(t: Clique, _lv=local_v, _verts=verts) -> None:
                nonlocal count
                if _lv in t:
                    count += 1
                    sink(tuple(_verts[j] for j in t))

        _, steps, _ = run_allcliques(sub.n, indptr, indices, deliver, 0)
        total_steps += int(steps)
    return count, total_steps


def _mask_to_tuple(mask: int) -> Clique:
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        out.append(v)
        mask &= mask - 1
    return tuple(out)
