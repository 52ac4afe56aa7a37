"""Degenerate vertex orderings, forward-neighbor sets, and O(d) adjacency.

A d-degenerate ordering (v1, ..., vn) has every forward neighborhood
N+(vi) = {vj : j > i, vi vj in E} of size at most d. Repeated removal of
a minimum-degree vertex produces an ordering whose maximum forward
degree equals the graph's degeneracy exactly. Ties are broken toward the
smallest id, so orderings are deterministic and reproducible.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class DegenerateOrdering:
    """A peeling order with its inverse, forward sets, and degeneracy.

    ``forward[v]`` holds N+(v) sorted by position in the ordering (not by
    raw id), so the head of each list is the next candidate seen by the
    enumeration. Every edge appears in exactly one forward list.
    """

    order: tuple[int, ...]
    position: tuple[int, ...]
    forward: tuple[tuple[int, ...], ...]
    degeneracy: int


def degeneracy_ordering(g: Graph) -> DegenerateOrdering:
    """Min-degree peeling with an array-of-buckets priority structure.

    Each bucket is a binary heap of vertex ids so that, among vertices of
    minimum current degree, the smallest id is removed first. Entries go
    stale when degrees drop and are discarded lazily, which costs a log
    factor over the plain bucket queue but keeps the ordering
    deterministic. The degeneracy of the empty graph is 0.
    """
    n = g.n
    deg = [len(g.adj[v]) for v in range(n)]
    buckets: list[list[int]] = [[] for _ in range(n + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)
    for b in buckets:
        heapq.heapify(b)

    removed = [False] * n
    order: list[int] = []
    d = 0
    cur = 0
    for _ in range(n):
        if cur > 0:
            cur -= 1
        while True:
            b = buckets[cur]
            while b and (removed[b[0]] or deg[b[0]] != cur):
                heapq.heappop(b)
            if b:
                break
            cur += 1
        v = heapq.heappop(buckets[cur])
        removed[v] = True
        order.append(v)
        if deg[v] > d:
            d = deg[v]
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(buckets[deg[w]], w)

    position = [0] * n
    for idx, v in enumerate(order):
        position[v] = idx
    forward = tuple(
        tuple(sorted((w for w in g.adj[v] if position[w] > position[v]),
                     key=position.__getitem__))
        for v in range(n)
    )
    return DegenerateOrdering(
        order=tuple(order),
        position=tuple(position),
        forward=forward,
        degeneracy=d,
    )


def ordered_adjacent(o: DegenerateOrdering, u: int, v: int) -> bool:
    """Adjacency test via the earlier vertex's forward list, cost O(d)."""
    if u == v:
        raise ValueError("ordered_adjacent requires two distinct vertices")
    if o.position[u] > o.position[v]:
        u, v = v, u
    return v in o.forward[u]
