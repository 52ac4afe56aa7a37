"""Immutable simple undirected graphs with sorted adjacency lists.

Vertices are dense 0-based integer ids. Adjacency lists are strictly
ascending, which makes neighborhood intersection a linear merge and
adjacency testing a binary search. Graphs are immutable after
construction, so any number of concurrent readers is safe.
"""

from __future__ import annotations

from array import array
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence, TextIO


class GraphError(ValueError):
    """Raised for invalid graph construction or malformed graph input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``n`` vertices 0..n-1, ascending adjacency.

    Invariants (enforced by :func:`build_graph`):
      * adjacency is symmetric,
      * no self-loops, no duplicate entries, each row strictly ascending,
      * ``2*m == sum(len(row) for row in adj)``.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int = field(default=0)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(row) for row in self.adj), default=0)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    @cached_property
    def _csr(self) -> tuple[array, array]:
        indptr = array("i", bytes(4 * (self.n + 1)))
        indices = array("i", bytes(4 * (2 * self.m)))
        k = 0
        for u in range(self.n):
            indptr[u] = k
            for v in self.adj[u]:
                indices[k] = v
                k += 1
        indptr[self.n] = k
        return indptr, indices

    def csr(self) -> tuple[array, array]:
        """Adjacency in compressed row form (indptr, indices), int32 arrays."""
        return self._csr


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated Graph from unordered id pairs.

    Duplicate pairs collapse to one edge. Self-loops and out-of-range ids
    raise :class:`GraphError` naming the offending pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop rejected: ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge endpoint out of range for n={n}: ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    adj = tuple(tuple(sorted(s)) for s in nbrs)
    m = sum(len(row) for row in adj) // 2
    return Graph(n=n, adj=adj, m=m)


def is_adjacent(g: Graph, u: int, v: int) -> bool:
    """True iff uv is an edge; u == v is never adjacent (no self-loops)."""
    if u == v:
        return False
    row = g.adj[u]
    i = bisect_left(row, v)
    return i < len(row) and row[i] == v


def intersect_ascending(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Linear-merge intersection of two strictly ascending sequences."""
    out: list[int] = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            out.append(x)
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return out


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on vertex set ``s``, relabeled 0..|s|-1.

    Relabeling preserves ascending id order; the returned mapping is the
    order isomorphism old id -> new id.
    """
    verts = sorted(set(s))
    for v in verts:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    mapping = {old: new for new, old in enumerate(verts)}
    member = set(verts)
    adj = tuple(
        tuple(mapping[w] for w in g.adj[old] if w in member) for old in verts
    )
    m = sum(len(row) for row in adj) // 2
    return Graph(n=len(verts), adj=adj, m=m), mapping


def is_bipartite(g: Graph) -> Optional[list[int]]:
    """Return a proper 2-coloring (list of 0/1 per vertex) or None.

    None means an odd cycle exists. Isolated vertices get color 0.
    """
    color: list[int] = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def write_edge_list(g: Graph, fp: TextIO) -> None:
    """Write the text edge-list format: ``n m`` header, then ``u v`` lines.

    Edges appear with u < v in lexicographic order, single space, LF.
    """
    fp.write(f"{g.n} {g.m}\n")
    for u, v in g.edges():
        fp.write(f"{u} {v}\n")


def read_edge_list(fp: TextIO) -> Graph:
    """Parse the edge-list format written by :func:`write_edge_list`.

    Lines starting with ``#`` are ignored. The header declares ``n m``;
    exactly m edge lines ``u v`` with 0 <= u < v < n must follow.
    """
    lines = (ln for ln in fp if not ln.startswith("#"))
    header = next(lines, None)
    if header is None:
        raise GraphError("empty edge-list input")
    parts = header.split()
    if len(parts) != 2:
        raise GraphError(f"malformed header line: {header.strip()!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphError(f"malformed header line: {header.strip()!r}") from None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for ln in lines:
        if not ln.strip():
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"malformed edge line: {ln.strip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"malformed edge line: {ln.strip()!r}") from None
        if not (0 <= u < v < n):
            raise GraphError(f"edge ({u}, {v}) violates 0 <= u < v < n={n}")
        if (u, v) in seen:
            raise GraphError(f"duplicate edge line: ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    if len(edges) != m:
        raise GraphError(f"header declares m={m} but found {len(edges)} edges")
    return build_graph(n, edges)
