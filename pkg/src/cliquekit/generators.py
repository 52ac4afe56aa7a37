"""Seeded, deterministic constructors for the extremal graph families.

All randomness flows through :class:`SplitMix64`, a self-contained
generator with fixed published constants, so a (family, parameters, seed)
triple produces the identical edge list on every platform and run.

The families here are the tight or structural examples for the clique
count bounds: complete and complete bipartite graphs, k-trees (tight for
the 2^k (n-k+1) degenerate bound), Apollonian networks (planar 3-trees,
tight for the 8(n-2) planar bound), apexed bipartite graphs, and
clique-sums of arbitrary summands.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .graph import Graph, GraphError, build_graph, is_adjacent

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 pseudo-random generator (Steele, Lea & Flood).

    state' = state + 0x9E3779B97F4A7C15; the output is the state mixed by
    two xor-shift-multiply rounds (0xBF58476D1CE4E5B9, 0x94D049BB133111EB).
    64-bit wrapping arithmetic throughout; trivially portable.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def randrange(self, n: int) -> int:
        """Integer in [0, n) via the multiply-shift reduction."""
        if n <= 0:
            raise ValueError("randrange requires a positive bound")
        return (self.next_u64() * n) >> 64


def complete_graph(n: int) -> Graph:
    """K_n: every pair adjacent; 2^n cliques."""
    if n < 0:
        raise GraphError("complete_graph requires n >= 0")
    return build_graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with sides {0..a-1} and {a..a+b-1}."""
    if a < 0 or b < 0:
        raise GraphError("complete_bipartite requires a, b >= 0")
    return build_graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def k_tree(k: int, n: int, seed: int = 0) -> Graph:
    """Random k-tree on n vertices: K_{k+1} plus stacked vertices.

    Each new vertex attaches to a uniformly chosen existing k-clique
    (tracked incrementally), so the result is a k-tree for every seed and
    has exactly 2^k (n - k + 1) cliques.
    """
    if n <= k:
        raise GraphError(f"k_tree requires n >= k + 1, got k={k}, n={n}")
    rng = SplitMix64(seed)
    edges = [(u, v) for u in range(k + 1) for v in range(u + 1, k + 1)]
    base = list(range(k + 1))
    k_cliques = [tuple(c for c in base if c != skip) for skip in base] if k > 0 else [()]
    for v in range(k + 1, n):
        host = k_cliques[rng.randrange(len(k_cliques))]
        for u in host:
            edges.append((u, v))
        for skip in range(k):
            k_cliques.append(tuple(c for i, c in enumerate(host) if i != skip) + (v,))
    return build_graph(n, edges)


def apollonian(n: int, seed: int = 0) -> Graph:
    """Apollonian network (planar 3-tree) on n >= 3 vertices.

    Starts from a triangle; each new vertex is stacked inside a uniformly
    chosen face, replacing it by three. Planar by construction, and has
    exactly 8(n - 2) cliques.
    """
    if n < 3:
        raise GraphError(f"apollonian requires n >= 3, got {n}")
    rng = SplitMix64(seed)
    edges = [(0, 1), (0, 2), (1, 2)]
    faces = [(0, 1, 2)]
    for v in range(3, n):
        idx = rng.randrange(len(faces))
        a, b, c = faces[idx]
        edges.extend(((a, v), (b, v), (c, v)))
        faces[idx] = (a, b, v)
        faces.append((a, c, v))
        faces.append((b, c, v))
    return build_graph(n, edges)


def almost_bipartite_graph(a: int, b: int, h: int, p: float, seed: int = 0) -> Graph:
    """Random bipartite graph on sides a, b plus h universal apex vertices.

    Each side pair gets an edge with probability p; the apices (the last
    h ids) are adjacent to every other vertex, including each other, so
    deleting them restores bipartiteness.
    """
    if h < 0 or a < 0 or b < 0:
        raise GraphError("almost_bipartite_graph requires a, b, h >= 0")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must be in [0, 1], got {p}")
    rng = SplitMix64(seed)
    n = a + b + h
    edges = []
    for i in range(a):
        for j in range(b):
            if rng.random() < p:
                edges.append((i, a + j))
    for x in range(a + b, n):
        for w in range(x):
            edges.append((w, x))
    return build_graph(n, edges)


def random_graph(n: int, p: float, seed: int = 0) -> Graph:
    """G(n, p): each pair independently an edge with probability p."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must be in [0, 1], got {p}")
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return build_graph(n, edges)


@dataclass(frozen=True)
class CliqueSumSpec:
    """One k-sum recipe: which cliques to glue, how to pair, what to drop.

    ``w1`` and ``w2`` are ascending k-cliques of the two summands;
    ``pairing[i]`` is the vertex of w2 identified with ``w1[i]`` (defaults
    to ascending order). ``deleted_join_edges`` are pairs of w1 vertices
    (the surviving ids) removed from the glued result.
    """

    k: int
    w1: tuple[int, ...]
    w2: tuple[int, ...]
    pairing: Optional[tuple[int, ...]] = None
    deleted_join_edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def effective_pairing(self) -> tuple[int, ...]:
        return self.pairing if self.pairing is not None else self.w2


def _check_clique(g: Graph, w: Sequence[int], which: str) -> None:
    for i, u in enumerate(w):
        for v in w[i + 1 :]:
            if not is_adjacent(g, u, v):
                raise GraphError(f"{which} is not a clique: ({u}, {v}) missing")


def clique_sum(g1: Graph, g2: Graph, spec: CliqueSumSpec) -> Graph:
    """Glue g1 and g2 along the k-cliques named by ``spec``.

    g1 keeps ids 0..n1-1; g2's non-join vertices follow in ascending
    order, so the result has n1 + n2 - k vertices. Join edges listed in
    ``deleted_join_edges`` are absent from the result regardless of which
    summand supplied them.
    """
    k = spec.k
    if len(spec.w1) != k or len(spec.w2) != k:
        raise GraphError(f"join cliques must have size k={k}, got {len(spec.w1)} and {len(spec.w2)}")
    pairing = spec.effective_pairing()
    if len(pairing) != k or set(pairing) != set(spec.w2):
        raise GraphError("pairing must be an ordering of w2")
    for name, g, w in (("w1", g1, spec.w1), ("w2", g2, spec.w2)):
        for u in w:
            if not 0 <= u < g.n:
                raise GraphError(f"{name} vertex {u} out of range")
    _check_clique(g1, spec.w1, "w1")
    _check_clique(g2, spec.w2, "w2")
    w1set = set(spec.w1)
    deleted = set()
    for u, v in spec.deleted_join_edges:
        if u not in w1set or v not in w1set or u == v:
            raise GraphError(f"deleted join edge ({u}, {v}) is not a pair within w1")
        deleted.add((min(u, v), max(u, v)))

    to_w1 = {pairing[i]: spec.w1[i] for i in range(k)}
    relabel = dict(to_w1)
    nxt = g1.n
    for v in range(g2.n):
        if v not in relabel:
            relabel[v] = nxt
            nxt += 1

    edges = set()
    for u, v in g1.edges():
        edges.add((u, v))
    for u, v in g2.edges():
        a, b = relabel[u], relabel[v]
        edges.add((min(a, b), max(a, b)))
    edges -= deleted
    return build_graph(g1.n + g2.n - k, edges)


@dataclass(frozen=True)
class CliqueSumLeaf:
    graph: Graph


@dataclass(frozen=True)
class CliqueSumNode:
    left: "CliqueSumTree"
    right: "CliqueSumTree"
    spec: CliqueSumSpec


CliqueSumTree = Union[CliqueSumLeaf, CliqueSumNode]


def compose_clique_sum_tree(t: CliqueSumTree) -> tuple[Graph, list[int]]:
    """Fold a clique-sum tree bottom-up; return (graph, leaf sizes)."""
    if isinstance(t, CliqueSumLeaf):
        return t.graph, [t.graph.n]
    left, left_sizes = compose_clique_sum_tree(t.left)
    right, right_sizes = compose_clique_sum_tree(t.right)
    return clique_sum(left, right, t.spec), left_sizes + right_sizes


def random_clique_sum_tree(
    leaves: int,
    seed: int = 0,
    max_join: int = 2,
    side_lo: int = 4,
    side_hi: int = 10,
    edge_p: float = 0.6,
) -> CliqueSumTree:
    """Seeded corpus builder: a left-deep tree of random bipartite leaves.

    Leaves are connected-ish random bipartite graphs (triangle-free, so no
    3-clique), joined by 0-, 1- or 2-sums chosen to exist in the partial
    composition. Used to exercise the composite clique-count bound.
    """
    if leaves < 1:
        raise GraphError("random_clique_sum_tree requires at least one leaf")
    rng = SplitMix64(seed)

    def make_leaf() -> Graph:
        a = side_lo + rng.randrange(side_hi - side_lo + 1)
        b = side_lo + rng.randrange(side_hi - side_lo + 1)
        g = almost_bipartite_graph(a, b, 0, edge_p, seed=rng.next_u64())
        if g.m == 0:
            g = complete_bipartite(a, b)
        return g

    def pick_join(g: Graph, k: int) -> tuple[int, ...]:
        if k == 0:
            return ()
        if k == 1:
            return (rng.randrange(g.n),)
        u = rng.randrange(g.n)
        for off in range(g.n):
            cand = (u + off) % g.n
            if g.adj[cand]:
                row = g.adj[cand]
                return tuple(sorted((cand, row[rng.randrange(len(row))])))
        raise GraphError("no edge available for a 2-sum join")

    tree: CliqueSumTree = CliqueSumLeaf(make_leaf())
    acc = tree.graph
    for _ in range(leaves - 1):
        leaf = make_leaf()
        k = rng.randrange(max_join + 1)
        w1 = pick_join(acc, k)
        w2 = pick_join(leaf, k)
        spec = CliqueSumSpec(k=k, w1=w1, w2=w2)
        tree = CliqueSumNode(left=tree, right=CliqueSumLeaf(leaf), spec=spec)
        acc = clique_sum(acc, leaf, spec)
    return tree
