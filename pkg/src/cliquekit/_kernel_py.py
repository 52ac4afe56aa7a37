"""Pure-Python clique enumeration kernel.

This is the fallback twin of the compiled kernel in ``_speedups``; both
implement the identical iterative loop and step accounting, and must
produce byte-identical output streams and statistics.

The loop keeps a stack of candidate sets V_1, ..., V_i. Each V is an
ascending run inside one flat workspace buffer, and the chosen vertex is
always the minimum of V_i, so "choose" reads the head of the run and
"remove" advances its start pointer. Descending one level intersects the
live run with the chosen vertex's (ascending) adjacency row by linear
merge and writes the result immediately after the parent's region.

Step accounting (fixed so the delay constant is machine-independent):
every loop iteration costs 1 step for the emptiness test, and an
iteration that emits a clique costs an additional |V_i| + 1 steps for the
choose/output/intersect/remove block. With this accounting the gap
between consecutive outputs is at most 2n + 3: at most n + 1 pop
iterations of 1 step each, then one emitting block of at most n + 2.
"""

from __future__ import annotations

from typing import Callable, Optional, Sequence


def run_allcliques(
    n: int,
    indptr: Sequence[int],
    indices: Sequence[int],
    sink: Optional[Callable[[tuple[int, ...]], object]],
    max_outputs: int = 0,
) -> tuple[int, int, int]:
    """Enumerate all cliques; return (clique_count, total_steps, max_gap).

    The empty clique is emitted first. ``sink``, when given, receives each
    clique as an ascending tuple of vertex ids. ``max_outputs`` > 0 stops
    the run after that many cliques (prefix instrumentation); 0 means run
    to completion. ``max_gap`` is the maximum step distance between two
    consecutive outputs (0 if fewer than two cliques were emitted).
    """
    count = 1
    if sink is not None:
        sink(())
    if max_outputs and count >= max_outputs:
        return count, 0, 0

    maxdeg = 0
    for v in range(n):
        d = indptr[v + 1] - indptr[v]
        if d > maxdeg:
            maxdeg = d

    buf = list(range(n)) + [0] * (maxdeg * (maxdeg + 1) // 2 + 8)
    depth_cap = maxdeg + 4
    cur = [0] * depth_cap
    end = [0] * depth_cap
    chain = [0] * depth_cap

    cur[1] = 0
    end[1] = n
    steps = 0
    last = 0
    max_gap = 0
    i = 1
    while i >= 1:
        steps += 1
        if cur[i] == end[i]:
            i -= 1
            continue
        lo = cur[i]
        hi = end[i]
        steps += hi - lo + 1
        x = buf[lo]
        chain[i] = x
        count += 1
        gap = steps - last
        if gap > max_gap:
            max_gap = gap
        last = steps
        if sink is not None:
            sink(tuple(chain[1 : i + 1]))
        if max_outputs and count >= max_outputs:
            break
        # V_{i+1} := V_i /\ N(x), written right after the parent's region.
        a = lo
        b = indptr[x]
        b_end = indptr[x + 1]
        out = hi
        while a < hi and b < b_end:
            va = buf[a]
            vb = indices[b]
            if va == vb:
                buf[out] = va
                out += 1
                a += 1
                b += 1
            elif va < vb:
                a += 1
            else:
                b += 1
        cur[i] = lo + 1
        cur[i + 1] = hi
        end[i + 1] = out
        i += 1
    return count, steps, max_gap
