# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled clique enumeration kernel.

Twin of ``_kernel_py.run_allcliques``: identical loop, identical step
accounting, identical output stream. See that module for the algorithm
and accounting notes; this file only changes the execution substrate.
"""

from libc.stdlib cimport free, malloc


def run_allcliques(int n, int[:] indptr, int[:] indices, object sink,
                   long long max_outputs=0):
    """Enumerate all cliques; return (clique_count, total_steps, max_gap)."""
    cdef unsigned long long count = 1
    cdef unsigned long long steps = 0, last = 0, max_gap = 0, gap
    cdef long long i, lo, hi, a, b, b_end, out, bufsize, depth_cap
    cdef int x, va, vb, v, d, maxdeg
    cdef int *buf = NULL
    cdef long long *cur = NULL
    cdef long long *end = NULL
    cdef int *chain = NULL

    if sink is not None:
        sink(())
    if max_outputs and <long long>count >= max_outputs:
        return count, 0, 0

    maxdeg = 0
    for v in range(n):
        d = indptr[v + 1] - indptr[v]
        if d > maxdeg:
            maxdeg = d

    bufsize = n + (<long long>maxdeg * (maxdeg + 1)) // 2 + 8
    depth_cap = maxdeg + 4
    buf = <int *>malloc(bufsize * sizeof(int))
    cur = <long long *>malloc(depth_cap * sizeof(long long))
    end = <long long *>malloc(depth_cap * sizeof(long long))
    chain = <int *>malloc(depth_cap * sizeof(int))
    if buf == NULL or cur == NULL or end == NULL or chain == NULL:
        free(buf); free(cur); free(end); free(chain)
        raise MemoryError("clique enumeration workspace")

    try:
        for v in range(n):
            buf[v] = v
        cur[1] = 0
        end[1] = n
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
                sink(tuple([chain[k] for k in range(1, i + 1)]))
            if max_outputs and <long long>count >= max_outputs:
                break
            # V_{i+1} := V_i /\ N(x), written right after the parent region.
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
    finally:
        free(buf)
        free(cur)
        free(end)
        free(chain)
    return count, steps, max_gap
