"""Pure-Python implementations of the hot kernels.

Both kernels take a vertex count and an edge list of ascending triples in
lexicographic order (the storage order of :class:`Hypergraph3`), so they can
be swapped with the compiled versions in ``_ckernels``.
"""

from __future__ import annotations

from collections.abc import Sequence

Triple = tuple[int, int, int]


def _incidence(n: int, edges: Sequence[Triple]) -> list[list[int]]:
    inc: list[list[int]] = [[] for _ in range(n)]
    for i, (a, b, c) in enumerate(edges):
        inc[a].append(i)
        inc[b].append(i)
        inc[c].append(i)
    return inc


def link_blocks(n: int, edges: Sequence[Triple]) -> dict[tuple[int, int], frozenset[int]]:
    """For every good pair ``p < q``, the vertices lying on *every* ``p,q``-link.

    A non-edge ``{p, q, w}`` is closed into a loose triangle through the pair
    ``p, q`` iff ``p, q`` is good and ``w`` is not in its block.  Pairs that
    are absent from the result are bad: they block every third vertex.
    """
    inc = _incidence(n, edges)
    blocks: dict[tuple[int, int], frozenset[int]] = {}
    for z in range(n):
        mine = inc[z]
        others = []
        for i in mine:
            a, b, c = edges[i]
            others.append((b, c) if a == z else (a, c) if b == z else (a, b))
        k = len(mine)
        for i in range(k):
            f0, f1 = others[i]
            for j in range(i + 1, k):
                g0, g1 = others[j]
                if f0 == g0 or f0 == g1 or f1 == g0 or f1 == g1:
                    continue
                for p, p2 in ((f0, f1), (f1, f0)):
                    for q, q2 in ((g0, g1), (g1, g0)):
                        key = (p, q) if p < q else (q, p)
                        on_link = frozenset((z, p2, q2))
                        cur = blocks.get(key)
                        blocks[key] = on_link if cur is None else cur & on_link
    return blocks


def first_uncovered(
    n: int, edges: Sequence[Triple], lo: int = 0, hi: int | None = None
) -> Triple | None:
    """Least non-edge ``(a, b, c)`` with ``lo <= a < hi`` whose insertion creates
    no loose triangle, or None."""
    if hi is None:
        hi = n
    blocks = link_blocks(n, edges)
    edge_set = set(edges)
    get = blocks.get
    for a in range(lo, min(hi, n)):
        for b in range(a + 1, n):
            block = get((a, b))
            if block is None:
                cands = range(b + 1, n)
            else:
                cands = sorted(c for c in block if c > b)
            for c in cands:
                if (a, b, c) in edge_set:
                    continue
                bl = get((a, c))
                if bl is not None and b not in bl:
                    continue
                bl = get((b, c))
                if bl is not None and a not in bl:
                    continue
                return (a, b, c)
    return None


def find_triangle(n: int, edges: Sequence[Triple]) -> tuple[int, int, int] | None:
    """Lexicographically least edge-index triple ``i < j < k`` forming a loose
    triangle, or None."""
    inc = _incidence(n, edges)
    pairs: dict[tuple[int, int], list[int]] = {}
    for i, (a, b, c) in enumerate(edges):
        for p in ((a, b), (a, c), (b, c)):
            pairs.setdefault(p, []).append(i)
    for i, e in enumerate(edges):
        seen = set()
        for z in e:
            for j in inc[z]:
                if j <= i or j in seen:
                    continue
                seen.add(j)
        for j in sorted(seen):
            f = edges[j]
            common = [v for v in e if v in f]
            if len(common) != 1:
                continue
            z = common[0]
            best = None
            for p in e:
                if p == z:
                    continue
                for q in f:
                    if q == z:
                        continue
                    for k in pairs.get((p, q) if p < q else (q, p), ()):
                        if k <= j or (best is not None and k >= best):
                            continue
                        g = edges[k]
                        r = g[0] + g[1] + g[2] - p - q
                        if r in e or r in f:
                            continue
                        best = k
            if best is not None:
                return (i, j, best)
    return None
