"""Exact canonical labeling of small 3-uniform hypergraphs.

Colour refinement seeded by (degree, codegree multiset) followed by an
individualization-refinement search tree.  The canonical labeling is the one
whose relabeled, sorted edge list is lexicographically least over all leaves
of the tree.  Automorphisms discovered at equal leaves prune sibling
branches that lie in the same orbit of the pointwise stabilizer of the
current path, as in nauty.

Isolated vertices are never individualized: they are indistinguishable and
do not appear in any edge, so they are labeled in id order within their cell.
"""

from __future__ import annotations

from collections.abc import Sequence

from .hypergraph import Hypergraph3, Triple

Labeling = tuple[int, ...]


def _rank(keys: Sequence) -> list[int]:
    order = sorted(set(keys))
    pos = {k: i for i, k in enumerate(order)}
    return [pos[k] for k in keys]


class _Canon:
    def __init__(self, n: int, edges: Sequence[Triple]):
        self.n = n
        self.edges = edges
        inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for a, b, c in edges:
            inc[a].append((b, c))
            inc[b].append((a, c))
            inc[c].append((a, b))
        self.inc = inc
        self.isolated = [not inc[v] for v in range(n)]
        self.automorphisms: list[tuple[int, ...]] = []
        self.best_key: tuple | None = None
        self.best_lab: list[int] | None = None
        self.first_key: tuple | None = None
        self.first_lab: list[int] | None = None
        self.leaves = 0

    def initial_colors(self) -> list[int]:
        keys = []
        for v in range(self.n):
            co: dict[int, int] = {}
            for a, b in self.inc[v]:
                co[a] = co.get(a, 0) + 1
                co[b] = co.get(b, 0) + 1
            keys.append((len(self.inc[v]), tuple(sorted(co.values()))))
        return _rank(keys)

    def refine(self, colors: list[int]) -> list[int]:
        inc = self.inc
        cells = len(set(colors))
        while True:
            keys = []
            for v in range(self.n):
                sig = sorted(
                    (colors[a], colors[b]) if colors[a] <= colors[b] else (colors[b], colors[a])
                    for a, b in inc[v]
                )
                keys.append((colors[v], tuple(sig)))
            colors = _rank(keys)
            k = len(set(colors))
            if k == cells:
                return colors
            cells = k

    def target_cell(self, colors: list[int]) -> list[int] | None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            if not self.isolated[v]:
                cells.setdefault(c, []).append(v)
        for c in sorted(cells):
            if len(cells[c]) > 1:
                return cells[c]
        return None

    def leaf(self, colors: list[int]) -> None:
        self.leaves += 1
        order = sorted(range(self.n), key=lambda v: (colors[v], v))
        lab = [0] * self.n
        for i, v in enumerate(order):
            lab[v] = i
        key = tuple(sorted(tuple(sorted((lab[a], lab[b], lab[c]))) for a, b, c in self.edges))
        if self.first_key is None:
            self.first_key, self.first_lab = key, lab
        elif key == self.first_key:
            self._record(self.first_lab, lab)
        if self.best_key is None or key < self.best_key:
            self.best_key, self.best_lab = key, lab
        elif key == self.best_key and self.best_lab is not self.first_lab:
            self._record(self.best_lab, lab)

    def _record(self, lab1: list[int], lab2: list[int]) -> None:
        inv1 = [0] * self.n
        for v, x in enumerate(lab1):
            inv1[x] = v
        gamma = tuple(inv1[lab2[v]] for v in range(self.n))
        if any(gamma[v] != v for v in range(self.n)):
            self.automorphisms.append(gamma)

    def orbit_roots(self, fixed: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.automorphisms:
            if all(g[p] == p for p in fixed):
                for v in range(self.n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def search(self, colors: list[int], path: list[int]) -> None:
        cell = self.target_cell(colors)
        if cell is None:
            self.leaf(colors)
            return
        explored: list[int] = []
        for w in cell:
            if explored:
                roots = self.orbit_roots(path)
                if any(roots[u] == roots[w] for u in explored):
                    continue
            keys = [(c, 0 if v == w else 1) for v, c in enumerate(colors)]
            self.search(self.refine(_rank(keys)), path + [w])
            explored.append(w)

    def run(self) -> None:
        self.search(self.refine(self.initial_colors()), [])


def canonize(n: int, edges: Sequence[Triple]) -> tuple[Labeling, tuple[Triple, ...], list[tuple[int, ...]]]:
    """Canonical labels, relabeled edge list and automorphisms found, for a raw
    edge list on ``range(n)``."""
    c = _Canon(n, edges)
    c.run()
    return tuple(c.best_lab), c.best_key, c.automorphisms


def canonical_labeling(G: Hypergraph3) -> tuple[Labeling, tuple[Triple, ...]]:
    """Return ``(labels, edges)`` where ``labels[v]`` is the canonical id of ``v``
    and ``edges`` is the relabeled, sorted edge list."""
    labels, edges, _ = canonize(G.n, G.edges)
    return labels, edges


def automorphism_generators(G: Hypergraph3) -> list[tuple[int, ...]]:
    """Automorphisms found while canonically labeling ``G``.

    Isolated vertices are handled implicitly, so permutations among them are
    not necessarily represented.
    """
    return canonize(G.n, G.edges)[2]


def canonical_key(G: Hypergraph3) -> tuple[int, tuple[Triple, ...]]:
    return G.n, canonical_labeling(G)[1]


def encode_form(n: int, edges: Sequence[Triple]) -> bytes:
    body = ";".join(f"{a},{b},{c}" for a, b, c in edges)
    return f"{n}:{body}".encode("ascii")


def canonical_form(G: Hypergraph3) -> bytes:
    """Byte string equal for two hypergraphs iff they are isomorphic."""
    return encode_form(G.n, canonical_labeling(G)[1])


def canonical_graph(G: Hypergraph3) -> Hypergraph3:
    return Hypergraph3(G.n, canonical_labeling(G)[1])
