"""Detection of the loose triangle C_3^(3) and of triangles closed by a non-edge."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .errors import DomainError
from .hypergraph import Hypergraph3, Triple, find_link, normalize_triple


@dataclass(frozen=True)
class TriangleWitness:
    """Three edges forming a loose triangle.

    ``edges`` holds the explicit triples; ``indexes`` holds each edge's index
    in the host graph, or None for an edge that is being added.
    """

    edges: tuple[Triple, Triple, Triple]
    indexes: tuple[int | None, int | None, int | None]
    core: frozenset[int]
    all_vertices: frozenset[int]

    @classmethod
    def from_edges(cls, edges, indexes=(None, None, None)) -> TriangleWitness:
        es = tuple(tuple(sorted(e)) for e in edges)
        core = set()
        for x, y in combinations(es, 2):
            core |= set(x) & set(y)
        return cls(es, tuple(indexes), frozenset(core), frozenset().union(*es))

    def to_json(self) -> dict:
        return {
            "edges": [list(e) for e in self.edges],
            "indexes": list(self.indexes),
            "core": sorted(self.core),
        }


def is_loose_triangle(e1, e2, e3) -> bool:
    """Independent check of the loose-triangle shape on three vertex triples."""
    sets = [set(e) for e in (e1, e2, e3)]
    if any(len(s) != 3 for s in sets):
        return False
    meets = [sets[0] & sets[1], sets[0] & sets[2], sets[1] & sets[2]]
    if any(len(x) != 1 for x in meets):
        return False
    core = set().union(*meets)
    if len(core) != 3:
        return False
    if len(sets[0] | sets[1] | sets[2]) != 6:
        return False
    return all(sum(v in s for s in sets) == 2 for v in core)


def validate_witness(G: Hypergraph3, w: TriangleWitness, added: Triple | None = None) -> bool:
    """Re-check a witness against ``G`` (plus the optional ``added`` non-edge)."""
    if not is_loose_triangle(*w.edges):
        return False
    for e, idx in zip(w.edges, w.indexes):
        if idx is None:
            if added is None or tuple(sorted(added)) != e or G.has_edge(e):
                return False
        elif not (0 <= idx < len(G.edges) and G.edges[idx] == e):
            return False
    core = set()
    for x, y in combinations(w.edges, 2):
        core |= set(x) & set(y)
    return w.core == core and w.all_vertices == frozenset().union(*w.edges)


def _witness(G: Hypergraph3, ids) -> TriangleWitness:
    return TriangleWitness.from_edges([G.edges[i] for i in ids], ids)


def find_triangle(G: Hypergraph3) -> TriangleWitness | None:
    """Loose triangle with the lexicographically least edge-index triple."""
    ids = kernels.find_triangle(G.n, G.edges)
    return None if ids is None else _witness(G, ids)


def find_triangle_bruteforce(G: Hypergraph3) -> TriangleWitness | None:
    # reference oracle: scan every triple of edges
    for ids in combinations(range(len(G.edges)), 3):
        if is_loose_triangle(*(G.edges[i] for i in ids)):
            return _witness(G, ids)
    return None


def creates_triangle(G: Hypergraph3, e) -> TriangleWitness | None:
    """A loose triangle through ``e`` in ``G + e``, or None.

    Looks for a ``u,v``-link avoiding the third vertex for the endpoint pairs
    of ``e`` in ascending order; the first link found closes the triangle.
    """
    t = normalize_triple(e, G.n)
    if G.has_edge(t):
        raise DomainError(f"{t} is already an edge")
    a, b, c = t
    for u, v, w in ((a, b, c), (a, c, b), (b, c, a)):
        link = find_link(G, u, v, (w,))
        if link is not None:
            f, g = link.first_edge, link.second_edge
            return TriangleWitness.from_edges(
                [t, G.edges[f], G.edges[g]], (None, f, g)
            )
    return None
